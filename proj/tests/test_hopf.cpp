#include <map>

#include "bhc/catalog.hpp"
#include "bhc/hopf.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bhc;
using support::image;
using support::q;

namespace {

using Pair = std::pair<Index, Index>;
using TensorElt = std::map<Pair, Scalar>;

std::vector<std::string> hopf_entries() {
  std::vector<std::string> out;
  for (const auto& n : example_names())
    if (load_example(n).hopf) out.push_back(n);
  return out;
}

// (a⊗b)(c⊗d) = χ(|b|,|c|) ac ⊗ bd, using the entry's own product on basis vectors
TensorElt braided_product(const HopfObject& h, const TensorElt& x, const TensorElt& y) {
  const BraidedCategory& cat = h.cat();
  TensorElt out;
  for (const auto& [ab, s] : x)
    for (const auto& [cd, t] : y) {
      Scalar sign = cat.graded() ? cat.chi(cat.grade_of(h.H(), ab.second), cat.grade_of(h.H(), cd.first))
                                 : Scalar(h.field(), 1L);
      const Index d = h.H().dim();
      for (const auto& [ac, u] : h.m().column(ab.first * d + cd.first))
        for (const auto& [bd, v] : h.m().column(ab.second * d + cd.second)) {
          Scalar& slot = out.try_emplace({ac, bd}, Scalar(h.field())).first->second;
          slot += s * t * sign * u * v;
        }
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

TensorElt column_of(const HopfObject& h, Index i) {
  TensorElt out;
  const Index d = h.H().dim();
  for (const auto& [k, c] : h.delta().column(i)) out.emplace(Pair{k / d, k % d}, c);
  return out;
}

}  // namespace

TEST_CASE("every catalog Hopf entry satisfies the nine axioms and the derived identities") {
  for (const auto& n : hopf_entries()) {
    CAPTURE(n);
    const HopfObject h = *load_example(n).hopf;
    const CheckReport ax = verify_hopf(h);
    CHECK(ax.entries().size() == 9);
    CHECK(ax.passed());
    const CheckReport der = derived_identities(h);
    CHECK(der.passed());
    CHECK(der.entries().size() == 7);
    CHECK(check_s_squared(h).passed());
  }
}

TEST_CASE("oracle: anyonic line coproduct equals the braided powers of Δθ") {
  const HopfObject h = *load_example("anyon_line_4").hopf;
  const Field F = h.field();
  // θ^a θ^b = θ^{a+b}, zero past θ³
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) {
      const SparseVec col = h.m().column(a * 4 + b);
      if (a + b < 4) CHECK(col == SparseVec{{a + b, support::in(F, 1)}});
      else CHECK(col.empty());
    }
  const TensorElt dtheta = {{{1, 0}, support::in(F, 1)}, {{0, 1}, support::in(F, 1)}};
  TensorElt power = {{{0, 0}, support::in(F, 1)}};
  for (Index k = 0; k < 4; ++k) {
    CAPTURE(k);
    CHECK(power == column_of(h, k));
    power = braided_product(h, power, dtheta);
  }
  // Δ(θ⁴) = (Δθ)⁴ must vanish: the Gaussian binomials [4, j] are zero at q = ζ₄ for 0 < j < 4
  CHECK(power.empty());
  CHECK(image(h.delta(), "θ²") == std::map<std::string, Scalar>{{"1⊗θ²", support::in(F, 1)},
                                                                {"θ⊗θ", support::in(F, 1) + support::zeta(F, 4, 1)},
                                                                {"θ²⊗1", support::in(F, 1)}});
}

TEST_CASE("oracle: exterior algebra product by sorting and coproduct by braided powers") {
  for (unsigned k = 1; k <= 3; ++k) {
    const HopfObject h = *load_example("super_ext_" + std::to_string(k)).hopf;
    CAPTURE(k);
    const Index d = h.H().dim();
    REQUIRE(d == (Index{1} << k));
    std::vector<Index> gen;
    for (unsigned i = 1; i <= k; ++i) gen.push_back(support::idx(h.H(), k == 1 ? "θ" : "θ" + std::to_string(i)));
    std::vector<TensorElt> prim;
    for (Index g : gen) prim.push_back({{{g, 0}, q(1)}, {{0, g}, q(1)}});
    // θ_{i1}...θ_{ir} for increasing i is the basis vector labelled by the concatenation
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::string label;
      TensorElt acc = {{{0, 0}, q(1)}};
      for (unsigned i = 0; i < k; ++i)
        if (mask >> i & 1) {
          label += k == 1 ? "θ" : "θ" + std::to_string(i + 1);
          acc = braided_product(h, acc, prim[i]);
        }
      CAPTURE(label);
      CHECK(acc == column_of(h, support::idx(h.H(), label)));
    }
    // θ_j θ_i = -θ_i θ_j and θ_i² = 0
    for (Index i : gen) {
      CHECK(h.m().column(i * d + i).empty());
      for (Index j : gen)
        if (j != i) CHECK(h.m().column(j * d + i) == scaled(h.m().column(i * d + j), q(-1)));
    }
  }
}

TEST_CASE("corrupted antipode on CZ2 fails with witness g") {
  const HopfObject good = *load_example("cz2").hopf;
  HopfData d = good.data();
  d.S = LinearMap::from_triples(d.H, d.H, {{0, 0, q(1)}, {0, 1, q(1)}});  // S(g) = 1
  const HopfObject bad = HopfObject::make(good.category(), good.carrier(), d, "CZ2'");
  const CheckReport r = verify_hopf(bad);
  const CheckEntry* f = r.first_failure();
  REQUIRE(f);
  CHECK(f->name == "antipode m(S⊗1)Δ = ηε = m(1⊗S)Δ");
  CHECK(f->witness == "g");
  CHECK_THROWS_AS(derived_identities(bad), Error);
}

TEST_CASE("mutating any single structure constant breaks an axiom") {
  for (const auto& n : hopf_entries()) {
    CAPTURE(n);
    const HopfObject h = *load_example(n).hopf;
    const HopfData base = h.data();
    for (int which = 0; which < 5; ++which) {
      const LinearMap& f = which == 0 ? base.m : which == 1 ? base.eta : which == 2 ? base.delta : which == 3 ? base.eps : base.S;
      const auto triples = f.triples();
      for (std::size_t t = 0; t < triples.size(); ++t) {
        auto mutated = triples;
        std::get<2>(mutated[t]) = -std::get<2>(mutated[t]);
        HopfData d = base;
        LinearMap g = LinearMap::from_triples(f.domain(), f.codomain(), mutated);
        (which == 0 ? d.m : which == 1 ? d.eta : which == 2 ? d.delta : which == 3 ? d.eps : d.S) = g;
        CAPTURE(which);
        CAPTURE(t);
        const HopfObject hm = HopfObject::make(h.category(), h.carrier(), d, "mutant");
        CHECK_FALSE(verify_hopf(hm).passed());
      }
    }
  }
}

TEST_CASE("derived identity examples") {
  const HopfObject a = *load_example("anyon_line_4").hopf;
  const Field F = a.field();
  // S(θ·θ) = mψ(Sθ⊗Sθ) = ζ₄ θ²
  CHECK(image(a.S(), "θ²") == std::map<std::string, Scalar>{{"θ²", support::zeta(F, 4, 1)}});
  CHECK(derived_identities(a).find("Sm = mψ(S⊗S)")->passed);
  for (const auto& n : hopf_entries()) {
    const HopfObject h = *load_example(n).hopf;
    CHECK(compose(h.S(), h.eta()) == h.eta());
  }
}

TEST_CASE("twisted antipode") {
  const HopfObject lam = *load_example("super_ext_1").hopf;
  CHECK(twisted_antipode(lam, counit_character(lam)) == lam.S());
  CHECK(image(twisted_antipode(lam, counit_character(lam)), "θ") == std::map<std::string, Scalar>{{"θ", q(-1)}});

  const CatalogEntry cz2 = load_example("cz2");
  const LinearMap St = twisted_antipode(*cz2.hopf, cz2.pairs[1].delta);
  CHECK(image(St, "g") == std::map<std::string, Scalar>{{"g", q(-1)}});
  CHECK(check_twisted_antipode(*cz2.hopf, cz2.pairs[1].delta, &cz2.pairs[1].sigma).passed());

  // the lemma m(S²⊗S̃)ψΔ = ηδ in the non-symmetric anyonic line
  const HopfObject a = *load_example("anyon_line_4").hopf;
  const CheckReport r = check_twisted_antipode(a, counit_character(a), nullptr);
  CHECK(r.passed());
  const LinearMap lhs = compose({a.m(), tensor(compose(a.S(), a.S()), twisted_antipode(a, counit_character(a))), a.psi(), a.delta()});
  CHECK(image(lhs, "θ").empty());
  CHECK(image(lhs, "θ²").empty());
  CHECK(image(lhs, "1") == std::map<std::string, Scalar>{{"1", support::in(a.field(), 1)}});

  // a character from another host is rejected
  CHECK_THROWS_AS(twisted_antipode(a, counit_character(lam)), Error);
}

TEST_CASE("modular pairs") {
  const CatalogEntry e = load_example("cz2");
  const HopfObject& h = *e.hopf;
  CHECK(check_modular_pair(h, counit_character(h), unit_cocharacter(h)).passed());
  CHECK(check_modular_pair(h, e.pairs[1].delta, unit_cocharacter(h)).passed());
  // σ(1) = g with δ(g) = -1: δσ = -1
  const Cocharacter g{LinearMap::from_triples(h.I(), h.H(), {{1, 0, q(1)}})};
  const CheckReport r = check_modular_pair(h, e.pairs[1].delta, g);
  CHECK_FALSE(r.passed());
  CHECK(r.first_failure()->name == "δσ = id_I");
  CHECK_THROWS_AS(ModularPair::make(h, e.pairs[1].delta, g), Error);
  // validated constructors
  CHECK_THROWS_AS(Character::make(h, LinearMap::from_triples(h.H(), h.I(), {{0, 0, q(1)}, {0, 1, q(2)}})), Error);
  CHECK_THROWS_AS(Cocharacter::make(h, LinearMap::from_triples(h.I(), h.H(), {{0, 0, q(1)}, {1, 0, q(1)}})), Error);
}

TEST_CASE("BMPI verdicts") {
  const CatalogEntry lam = load_example("super_ext_1");
  CHECK(check_bmpi(*lam.hopf, lam.pairs[0]).passed());

  const CatalogEntry cz2 = load_example("cz2");
  CHECK(check_bmpi(*cz2.hopf, cz2.pairs[1]).passed());

  const CatalogEntry a = load_example("anyon_line_4");
  const CheckReport r = check_bmpi(*a.hopf, a.pairs[0]);
  REQUIRE_FALSE(r.passed());
  CHECK(r.entries()[0].witness == "θ²");
  REQUIRE(r.entries()[0].matrix);
  // S²(θ²) = -θ²
  CHECK(image(*r.entries()[0].matrix, "θ²") == std::map<std::string, Scalar>{{"θ²", support::in(a.hopf->field(), -1)}});
}

TEST_CASE("S² criterion") {
  const HopfObject cz2 = *load_example("cz2").hopf;
  const CheckReport c = check_s_squared(cz2);
  CHECK(c.find("mψ = m")->passed);
  CHECK(c.find("Δ = ψΔ")->passed);
  CHECK(c.find("S² = id")->passed);

  const HopfObject lam = *load_example("super_ext_1").hopf;
  CHECK(is_braided_commutative(lam));
  CHECK(check_s_squared(lam).find("S² = id")->passed);

  const HopfObject a = *load_example("anyon_line_4").hopf;
  const CheckReport r = check_s_squared(a);
  CHECK_FALSE(r.find("mψ = m")->passed);
  CHECK_FALSE(r.find("Δ = ψΔ")->passed);
  CHECK_FALSE(r.find("S² = id")->passed);
  CHECK(r.passed());
}

TEST_CASE("structure maps must be morphisms of the category") {
  const HopfObject lam = *load_example("super_ext_1").hopf;
  HopfData d = lam.data();
  d.S = LinearMap::from_triples(d.H, d.H, {{0, 0, q(1)}, {1, 1, q(-1)}, {0, 1, q(1)}});  // mixes parities
  CHECK_THROWS_AS(HopfObject::make(lam.category(), lam.carrier(), d), Error);
}
