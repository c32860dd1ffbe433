// Acceptance run: one pass/fail line per criterion.
//
//   acceptance [unit_tests binary] [cli test script] [bhc binary]
//
// With the optional arguments, criterion 11 times the unit and CLI suites
// together with criteria 1-10.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bhc/catalog.hpp"
#include "bhc/cocyclic.hpp"
#include "bhc/homology.hpp"
#include "bhc/sayd.hpp"
#include "bhc/superlie.hpp"

using namespace bhc;
using Dims = std::vector<Index>;

namespace {

struct Fail {
  std::string why;
};

void need(bool ok, const std::string& why) {
  if (!ok) throw Fail{why};
}

std::string show(const Dims& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void need_report(const CheckReport& r, const std::string& what) {
  if (const CheckEntry* f = r.first_failure()) need(false, what + ": " + f->name + " fails at " + f->witness);
}

std::vector<CatalogEntry> hopf_entries() {
  std::vector<CatalogEntry> out;
  for (const auto& n : example_names()) {
    CatalogEntry e = load_example(n);
    if (e.hopf) out.push_back(std::move(e));
  }
  return out;
}

LinearMap coboundary(const ParaCocyclicModule& P, unsigned n) {
  LinearMap b(P.spaces[n], P.spaces[n + 1]);
  for (unsigned i = 0; i <= n + 1; ++i) b += i % 2 ? -P.face(n + 1, i) : P.face(n + 1, i);
  return b;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- criteria ---------------------------------------------------------------------

std::string axioms() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t mutants = 0;
  for (const auto& e : hopf_entries()) {
    const HopfObject& h = *e.hopf;
    need_report(verify_hopf(h), e.name);
    need_report(derived_identities(h), e.name);
    const HopfData base = h.data();
    for (int which = 0; which < 5; ++which) {
      const LinearMap& f = which == 0 ? base.m : which == 1 ? base.eta : which == 2 ? base.delta : which == 3 ? base.eps : base.S;
      const auto triples = f.triples();
      for (std::size_t t = 0; t < triples.size(); ++t) {
        auto mutated = triples;
        std::get<2>(mutated[t]) = -std::get<2>(mutated[t]);
        HopfData d = base;
        (which == 0 ? d.m : which == 1 ? d.eta : which == 2 ? d.delta : which == 3 ? d.eps : d.S) =
            LinearMap::from_triples(f.domain(), f.codomain(), mutated);
        need(!verify_hopf(HopfObject::make(h.category(), h.carrier(), d, "mutant")).passed(),
             e.name + ": a mutant passes every axiom");
        ++mutants;
      }
    }
  }
  const double s = seconds_since(t0);
  need(s < 5.0, "took " + std::to_string(s) + " s");
  return std::to_string(mutants) + " mutants rejected";
}

std::string twisted_antipode_lemma() {
  const HopfObject a = *load_example("anyon_line_4").hopf;
  const Character eps = counit_character(a);
  need_report(check_twisted_antipode(a, eps), "anyon_line_4");
  const LinearMap lhs = compose({a.m(), tensor(compose(a.S(), a.S()), twisted_antipode(a, eps)), a.psi(), a.delta()});
  need(lhs == compose(a.eta(), eps.map), "m(S²⊗S̃)ψΔ ≠ ηδ");
  // θ and θ² are the basis vectors 1 and 2
  need(lhs.column(1).empty() && lhs.column(2).empty(), "nonzero on θ or θ²");
  return "m(S²⊗S̃)ψΔ = ηδ on ℤ₄ anyonic line";
}

std::string s_squared_and_bmpi() {
  std::size_t pass = 0, fail = 0;
  for (const auto& e : hopf_entries()) {
    need_report(check_s_squared(*e.hopf), e.name);
    for (std::size_t p = 0; p < e.pairs.size(); ++p) {
      const CheckReport r = check_bmpi(*e.hopf, e.pairs[p]);
      need(r.passed() == e.bmpi_expected[p], e.name + " " + e.pairs[p].name + ": BMPI verdict differs from documentation");
      (r.passed() ? pass : fail)++;
    }
  }
  const CatalogEntry cz2 = load_example("cz2");
  need(cz2.pairs.size() == 2, "cz2 should carry (ε,1) and (δ₋,1)");
  for (const auto& p : cz2.pairs) need(check_bmpi(*cz2.hopf, p).passed(), "cz2 " + p.name + " fails BMPI");
  for (const char* n : {"super_ext_1", "super_ext_2", "super_ext_3"}) {
    const CatalogEntry e = load_example(n);
    for (const auto& p : e.pairs) need(check_bmpi(*e.hopf, p).passed(), std::string(n) + " fails BMPI");
  }
  const CatalogEntry a = load_example("anyon_line_4");
  const CheckReport r = check_bmpi(*a.hopf, a.pairs[0]);
  need(!r.passed() && r.first_failure()->witness == "θ²", "anyon_line_4 BMPI should fail at θ²");
  return std::to_string(pass) + " BMPI pass, " + std::to_string(fail) + " fail (anyon witness θ²)";
}

std::string sayd_iff_bmpi() {
  std::size_t both = 0, neither = 0;
  for (const auto& e : hopf_entries())
    for (const auto& p : e.pairs) {
      const SaydModule s = sigma_I_delta(*e.hopf, p);
      const bool sayd = check_aYD(s).passed() && check_stability(s).passed();
      const bool bmpi = check_bmpi(*e.hopf, p).passed();
      need(sayd == bmpi, e.name + " " + p.name + ": SAYD " + (sayd ? "holds" : "fails") + " but BMPI " + (bmpi ? "holds" : "fails"));
      (sayd ? both : neither)++;
    }
  need(both > 0 && neither > 0, "only one direction exercised");
  return std::to_string(both) + " SAYD+BMPI, " + std::to_string(neither) + " neither";
}

std::string cocyclic_identities() {
  std::size_t modules = 0;
  for (const char* n : {"cz2", "super_ext_1", "super_ext_2"}) {
    const CatalogEntry e = load_example(n);
    for (const auto& p : e.pairs) {
      const ParaCocyclicModule P = build_cm(*e.hopf, p, 3);
      const CheckReport r = verify_identities(P);
      need_report(r, P.name);
      for (unsigned k = 0; k <= 3; ++k) {
        const CheckEntry* t = r.find("τ_n^{n+1} = id [n=" + std::to_string(k) + "]");
        need(t && t->passed, P.name + ": τ^{n+1} ≠ id at n=" + std::to_string(k));
      }
      ++modules;
    }
  }
  for (const char* n : {"super_ext_1", "super_ext_2", "super_ext_3"}) {
    const CatalogEntry e = load_example(n);
    for (const auto& p : e.pairs) {
      const ParaCocyclicModule A = build_cm(*e.hopf, p, 3), B = build_cm_super(*e.hopf, p, 3);
      for (unsigned k = 0; k <= 3; ++k) need(A.spaces[k] == B.spaces[k] && A.tau[k] == B.tau[k], std::string(n) + ": τ differs");
      for (unsigned k = 1; k <= 3; ++k)
        for (unsigned i = 0; i <= k; ++i) need(A.face(k, i) == B.face(k, i), std::string(n) + ": faces differ");
      for (unsigned k = 0; k < 3; ++k)
        for (unsigned i = 0; i <= k; ++i) need(A.degeneracy(k, i) == B.degeneracy(k, i), std::string(n) + ": degeneracies differ");
    }
  }
  return std::to_string(modules) + " modules verified to degree 3, cm-super = cm";
}

std::string tau_powers() {
  std::size_t symmetric = 0;
  for (const auto& e : hopf_entries()) {
    const HopfObject& h = *e.hopf;
    if (!compose(h.psi(), h.psi()).is_identity()) continue;
    ++symmetric;
    for (const auto& p : e.pairs) {
      const ParaCocyclicModule P = build_cm(h, p, 3);
      for (unsigned n = 1; n <= 3; ++n) need(tau_power(P, n).equal, e.name + ": τ_n^{n+1} ≠ ψ^n at n=" + std::to_string(n));
    }
  }
  const CatalogEntry a = load_example("anyon_line_4");
  const ParaCocyclicModule P = build_cm(*a.hopf, a.pairs[0], 1);
  const CocyclicModule C = restrict_to_cyclic(P);
  need(C.pieces[1].dim() == 2, "anyon restriction at degree 1 has dim " + std::to_string(C.pieces[1].dim()));
  std::set<std::string> support;
  for (Index j = 0; j < C.pieces[1].dim(); ++j)
    for (const auto& [i, c] : C.pieces[1].embed.column(j)) support.insert(P.spaces[1].label(i));
  need(support == std::set<std::string>{"1", "θ"}, "kernel is not span{1, θ}");
  need(power(C.restricted.tau[1], 2).is_identity(), "restricted τ² ≠ id");
  return std::to_string(symmetric) + " symmetric entries; anyon ker = span{1, θ}";
}

std::string balanced_triple() {
  const CatalogEntry e = load_example("cz2");
  const HopfObject& h = *e.hopf;
  const ParaCocyclicModule cm = build_cm(h, e.pairs[0], 3);
  const ParaCocyclicModule tri = build_triple(regular_module_coalgebra(h), sigma_I_delta(h, e.pairs[0]), 3, true);
  std::vector<LinearMap> iso;
  for (unsigned k = 0; k <= 3; ++k) {
    iso.push_back(balanced_identification(tri, h, k));
    need(inverse(iso.back()).has_value(), "identification not invertible");
    need(compose(iso[k], cm.tau[k]) == compose(tri.tau[k], iso[k]), "τ differs at n=" + std::to_string(k));
  }
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned i = 0; i <= k; ++i)
      need(compose(iso[k], cm.face(k, i)) == compose(tri.face(k, i), iso[k - 1]), "δ differs at n=" + std::to_string(k));
  for (unsigned k = 0; k < 3; ++k)
    for (unsigned i = 0; i <= k; ++i)
      need(compose(iso[k], cm.degeneracy(k, i)) == compose(tri.degeneracy(k, i), iso[k + 1]), "σ differs at n=" + std::to_string(k));
  std::size_t n = 0;
  for (const auto& x : hopf_entries()) need_report(check_phi_isomorphism(*x.hopf), x.name), ++n;
  return "triple = cm through degree 3; φ verified on " + std::to_string(n) + " entries";
}

std::string calibration() {
  std::vector<std::pair<std::string, ParaCocyclicModule>> complexes;
  for (const auto& e : hopf_entries()) {
    if (e.hopf->H().dim() > 4) continue;
    for (const auto& p : e.pairs) {
      ParaCocyclicModule P = build_cm(*e.hopf, p, 5, 5);
      bool cyclic = true;
      for (unsigned n = 0; n <= 5; ++n) cyclic = cyclic && power(P.tau[n], n + 1).is_identity();
      if (!cyclic) P = restrict_to_cyclic(P).restricted;
      complexes.emplace_back(e.name + " " + p.name, std::move(P));
    }
  }
  for (const auto& [name, P] : complexes) {
    const std::vector<LinearMap> B = connes_B(P);
    need(B.size() >= 5, name + ": B stops early");
    for (unsigned k = 0; k + 1 < 5; ++k) need(compose(coboundary(P, k + 1), coboundary(P, k)).is_zero(), name + ": b² ≠ 0");
    for (unsigned k = 0; k + 1 < 5; ++k) need(compose(B[k], B[k + 1]).is_zero(), name + ": B² ≠ 0");
    need(compose(B[0], coboundary(P, 0)).is_zero(), name + ": Bb ≠ 0 on C⁰");
    for (unsigned k = 1; k <= 4; ++k)
      need((compose(coboundary(P, k - 1), B[k - 1]) + compose(B[k], coboundary(P, k))).is_zero(),
           name + ": bB + Bb ≠ 0 on C^" + std::to_string(k));
  }
  return std::to_string(complexes.size()) + " complexes through degree 4";
}

std::string hc_two_ways() {
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream msg;
  for (const auto& [n, want] : std::vector<std::pair<std::string, Dims>>{{"cz2", {1, 0, 1, 0, 1}}, {"super_ext_1", {1, 1, 2, 2, 3}}}) {
    const HopfObject h = *load_example(n).hopf;
    const Dims hc = cyclic_cohomology(h, trivial_pair(h), 4);
    const Dims sums = parity_partial_sums(cotor(h, unit_cocharacter(h), 4));
    need(hc == want, n + ": bicomplex gives " + show(hc));
    need(sums == want, n + ": Cotor sums give " + show(sums));
    msg << (msg.tellp() ? "; " : "") << n << " " << show(hc);
  }
  const double s = seconds_since(t0);
  need(s < 30.0, "took " + std::to_string(s) + " s");
  return msg.str();
}

std::string lie() {
  const SuperLieAlgebra odd = *load_example("lie_odd_abelian_1").lie;
  const SuperLieAlgebra axb = *load_example("lie_ax_b").lie;
  for (const SuperLieAlgebra* g : {&odd, &axb}) {
    const ChainComplex c = ce_differential(*g, 4);
    for (std::size_t k = 1; k < c.d.size(); ++k) need(compose(c.d[k - 1], c.d[k]).is_zero(), "CE d² ≠ 0");
  }
  need(lie_homology(odd, 4) == Dims{1, 1, 1, 1, 1}, "lie_odd_abelian_1 homology " + show(lie_homology(odd, 4)));
  need(lie_homology(axb, 2) == Dims{1, 1, 0}, "lie_ax_b homology " + show(lie_homology(axb, 2)));
  need_report(check_BA_equals_Ad(odd, 3), "lie_odd_abelian_1");
  need_report(check_BA_equals_Ad(axb, 2), "lie_ax_b");
  const LieComparison c = compare_cyclic_with_lie(odd, 4);
  need(c.hc == Dims{1, 1, 2, 2, 3}, "HC of Λ(θ) " + show(c.hc));
  need(c.hc == parity_partial_sums(c.lie), "HC ≠ partial sums of H_i");
  return "HC " + show(c.hc) + " = partial sums of " + show(c.lie);
}

int run_external(const std::string& cmd) { return std::system((cmd + " >/dev/null 2>&1").c_str()); }

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    const char* name;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria = {
      {"Hopf axioms, derived identities, mutation", axioms},
      {"twisted antipode in a non-symmetric category", twisted_antipode_lemma},
      {"S² implication and BMPI verdicts", s_squared_and_bmpi},
      {"σI_δ is SAYD iff BMPI", sayd_iff_bmpi},
      {"para-cocyclic identities, cm-super = cm", cocyclic_identities},
      {"τ_n^{n+1} = braiding power; anyon restriction", tau_powers},
      {"balanced triple and φ-isomorphism", balanced_triple},
      {"b² = 0, B² = 0, bB + Bb = 0", calibration},
      {"HC by bicomplex and by Cotor", hc_two_ways},
      {"Chevalley-Eilenberg, BA = Ad, HC of U(g)", lie},
  };
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string verdict, info;
    try {
      info = criteria[i].run();
      verdict = "PASS";
    } catch (const Fail& f) {
      verdict = "FAIL", info = f.why;
    } catch (const std::exception& e) {
      verdict = "FAIL", info = std::string("error: ") + e.what();
    }
    failures += verdict != "PASS";
    std::printf("[%s] %2zu %s (%.2f s): %s\n", verdict.c_str(), i + 1, criteria[i].name, seconds_since(t0), info.c_str());
  }

  std::string info;
  bool ok = true;
  if (argc > 1) {
    ok = run_external(argv[1]) == 0;
    info = ok ? "unit tests pass" : "unit tests fail";
  }
  if (argc > 3 && ok) {
    ok = run_external(std::string(argv[2]) + " " + argv[3]) == 0;
    info += ok ? ", CLI tests pass" : ", CLI tests fail";
  }
  const double total = seconds_since(start);
  ok = ok && total < 60.0;
  failures += !ok;
  std::printf("[%s] 11 whole suite under 60 s (%.2f s)%s\n", ok ? "PASS" : "FAIL", total, info.empty() ? "" : (": " + info).c_str());
  return failures ? 1 : 0;
}
