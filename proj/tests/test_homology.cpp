#include "bhc/catalog.hpp"
#include "bhc/homology.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

using namespace bhc;
using support::q;

namespace {

using Dims = std::vector<Index>;

oracle::Table stack(const LinearMap& a, const LinearMap& b) {
  oracle::Table t = a.dense();
  for (auto& row : b.dense()) t.push_back(row);
  return t;
}

LinearMap lambda(const ParaCocyclicModule& P, unsigned n) { return n % 2 ? -P.tau[n] : P.tau[n]; }

// b: C^n → C^{n+1} straight from the faces
LinearMap coboundary(const ParaCocyclicModule& P, unsigned n) {
  LinearMap b(P.spaces[n], P.spaces[n + 1]);
  for (unsigned i = 0; i <= n + 1; ++i) b += i % 2 ? -P.face(n + 1, i) : P.face(n + 1, i);
  return b;
}

// HC^n as the cohomology of Connes' complex ker(1 - λ) with b, by dense ranks only
Dims connes_complex_hc(const ParaCocyclicModule& P, unsigned n_max) {
  auto one_minus = [&](unsigned n) { return LinearMap::identity(P.spaces[n]) - lambda(P, n); };
  auto cycles = [&](unsigned n) { return P.spaces[n].dim() - oracle::dense_rank(stack(one_minus(n), coboundary(P, n))); };
  auto cochains = [&](unsigned n) { return P.spaces[n].dim() - oracle::dense_rank(one_minus(n)); };
  Dims out;
  for (unsigned n = 0; n <= n_max; ++n) {
    Index boundaries = n == 0 ? 0 : cochains(n - 1) - cycles(n - 1);
    out.push_back(cycles(n) - boundaries);
  }
  return out;
}

// N s (1 - λ) with no sign adjustment
LinearMap raw_B(const ParaCocyclicModule& P, unsigned n) {
  LinearMap N(P.spaces[n], P.spaces[n]), li = LinearMap::identity(P.spaces[n]);
  for (unsigned i = 0; i <= n; ++i) N += li, li = compose(lambda(P, n), li);
  const LinearMap s = compose(P.degeneracy(n, n), P.tau[n + 1]);
  return compose({N, s, LinearMap::identity(P.spaces[n + 1]) - lambda(P, n + 1)});
}

}  // namespace

TEST_CASE("cyclic cohomology values") {
  const CatalogEntry cz2 = load_example("cz2");
  CHECK(cyclic_cohomology(*cz2.hopf, cz2.pairs[0], 4) == Dims{1, 0, 1, 0, 1});
  CHECK(cyclic_cohomology(*cz2.hopf, cz2.pairs[1], 4) == Dims{1, 0, 1, 0, 1});
  const CatalogEntry e1 = load_example("super_ext_1");
  CHECK(cyclic_cohomology(*e1.hopf, e1.pairs[0], 4) == Dims{1, 1, 2, 2, 3});
  const CatalogEntry e2 = load_example("super_ext_2");
  CHECK(cyclic_cohomology(*e2.hopf, e2.pairs[0], 3) == Dims{1, 2, 4, 6});
}

TEST_CASE("Cotor values") {
  const HopfObject cz2 = *load_example("cz2").hopf;
  CHECK(cotor(cz2, unit_cocharacter(cz2), 4) == Dims{1, 0, 0, 0, 0});
  const HopfObject e1 = *load_example("super_ext_1").hopf;
  CHECK(cotor(e1, unit_cocharacter(e1), 4) == Dims{1, 1, 1, 1, 1});
  CHECK(hochschild_dims(cz2, trivial_pair(cz2), 3) == Dims{1, 0, 0, 0});
  CHECK(hochschild_dims(e1, trivial_pair(e1), 3) == Dims{1, 1, 1, 1});
}

TEST_CASE("oracle: staircase totals agree with Connes' complex") {
  struct Case {
    const char* name;
    unsigned n;
  };
  for (const Case c : {Case{"cz2", 3}, Case{"super_ext_1", 3}, Case{"super_ext_2", 2}, Case{"group_z_3", 2}}) {
    const CatalogEntry e = load_example(c.name);
    for (const auto& p : e.pairs) {
      CAPTURE(c.name);
      CAPTURE(p.name);
      const ParaCocyclicModule P = build_cm(*e.hopf, p, c.n + 1);
      const Dims hc = cyclic_cohomology(P, c.n);
      CHECK(hc == connes_complex_hc(P, c.n));
      CHECK(hc == cyclic_cohomology(P, c.n, StaircaseOrder::row_first));
    }
  }
  // the restricted anyonic line is cocyclic even though the full one is not
  const CatalogEntry a = load_example("anyon_line_4");
  const ParaCocyclicModule P = build_cm(*a.hopf, a.pairs[0], 3);
  CHECK_THROWS_AS(connes_B(P), Error);
  const ParaCocyclicModule R = restrict_to_cyclic(P).restricted;
  CHECK(cyclic_cohomology(R, 2) == connes_complex_hc(R, 2));
}

TEST_CASE("B is the raw formula and anticommutes with b") {
  for (const char* n : {"cz2", "super_ext_1", "super_ext_2", "group_z_4", "cz2_rmatrix"}) {
    const CatalogEntry e = load_example(n);
    for (const auto& p : e.pairs) {
      CAPTURE(n);
      CAPTURE(p.name);
      const ParaCocyclicModule P = build_cm(*e.hopf, p, 3);
      const std::vector<LinearMap> B = connes_B(P);
      REQUIRE(B.size() == 3);
      for (unsigned k = 0; k < 3; ++k) CHECK(B[k] == raw_B(P, k));  // no sign was flipped
      for (unsigned k = 0; k + 1 < 3; ++k) CHECK(compose(B[k], B[k + 1]).is_zero());
      for (unsigned k = 1; k < 3; ++k) CHECK((compose(coboundary(P, k - 1), B[k - 1]) + compose(B[k], coboundary(P, k))).is_zero());
      CHECK(compose(B[0], coboundary(P, 0)).is_zero());
    }
  }
}

TEST_CASE("Hochschild coboundary on Λ(θ)") {
  const CatalogEntry e = load_example("super_ext_1");
  const ParaCocyclicModule P = build_cm(*e.hopf, e.pairs[0], 3);
  const ChainComplex c = hochschild_b(P);
  CHECK(c.cohomological);
  CHECK(rank(c.d[0]) == 0);
  CHECK(rank(c.d[1]) == 1);
  for (unsigned k = 0; k < 3; ++k) CHECK(c.d[k] == coboundary(P, k));
  CHECK(c.homology_dims() == Dims{1, 1, 1});
}

TEST_CASE("HC is the parity partial sum of HH when mψ = m") {
  for (const char* n : {"cz2", "super_ext_1", "group_z_3"}) {
    CAPTURE(n);
    const HopfObject h = *load_example(n).hopf;
    const Decomposition d = decomposition_check(h, 3);
    CHECK(d.report.passed());
    CHECK(d.hc == d.partial_sums);
    CHECK(d.partial_sums == parity_partial_sums(d.hh));
    CHECK(d.hh == cotor(h, unit_cocharacter(h), 3));
  }
  CHECK(parity_partial_sums({1, 1, 1, 1, 1}) == Dims{1, 1, 2, 2, 3});
  CHECK(parity_partial_sums({}) == Dims{});
  CHECK_THROWS_AS(decomposition_check(*load_example("anyon_line_4").hopf, 2), Error);
}

TEST_CASE("d² = 0 is enforced") {
  const Space A = Space::plain(Field::rational(), "a", 1);
  ChainComplex c;
  c.spaces = {A, A, A};
  c.d = {LinearMap::identity(A), LinearMap::identity(A)};
  CHECK_THROWS_AS(require_d_squared_zero(c, "test"), Error);
  c.d[1] = LinearMap(A, A);
  CHECK_NOTHROW(require_d_squared_zero(c, "test"));
  CHECK(c.homology_dims() == Dims{0, 0});
}
