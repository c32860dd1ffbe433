#include <random>

#include "bhc/linalg.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace bhc;

namespace {

Field Q = Field::rational();

LinearMap mat(const Space& dom, const Space& cod, std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Scalar>> s;
  for (auto& r : rows) {
    s.emplace_back();
    for (long x : r) s.back().emplace_back(Q, x);
  }
  return LinearMap::from_dense(dom, cod, s);
}

LinearMap swap_map(const Space& v) {
  const Index d = v.dim();
  std::vector<std::tuple<Index, Index, Scalar>> t;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) t.emplace_back(j * d + i, i * d + j, Scalar(Q, 1L));
  return LinearMap::from_triples(tensor(v, v), tensor(v, v), t);
}

}  // namespace

TEST_CASE("spaces flatten tensor products") {
  Space a = Space::plain(Q, "a", 2), b = Space::plain(Q, "b", 3), c = Space::plain(Q, "c", 2);
  CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
  CHECK(tensor(Space::unit(Q), a) == a);
  Space abc = tensor(tensor(a, b), c);
  CHECK(abc.dim() == 12);
  CHECK(abc.label(7) == "a1⊗b0⊗c1");
  CHECK(abc.split(7) == std::vector<Index>{1, 0, 1});
  CHECK(Space::unit(Q).dim() == 1);
  CHECK(Space::plain(Q, "z", 0).dim() == 0);
  CHECK_THROWS_AS(Space::atom(Q, "dup", {"x", "x"}), Error);
}

TEST_CASE("composition and identities") {
  Space v = Space::plain(Q, "v", 2);
  LinearMap f = mat(v, v, {{1, 2}, {3, 4}});
  CHECK(compose(LinearMap::identity(v), f) == f);
  LinearMap s = swap_map(v);
  CHECK(compose(s, s) == LinearMap::identity(tensor(v, v)));
  Space w = Space::plain(Q, "w", 3);
  CHECK_THROWS_AS(compose(f, LinearMap(w, w)), Error);
}

TEST_CASE("tensor of maps") {
  Space v = Space::plain(Q, "v", 2), w = Space::plain(Q, "w", 3);
  CHECK(tensor(LinearMap::identity(v), LinearMap::identity(w)) == LinearMap::identity(tensor(v, w)));
  LinearMap f = mat(v, v, {{1, 2}, {0, 1}});
  CHECK(tensor(LinearMap(w, w), f).is_zero());
  // Kronecker layout, row (i*3 + k), col (j*3 + l) holds f_ij g_kl
  LinearMap g = mat(w, w, {{1, 0, 0}, {0, 2, 0}, {5, 0, 3}});
  LinearMap fg = tensor(f, g);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      for (Index k = 0; k < 3; ++k)
        for (Index l = 0; l < 3; ++l) CHECK(fg.entry(i * 3 + k, j * 3 + l) == f.entry(i, j) * g.entry(k, l));
}

TEST_CASE("tensor is strictly associative and satisfies interchange") {
  std::mt19937 rng(11);
  Space a = Space::plain(Q, "a", 2), b = Space::plain(Q, "b", 2), c = Space::plain(Q, "c", 3);
  for (int trial = 0; trial < 10; ++trial) {
    LinearMap f = oracle::random_map(a, b, rng), g = oracle::random_map(b, c, rng), h = oracle::random_map(c, a, rng);
    CHECK(tensor(tensor(f, g), h) == tensor(f, tensor(g, h)));
    LinearMap f2 = oracle::random_map(c, a, rng), g2 = oracle::random_map(a, b, rng);
    CHECK(compose(tensor(f, g), tensor(f2, g2)) == tensor(compose(f, f2), compose(g, g2)));
  }
}

TEST_CASE("apply_at acts on one block of factors") {
  std::mt19937 rng(5);
  Space a = Space::plain(Q, "a", 2), b = Space::plain(Q, "b", 3), c = Space::plain(Q, "c", 2);
  LinearMap f = oracle::random_map(b, c, rng);
  LinearMap g = oracle::random_map(a, tensor(tensor(a, b), c), rng);
  LinearMap expect = compose(tensor(tensor(LinearMap::identity(a), f), LinearMap::identity(c)), g);
  CHECK(apply_at(f, 1, g) == expect);
  // inserting a unit-domain map
  LinearMap eta = mat(Space::unit(Q), a, {{1}, {0}});
  LinearMap id = LinearMap::identity(tensor(a, b));
  CHECK(apply_at(eta, 1, id) == tensor(tensor(LinearMap::identity(a), eta), LinearMap::identity(b)));
}

TEST_CASE("kernel, cokernel and rank") {
  Space v = Space::plain(Q, "v", 2);
  LinearMap ones = mat(v, v, {{1, 1}, {1, 1}});
  CHECK(rank(ones) == 1);
  auto k = kernel(ones);
  CHECK(k.dim() == 1);
  CHECK(compose(ones, k.embed).is_zero());
  // the kernel is spanned by (1, -1)
  CHECK(k.embed.entry(0, 0) == -k.embed.entry(1, 0));
  CHECK(kernel(LinearMap(v, v)).dim() == 2);
  CHECK(cokernel(LinearMap::identity(v)).dim() == 0);
  Space w = Space::plain(Q, "w", 3);
  CHECK(rank(LinearMap::identity(w)) == 3);

  LinearMap col = mat(Space::unit(Q), v, {{1}, {0}});
  auto q = cokernel(col);
  CHECK(q.dim() == 1);
  CHECK(q.project.entry(0, 1).is_one());
  CHECK(q.project.entry(0, 0).is_zero());
}

TEST_CASE("rank-nullity and cokernel laws on random maps") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> dim(0, 6);
    Space a = Space::plain(Q, "a", dim(rng)), b = Space::plain(Q, "b", dim(rng));
    LinearMap f = oracle::random_map(a, b, rng, trial % 4);
    const Index r = rank(f);
    CHECK(r == oracle::dense_rank(f));
    auto k = kernel(f);
    CHECK(r + k.dim() == a.dim());
    CHECK(compose(f, k.embed).is_zero());
    CHECK(rank(k.embed) == k.dim());
    CHECK(compose(k.project, k.embed).is_identity());
    auto c = cokernel(f);
    CHECK(c.dim() == b.dim() - r);
    CHECK(compose(c.project, f).is_zero());
    CHECK(compose(c.project, c.embed).is_identity());
  }
}

TEST_CASE("rank over a cyclotomic field agrees with the oracle") {
  Field f = Field::cyclotomic(5);
  std::mt19937 rng(9);
  Scalar z = Scalar::root_of_unity(f, 5, 1);
  for (int trial = 0; trial < 10; ++trial) {
    Space a = Space::plain(f, "a", 4), b = Space::plain(f, "b", 4);
    std::uniform_int_distribution<int> e(0, 5);
    std::vector<std::vector<Scalar>> rows(4, std::vector<Scalar>(4, Scalar(f)));
    for (auto& r : rows)
      for (auto& x : r) {
        int k = e(rng);
        if (k < 5) x = Scalar::root_of_unity(f, 5, k) - z;
      }
    LinearMap m = LinearMap::from_dense(a, b, rows);
    CHECK(rank(m) == oracle::dense_rank(m));
  }
}

TEST_CASE("induced maps on kernels and quotients") {
  Space v = Space::plain(Q, "v", 3);
  LinearMap p = mat(v, v, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  auto k = kernel(p);
  LinearMap op = mat(v, v, {{2, 0, 0}, {0, 3, 0}, {0, 0, 5}});
  auto h = induced(k, k, op);
  REQUIRE(h);
  CHECK(h->entry(0, 0) == Scalar(Q, 5L));
  LinearMap mixes = mat(v, v, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}});
  CHECK_FALSE(induced(k, k, mixes));
  auto q = cokernel(mixes);
  auto hq = induced(q, q, op);
  REQUIRE(hq);
  CHECK(hq->rows() == 2);
  LinearMap moves = mat(v, v, {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}});
  CHECK_FALSE(induced(q, q, moves));
}

TEST_CASE("factor_through solves against an injective map") {
  Space v = Space::plain(Q, "v", 3), s = Space::plain(Q, "s", 2);
  LinearMap incl = mat(s, v, {{1, 0}, {1, 1}, {0, 1}});
  LinearMap g = mat(s, v, {{2, 0}, {3, 1}, {1, 1}});
  auto h = factor_through(incl, g);
  REQUIRE(h);
  CHECK(compose(incl, *h) == g);
  LinearMap bad = mat(s, v, {{1, 0}, {0, 0}, {0, 0}});
  CHECK_FALSE(factor_through(incl, bad));
}
