#include "bhc/superlie.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace bhc {

namespace {

const Field Q = Field::rational();

Scalar q(long v) { return Scalar(Q, v); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

// Sort a wedge word into canonical order. Returns the sign, or 0 when the
// word vanishes (a repeated even letter).
int normalize_wedge(const SuperLieAlgebra& g, std::vector<Index>& w) {
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t k = w.size() - 1; k > i; --k)
      if (w[k - 1] > w[k]) {
        std::swap(w[k - 1], w[k]);
        if (!(g.parity(w[k - 1]) && g.parity(w[k]))) sign = -sign;
      }
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k] == w[k + 1] && g.parity(w[k]) == 0) return 0;
  return sign;
}

// nondecreasing words of length n over dim letters; letters with strict(i) may not repeat
void words_of_length(Index dim, unsigned n, const std::function<bool(Index)>& strict, std::vector<Index>& cur,
                     std::vector<std::vector<Index>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  const Index start = cur.empty() ? 0 : cur.back() + (strict(cur.back()) ? 1 : 0);
  for (Index i = start; i < dim; ++i) {
    cur.push_back(i);
    words_of_length(dim, n, strict, cur, out);
    cur.pop_back();
  }
}

SparseVec bracket_vec(const SuperLieAlgebra& g, const SparseVec& a, Index z) {
  SparseVec out;
  for (const auto& [i, c] : a) axpy(out, c, g.bracket(i, z));
  return out;
}

SparseVec bracket_vec(const SuperLieAlgebra& g, Index x, const SparseVec& b) {
  SparseVec out;
  for (const auto& [i, c] : b) axpy(out, c, g.bracket(x, i));
  return out;
}

using WordMap = std::map<std::vector<Index>, Scalar>;

void add_to(WordMap& acc, const std::vector<Index>& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = acc.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace

SuperLieAlgebra SuperLieAlgebra::make(std::string name, unsigned even, unsigned odd, std::vector<Bracket> brackets,
                                      std::vector<std::pair<Index, Scalar>> delta, std::vector<std::string> names) {
  SuperLieAlgebra g;
  g.name_ = std::move(name);
  g.even_ = even;
  g.odd_ = odd;
  const Index d = g.dim();
  if (names.empty()) {
    for (unsigned i = 0; i < even; ++i) names.push_back(even == 1 ? "x" : "x" + std::to_string(i + 1));
    for (unsigned i = 0; i < odd; ++i) names.push_back(odd == 1 ? "θ" : "θ" + std::to_string(i + 1));
  }
  if (names.size() != d) throw Error(Errc::invalid_argument, "need one name per generator");
  g.names_ = std::move(names);
  g.table_.assign(d * d, SparseVec{});
  std::vector<bool> set(d * d, false);

  auto put = [&](Index i, Index j, const SparseVec& v) {
    if (set[i * d + j] && g.table_[i * d + j] != v)
      throw Error(Errc::precondition_failed, "bracket [" + g.names_[i] + "," + g.names_[j] + "] listed inconsistently");
    g.table_[i * d + j] = v;
    set[i * d + j] = true;
  };
  for (auto& [i, j, raw] : brackets) {
    if (i >= d || j >= d) throw Error(Errc::invalid_argument, "bracket index out of range");
    const SparseVec v = make_sparse(raw);
    for (const auto& [k, c] : v) {
      if (k >= d) throw Error(Errc::invalid_argument, "bracket value index out of range");
      if (!c.field().is_rational()) throw Error(Errc::field_mismatch, "super Lie algebras are over Q");
      if (g.parity(k) != (g.parity(i) ^ g.parity(j)))
        throw Error(Errc::precondition_failed,
                    "bracket [" + g.names_[i] + "," + g.names_[j] + "] is not degree-additive (" + g.names_[k] + ")");
    }
    if (i == j && g.parity(i) == 0 && !v.empty())
      throw Error(Errc::precondition_failed, "[" + g.names_[i] + "," + g.names_[i] + "] must vanish for an even generator");
    put(i, j, v);
    // [e_j, e_i] = -(-1)^{|i||j|} [e_i, e_j]
    if (i != j) put(j, i, scaled(v, q(g.parity(i) && g.parity(j) ? 1 : -1)));
  }

  g.delta_.assign(d, Scalar(Q, 0));
  for (const auto& [i, c] : delta) {
    if (i >= d) throw Error(Errc::invalid_argument, "δ index out of range");
    if (!c.field().is_rational()) throw Error(Errc::field_mismatch, "δ must be rational");
    if (g.parity(i) == 0) g.delta_[i] = c;  // a character kills the odd part
  }
  return g;
}

bool SuperLieAlgebra::is_abelian() const {
  return std::all_of(table_.begin(), table_.end(), [](const SparseVec& v) { return v.empty(); });
}

std::vector<SuperLieAlgebra::Bracket> SuperLieAlgebra::bracket_list() const {
  std::vector<Bracket> out;
  for (Index i = 0; i < dim(); ++i)
    for (Index j = i; j < dim(); ++j)
      if (!bracket(i, j).empty()) out.emplace_back(i, j, bracket(i, j));
  return out;
}

CheckReport SuperLieAlgebra::check() const {
  CheckReport r("super Lie algebra " + name_);
  const Index d = dim();
  std::string bad;
  for (Index i = 0; i < d && bad.empty(); ++i)
    for (Index j = 0; j < d && bad.empty(); ++j)
      for (const auto& [k, c] : bracket(i, j))
        if (parity(k) != (parity(i) ^ parity(j))) bad = "[" + names_[i] + "," + names_[j] + "]";
  r.expect("degree additivity", bad.empty(), bad);

  bad.clear();
  for (Index i = 0; i < d && bad.empty(); ++i)
    for (Index j = 0; j < d && bad.empty(); ++j) {
      const Scalar s = q(parity(i) && parity(j) ? 1 : -1);
      if (bracket(j, i) != scaled(bracket(i, j), s)) bad = "[" + names_[i] + "," + names_[j] + "]";
    }
  r.expect("super antisymmetry", bad.empty(), bad);

  // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
  bad.clear();
  for (Index x = 0; x < d && bad.empty(); ++x)
    for (Index y = 0; y < d && bad.empty(); ++y)
      for (Index z = 0; z < d && bad.empty(); ++z) {
        SparseVec lhs = bracket_vec(*this, x, bracket(y, z));
        SparseVec rhs = bracket_vec(*this, bracket(x, y), z);
        axpy(rhs, q(parity(x) && parity(y) ? -1 : 1), bracket_vec(*this, y, bracket(x, z)));
        if (lhs != rhs) bad = "(" + names_[x] + "," + names_[y] + "," + names_[z] + ")";
      }
  r.expect("super Jacobi", bad.empty(), bad);

  bad.clear();
  for (Index i = 0; i < d && bad.empty(); ++i) {
    if (parity(i) == 1 && !delta_[i].is_zero()) bad = names_[i];
    for (Index j = 0; j < d && bad.empty(); ++j) {
      Scalar v(Q, 0);
      for (const auto& [k, c] : bracket(i, j)) v += c * delta_[k];
      if (!v.is_zero()) bad = "δ[" + names_[i] + "," + names_[j] + "]";
    }
  }
  r.expect("δ is a character", bad.empty(), bad);
  return r;
}

std::vector<std::vector<Index>> exterior_basis(const SuperLieAlgebra& g, unsigned n) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> cur;
  words_of_length(g.dim(), n, [&](Index i) { return g.parity(i) == 0; }, cur, out);
  return out;
}

Space exterior_power(const SuperLieAlgebra& g, unsigned n) {
  std::vector<std::string> labels;
  std::vector<int> grades;
  for (const auto& w : exterior_basis(g, n)) {
    std::vector<std::string> parts;
    int par = 0;
    for (Index i : w) parts.push_back(g.generator(i)), par ^= g.parity(i);
    labels.push_back(w.empty() ? "1" : join(parts, "∧"));
    grades.push_back(par);
  }
  return Space::atom(Q, "Λ" + std::to_string(n) + "(" + g.name() + ")", labels, grades);
}

ChainComplex ce_differential(const SuperLieAlgebra& g, unsigned n_max) {
  ChainComplex c;
  c.cohomological = false;
  std::vector<std::vector<std::vector<Index>>> bases;
  std::vector<std::map<std::vector<Index>, Index>> where(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    bases.push_back(exterior_basis(g, n));
    c.spaces.push_back(exterior_power(g, n));
    for (Index k = 0; k < bases[n].size(); ++k) where[n].emplace(bases[n][k], k);
  }
  c.d.push_back(LinearMap(c.spaces[0], Space::atom(Q, "0", {})));

  for (unsigned n = 1; n <= n_max; ++n) {
    std::vector<SparseVec> cols;
    for (const auto& x : bases[n]) {
      // α_i = |x_i|(|x_1| + ... + |x_{i-1}|), positions 1-based
      std::vector<int> alpha(n + 1, 0);
      int before = 0;
      for (unsigned i = 1; i <= n; ++i) {
        alpha[i] = g.parity(x[i - 1]) * before;
        before += g.parity(x[i - 1]);
      }
      std::vector<std::pair<Index, Scalar>> col;
      for (unsigned i = 1; i <= n; ++i) {
        const Scalar& dl = g.delta(x[i - 1]);
        if (dl.is_zero()) continue;
        std::vector<Index> rest = x;
        rest.erase(rest.begin() + (i - 1));
        const int e = static_cast<int>(i + 1) + alpha[i];
        col.emplace_back(where[n - 1].at(rest), (e % 2 ? q(-1) : q(1)) * dl);
      }
      for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j) {
          const Index a = x[i - 1], b = x[j - 1];
          const int e = static_cast<int>(i + j) + alpha[i] + alpha[j] - g.parity(a) * g.parity(b);
          for (const auto& [k, cf] : g.bracket(a, b)) {
            std::vector<Index> w{k};
            for (unsigned t = 1; t <= n; ++t)
              if (t != i && t != j) w.push_back(x[t - 1]);
            const int s = normalize_wedge(g, w);
            if (s == 0) continue;
            col.emplace_back(where[n - 1].at(w), q((e % 2 ? -1 : 1) * s) * cf);
          }
        }
      cols.push_back(make_sparse(std::move(col)));
    }
    c.d.push_back(LinearMap::from_columns(c.spaces[n], c.spaces[n - 1], std::move(cols)));
  }
  require_d_squared_zero(c, "Chevalley-Eilenberg complex of " + g.name());
  return c;
}

std::vector<Index> lie_homology(const SuperLieAlgebra& g, unsigned n_max) {
  return ce_differential(g, n_max + 1).homology_dims();
}

// ---- enveloping algebra ----

EnvelopingModel EnvelopingModel::make(const SuperLieAlgebra& g, EnvelopingMode mode, unsigned N) {
  EnvelopingModel U;
  U.g_ = g;
  U.mode_ = mode;
  if (mode == EnvelopingMode::finite_nilpotent) {
    if (g.even_dim() != 0 || !g.is_abelian())
      throw Error(Errc::unsupported_mode, "finite enveloping algebra needs a purely odd abelian Lie algebra");
    N = g.odd_dim();
  } else if (N == 0) {
    throw Error(Errc::truncation_too_small, "truncation length must be at least 1");
  }
  U.N_ = N;
  // PBW words: even letters repeat, odd letters do not
  for (unsigned len = 0; len <= N; ++len) {
    std::vector<std::vector<Index>> ws;
    std::vector<Index> cur;
    words_of_length(g.dim(), len, [&](Index i) { return g.parity(i) == 1; }, cur, ws);
    for (auto& w : ws) {
      U.index_.emplace(w, U.words_.size());
      U.words_.push_back(std::move(w));
    }
  }
  for (Index i = 0; i < g.dim(); ++i) U.gen_.push_back(U.index_.at({i}));
  return U;
}

EnvelopingModel enveloping_model(const SuperLieAlgebra& g, EnvelopingMode mode, unsigned N) {
  return EnvelopingModel::make(g, mode, N);
}

std::map<std::vector<Index>, Scalar> EnvelopingModel::reduce(const std::vector<Index>& w) const {
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  std::size_t k = 0;
  while (k + 1 < w.size() && !(w[k] > w[k + 1] || (w[k] == w[k + 1] && g_.parity(w[k]) == 1))) ++k;
  WordMap out;
  if (k + 1 >= w.size()) {
    out.emplace(w, q(1));
  } else {
    const Index a = w[k], b = w[k + 1];
    auto splice = [&](Index c) {
      std::vector<Index> v(w.begin(), w.begin() + k);
      v.push_back(c);
      v.insert(v.end(), w.begin() + k + 2, w.end());
      return v;
    };
    // ab = (-1)^{|a||b|} ba + [a,b], and θθ = ½[θ,θ]
    const Scalar bscale = a == b ? Scalar(Q, mpq_class(1, 2)) : q(1);
    if (a != b) {
      std::vector<Index> v = w;
      std::swap(v[k], v[k + 1]);
      const Scalar s = q(g_.parity(a) && g_.parity(b) ? -1 : 1);
      for (const auto& [u, c] : reduce(v)) add_to(out, u, s * c);
    }
    for (const auto& [c, cf] : g_.bracket(a, b))
      for (const auto& [u, x] : reduce(splice(c))) add_to(out, u, bscale * cf * x);
  }
  memo_.emplace(w, out);
  return out;
}

SparseVec EnvelopingModel::to_vector(const std::map<std::vector<Index>, Scalar>& x, const char* what) const {
  std::vector<std::pair<Index, Scalar>> v;
  for (const auto& [w, c] : x) {
    auto it = index_.find(w);
    if (it == index_.end())
      throw Error(Errc::truncation_overflow, std::string(what) + " leaves the retained range (length " +
                                                 std::to_string(w.size()) + " > " + std::to_string(N_) + ")");
    v.emplace_back(it->second, c);
  }
  return make_sparse(std::move(v));
}

std::string EnvelopingModel::label(Index a) const {
  const auto& w = words_.at(a);
  if (w.empty()) return "1";
  std::vector<std::string> parts;
  for (Index i : w) parts.push_back(g_.generator(i));
  return join(parts, "·");
}

int EnvelopingModel::parity(Index a) const {
  int p = 0;
  for (Index i : words_.at(a)) p ^= g_.parity(i);
  return p;
}

SparseVec EnvelopingModel::unit() const { return {{0, q(1)}}; }

SparseVec EnvelopingModel::product(Index a, Index b) const {
  std::vector<Index> w = words_.at(a);
  w.insert(w.end(), words_.at(b).begin(), words_.at(b).end());
  return to_vector(reduce(w), "product");
}

std::vector<std::tuple<Index, Index, Scalar>> EnvelopingModel::coproduct(Index a) const {
  const auto& w = words_.at(a);
  const std::size_t k = w.size();
  std::map<std::pair<Index, Index>, Scalar> acc;
  // Δ(x_1...x_k) = Σ_A ± x_A ⊗ x_{A^c}; each letter of A^c passed by a later letter of A costs a Koszul sign
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<Index> left, right;
    int e = 0;
    for (std::size_t p = 0; p < k; ++p) {
      if (mask >> p & 1) {
        left.push_back(w[p]);
        for (Index r : right) e += g_.parity(r) * g_.parity(w[p]);
      } else {
        right.push_back(w[p]);
      }
    }
    const Scalar s = q(e % 2 ? -1 : 1);
    auto [it, fresh] = acc.emplace(std::make_pair(index_.at(left), index_.at(right)), s);
    if (!fresh) it->second += s;
  }
  std::vector<std::tuple<Index, Index, Scalar>> out;
  for (const auto& [ij, c] : acc)
    if (!c.is_zero()) out.emplace_back(ij.first, ij.second, c);
  return out;
}

SparseVec EnvelopingModel::antipode(Index a) const {
  const auto& w = words_.at(a);
  int e = static_cast<int>(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) e += g_.parity(w[i]) * g_.parity(w[j]);
  std::vector<Index> rev(w.rbegin(), w.rend());
  return scaled(to_vector(reduce(rev), "antipode"), q(e % 2 ? -1 : 1));
}

Scalar EnvelopingModel::counit(Index a) const { return q(words_.at(a).empty() ? 1 : 0); }

HopfObject EnvelopingModel::hopf() const {
  if (mode_ != EnvelopingMode::finite_nilpotent)
    throw Error(Errc::unsupported_mode, "only the finite enveloping algebra is a Hopf object");
  const Index d = size();
  std::vector<std::string> labels;
  std::vector<int> grades;
  for (Index a = 0; a < d; ++a) labels.push_back(label(a)), grades.push_back(parity(a));
  const Space H = Space::atom(Q, "U(" + g_.name() + ")", labels, grades);
  const Space I = Space::unit(Q), HH = tensor(H, H);
  std::vector<SparseVec> mc, dc, sc, ec;
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) mc.push_back(product(a, b));
  for (Index a = 0; a < d; ++a) {
    std::vector<std::pair<Index, Scalar>> v;
    for (const auto& [i, j, c] : coproduct(a)) v.emplace_back(i * d + j, c);
    dc.push_back(make_sparse(std::move(v)));
    sc.push_back(antipode(a));
    ec.push_back(make_sparse({{0, counit(a)}}));
  }
  HopfData data{H,
                LinearMap::from_columns(HH, H, std::move(mc)),
                LinearMap::from_columns(I, H, {unit()}),
                LinearMap::from_columns(H, HH, std::move(dc)),
                LinearMap::from_columns(H, I, std::move(ec)),
                LinearMap::from_columns(H, H, std::move(sc))};
  const CategoryPtr cat = BraidedCategory::koszul(Q);
  return HopfObject::make(cat, cat->object(H), std::move(data), "U(" + g_.name() + ")");
}

namespace {

std::optional<unsigned> cap_of(const EnvelopingModel& U) {
  if (U.mode() == EnvelopingMode::finite_nilpotent) return std::nullopt;
  return U.truncation();
}

// δ extended multiplicatively to PBW words
std::vector<Scalar> delta_on_words(const EnvelopingModel& U) {
  std::vector<Scalar> out;
  for (Index a = 0; a < U.size(); ++a) {
    Scalar v = q(1);
    for (Index i : U.word(a)) v *= U.lie().delta(i);
    out.push_back(v);
  }
  return out;
}

}  // namespace

ParaCocyclicModule enveloping_cocyclic(const EnvelopingModel& U, unsigned n_max) {
  return build_cm_super(U, delta_on_words(U), U.unit(), n_max, cap_of(U), "U");
}

LinearMap antisymmetrize(const EnvelopingModel& U, unsigned n, bool crossing_signs) {
  if (U.mode() == EnvelopingMode::truncated && n > U.truncation())
    throw Error(Errc::truncation_too_small, "Λ^" + std::to_string(n) + " does not fit in length " +
                                               std::to_string(U.truncation()));
  const SuperLieAlgebra& g = U.lie();
  const Space dom = exterior_power(g, n);
  const Space cod = cochain_space(U, n, cap_of(U), "U");
  std::map<std::vector<Index>, Index> where;
  {
    Index k = 0;
    for (auto& t : basis_tuples(U, n, cap_of(U))) where.emplace(std::move(t), k++);
  }
  mpq_class fact = 1;
  for (unsigned k = 2; k <= n; ++k) fact *= k;
  const Scalar inv_fact(Q, mpq_class(1) / fact);

  std::vector<SparseVec> cols;
  for (const auto& x : exterior_basis(g, n)) {
    std::vector<std::pair<Index, Scalar>> col;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      // each inversion is a transposition (-1), plus (-1)^{|a||b|} for the crossing
      int e = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (p[i] > p[j]) e += 1 + (crossing_signs ? g.parity(x[p[i]]) * g.parity(x[p[j]]) : 0);
      std::vector<Index> t;
      for (std::size_t i = 0; i < n; ++i) t.push_back(U.generator_index(x[p[i]]));
      col.emplace_back(where.at(t), q(e % 2 ? -1 : 1) * inv_fact);
    } while (std::next_permutation(p.begin(), p.end()));
    cols.push_back(make_sparse(std::move(col)));
  }
  return LinearMap::from_columns(dom, cod, std::move(cols));
}

CheckReport check_BA_equals_Ad(const SuperLieAlgebra& g, unsigned n_max, unsigned N, bool crossing_signs) {
  if (n_max < 1) throw Error(Errc::degree_out_of_range, "BA = Ad needs n_max ≥ 1");
  if (N == 0) N = std::max(2u, n_max);
  if (N < 2 || N < n_max)
    throw Error(Errc::truncation_too_small, "truncation " + std::to_string(N) + " is below max(2, " +
                                                std::to_string(n_max) + ")");
  const EnvelopingModel U = EnvelopingModel::make(g, EnvelopingMode::truncated, N);
  const ParaCocyclicModule P = enveloping_cocyclic(U, n_max);
  const std::vector<LinearMap> B = connes_B(P);
  const ChainComplex ce = ce_differential(g, n_max);
  CheckReport r("BA = Ad for " + g.name() + (crossing_signs ? "" : " (no crossing signs)"));
  r.note("truncation", "words of length ≤ " + std::to_string(N));
  LinearMap A_prev = antisymmetrize(U, 0, crossing_signs);
  for (unsigned n = 1; n <= n_max; ++n) {
    const LinearMap A = antisymmetrize(U, n, crossing_signs);
    r.expect_equal("BA = Ad on Λ^" + std::to_string(n), compose(B[n - 1], A), compose(A_prev, ce.d[n]));
    A_prev = A;
  }
  return r;
}

LieComparison compare_cyclic_with_lie(const SuperLieAlgebra& g, unsigned n_max) {
  const EnvelopingModel U = EnvelopingModel::make(g, EnvelopingMode::finite_nilpotent);
  const HopfObject h = U.hopf();
  const std::vector<Scalar> dw = delta_on_words(U);
  std::vector<SparseVec> dcols;
  for (const Scalar& v : dw) dcols.push_back(make_sparse({{0, v}}));
  const Character delta = Character::make(h, LinearMap::from_columns(h.H(), h.I(), std::move(dcols)));
  const ModularPair pair = ModularPair::make(h, delta, unit_cocharacter(h), "(δ,1)");
  LieComparison out;
  out.hc = cyclic_cohomology(h, pair, n_max);
  out.lie = lie_homology(g, n_max);
  out.partial_sums = parity_partial_sums(out.lie);
  out.agree = out.hc == out.partial_sums;
  return out;
}

}  // namespace bhc
