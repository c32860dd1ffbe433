#include "bhc/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace bhc {

bool same_atom(const Atom& a, const Atom& b) noexcept {
  return &a == &b || (a.name == b.name && a.labels == b.labels && a.grades == b.grades);
}

// --- Space ----------------------------------------------------------------

Space Space::unit(Field f) {
  Space s;
  s.field_ = f;
  return s;
}

Space Space::atom(Field f, std::string name, std::vector<std::string> labels, std::vector<int> grades) {
  if (!grades.empty() && grades.size() != labels.size())
    throw Error(Errc::invalid_argument, "space '" + name + "': grade count differs from dimension");
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j])
        throw Error(Errc::invalid_argument, "space '" + name + "': duplicate basis label '" + labels[i] + "'");
  auto a = std::make_shared<Atom>();
  a->name = std::move(name);
  a->labels = std::move(labels);
  a->grades = std::move(grades);
  Space s;
  s.field_ = f;
  s.dim_ = a->labels.size();
  s.factors_.push_back(std::move(a));
  return s;
}

Space Space::plain(Field f, std::string name, Index dim) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (Index i = 0; i < dim; ++i) labels.push_back(name + std::to_string(i));
  return atom(f, std::move(name), std::move(labels));
}

Space Space::slice(std::size_t first, std::size_t count) const {
  if (first + count > factors_.size()) throw Error(Errc::space_mismatch, "factor slice out of range in " + describe());
  Space s = unit(field_);
  for (std::size_t k = first; k < first + count; ++k) {
    s.factors_.push_back(factors_[k]);
    s.dim_ *= factors_[k]->labels.size();
  }
  return s;
}

Space Space::power(unsigned n) const {
  Space s = unit(field_);
  for (unsigned k = 0; k < n; ++k) s = tensor(s, *this);
  return s;
}

std::vector<Index> Space::split(Index i) const {
  std::vector<Index> parts(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    const Index d = factors_[k]->labels.size();
    parts[k] = i % d;
    i /= d;
  }
  return parts;
}

std::string Space::label(Index i) const {
  if (factors_.empty()) return "1";
  const auto parts = split(i);
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += "⊗";
    out += factors_[k]->labels[parts[k]];
  }
  return out;
}

std::string Space::describe() const {
  if (factors_.empty()) return "I";
  std::string out;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) out += "⊗";
    out += factors_[k]->name;
  }
  return out;
}

Space tensor(const Space& a, const Space& b) {
  if (a.field_ != b.field_) throw Error(Errc::field_mismatch, "tensor of spaces over different fields");
  Space s = a;
  s.factors_.insert(s.factors_.end(), b.factors_.begin(), b.factors_.end());
  s.dim_ = a.dim_ * b.dim_;
  return s;
}

Space tensor(const std::vector<Space>& spaces, Field f) {
  Space s = Space::unit(f);
  for (const auto& x : spaces) s = tensor(s, x);
  return s;
}

bool operator==(const Space& a, const Space& b) noexcept {
  if (a.field_ != b.field_ || a.dim_ != b.dim_ || a.factors_.size() != b.factors_.size()) return false;
  for (std::size_t k = 0; k < a.factors_.size(); ++k)
    if (!same_atom(*a.factors_[k], *b.factors_[k])) return false;
  return true;
}

// --- sparse vectors ---------------------------------------------------------

namespace {

// Sort by index and merge duplicates, dropping zeros.
SparseVec normalize(std::vector<std::pair<Index, Scalar>> v) {
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().first == e.first)
      out.back().second += e.second;
    else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  return out;
}

}  // namespace

SparseVec make_sparse(std::vector<std::pair<Index, Scalar>> entries) { return normalize(std::move(entries)); }

void axpy(SparseVec& v, const Scalar& a, const SparseVec& w) {
  if (a.is_zero() || w.empty()) return;
  SparseVec out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(std::move(v[i++]));
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, a * w[j].second);
      ++j;
    } else {
      Scalar s = v[i].second + a * w[j].second;
      if (!s.is_zero()) out.emplace_back(v[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  v = std::move(out);
}

SparseVec scaled(const SparseVec& v, const Scalar& a) {
  SparseVec out;
  if (a.is_zero()) return out;
  out.reserve(v.size());
  for (const auto& [i, c] : v) out.emplace_back(i, c * a);
  return out;
}

// --- LinearMap --------------------------------------------------------------

LinearMap::LinearMap(Space domain, Space codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), cols_(domain_.dim()) {
  if (domain_.field() != codomain_.field()) throw Error(Errc::field_mismatch, "map between spaces over different fields");
}

LinearMap LinearMap::identity(const Space& s) {
  LinearMap f(s, s);
  const Scalar one(s.field(), 1L);
  for (Index j = 0; j < s.dim(); ++j) f.cols_[j].emplace_back(j, one);
  return f;
}

LinearMap LinearMap::from_columns(Space domain, Space codomain, std::vector<SparseVec> columns) {
  LinearMap f(std::move(domain), std::move(codomain));
  if (columns.size() != f.cols())
    throw Error(Errc::space_mismatch, "column count does not match domain dimension");
  for (auto& c : columns) {
    for (const auto& [r, v] : c) {
      if (r >= f.rows()) throw Error(Errc::space_mismatch, "row index out of range");
      if (v.field() != f.field()) throw Error(Errc::field_mismatch, "matrix entry over a different field");
    }
    c = normalize(std::move(c));
  }
  f.cols_ = std::move(columns);
  return f;
}

LinearMap LinearMap::from_dense(Space domain, Space codomain, const std::vector<std::vector<Scalar>>& rows) {
  LinearMap f(std::move(domain), std::move(codomain));
  if (rows.size() != f.rows()) throw Error(Errc::space_mismatch, "dense matrix has wrong number of rows");
  for (Index r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != f.cols()) throw Error(Errc::space_mismatch, "dense matrix has wrong number of columns");
    for (Index c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c].field() != f.field()) throw Error(Errc::field_mismatch, "matrix entry over a different field");
      if (!rows[r][c].is_zero()) f.cols_[c].emplace_back(r, rows[r][c]);
    }
  }
  return f;
}

LinearMap LinearMap::from_triples(Space domain, Space codomain,
                                  const std::vector<std::tuple<Index, Index, Scalar>>& triples) {
  LinearMap f(std::move(domain), std::move(codomain));
  std::vector<std::vector<std::pair<Index, Scalar>>> raw(f.cols());
  for (const auto& [r, c, v] : triples) {
    if (r >= f.rows() || c >= f.cols()) throw Error(Errc::space_mismatch, "sparse entry index out of range");
    if (v.field() != f.field()) throw Error(Errc::field_mismatch, "matrix entry over a different field");
    raw[c].emplace_back(r, v);
  }
  for (Index c = 0; c < f.cols(); ++c) f.cols_[c] = normalize(std::move(raw[c]));
  return f;
}

Scalar LinearMap::entry(Index row, Index col) const {
  const auto& c = cols_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, Index r) { return e.first < r; });
  if (it != c.end() && it->first == row) return it->second;
  return Scalar(field());
}

std::size_t LinearMap::nnz() const noexcept {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

bool LinearMap::is_zero() const noexcept {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

bool LinearMap::is_identity() const {
  if (rows() != cols()) return false;
  for (Index j = 0; j < cols(); ++j)
    if (cols_[j].size() != 1 || cols_[j][0].first != j || !cols_[j][0].second.is_one()) return false;
  return true;
}

SparseVec LinearMap::apply(const SparseVec& v) const {
  std::vector<std::pair<Index, Scalar>> acc;
  for (const auto& [j, a] : v)
    for (const auto& [r, c] : cols_.at(j)) acc.emplace_back(r, a * c);
  return normalize(std::move(acc));
}

LinearMap LinearMap::retyped(Space domain, Space codomain) const {
  if (domain.dim() != cols() || codomain.dim() != rows())
    throw Error(Errc::space_mismatch, "retyped map must keep its dimensions");
  LinearMap f(std::move(domain), std::move(codomain));
  f.cols_ = cols_;
  return f;
}

std::vector<std::tuple<Index, Index, Scalar>> LinearMap::triples() const {
  std::vector<std::tuple<Index, Index, Scalar>> out;
  for (Index c = 0; c < cols(); ++c)
    for (const auto& [r, v] : cols_[c]) out.emplace_back(r, c, v);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
  });
  return out;
}

std::vector<std::vector<Scalar>> LinearMap::dense() const {
  std::vector<std::vector<Scalar>> out(rows(), std::vector<Scalar>(cols(), Scalar(field())));
  for (Index c = 0; c < cols(); ++c)
    for (const auto& [r, v] : cols_[c]) out[r][c] = v;
  return out;
}

LinearMap& LinearMap::operator+=(const LinearMap& other) {
  if (domain_ != other.domain_ || codomain_ != other.codomain_)
    throw Error(Errc::space_mismatch, "sum of maps with different spaces: " + domain_.describe() + "→" +
                                          codomain_.describe() + " vs " + other.domain_.describe() + "→" +
                                          other.codomain_.describe());
  const Scalar one(field(), 1L);
  for (Index c = 0; c < cols(); ++c) axpy(cols_[c], one, other.cols_[c]);
  return *this;
}

LinearMap& LinearMap::operator-=(const LinearMap& other) {
  if (domain_ != other.domain_ || codomain_ != other.codomain_)
    throw Error(Errc::space_mismatch, "difference of maps with different spaces");
  const Scalar minus(field(), -1L);
  for (Index c = 0; c < cols(); ++c) axpy(cols_[c], minus, other.cols_[c]);
  return *this;
}

LinearMap LinearMap::operator-() const {
  LinearMap f = *this;
  for (auto& c : f.cols_)
    for (auto& e : c) e.second = -e.second;
  return f;
}

LinearMap operator*(const Scalar& s, const LinearMap& f) {
  if (s.field() != f.field()) throw Error(Errc::field_mismatch, "scalar and map over different fields");
  LinearMap g(f.domain_, f.codomain_);
  for (Index c = 0; c < f.cols(); ++c) g.cols_[c] = scaled(f.cols_[c], s);
  return g;
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.cols_ == b.cols_;
}

// --- composition and tensor products ----------------------------------------

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (f.domain() != g.codomain())
    throw Error(Errc::space_mismatch,
                "cannot compose: inner spaces " + f.domain().describe() + " and " + g.codomain().describe() + " differ");
  std::vector<SparseVec> cols(g.cols());
  for (Index j = 0; j < g.cols(); ++j) cols[j] = f.apply(g.column(j));
  return LinearMap::from_columns(g.domain(), f.codomain(), std::move(cols));
}

LinearMap compose(const std::vector<LinearMap>& maps) {
  if (maps.empty()) throw Error(Errc::invalid_argument, "empty composite");
  LinearMap acc = maps.back();
  for (std::size_t k = maps.size() - 1; k-- > 0;) acc = compose(maps[k], acc);
  return acc;
}

LinearMap tensor(const LinearMap& f, const LinearMap& g) {
  if (f.field() != g.field()) throw Error(Errc::field_mismatch, "tensor of maps over different fields");
  const Index gr = g.rows(), gc = g.cols();
  std::vector<SparseVec> cols(f.cols() * gc);
  for (Index i = 0; i < f.cols(); ++i)
    for (Index j = 0; j < gc; ++j) {
      SparseVec& out = cols[i * gc + j];
      for (const auto& [r, a] : f.column(i))
        for (const auto& [s, b] : g.column(j)) out.emplace_back(r * gr + s, a * b);
    }
  return LinearMap::from_columns(tensor(f.domain(), g.domain()), tensor(f.codomain(), g.codomain()), std::move(cols));
}

LinearMap tensor(const std::vector<LinearMap>& maps) {
  if (maps.empty()) throw Error(Errc::invalid_argument, "empty tensor product");
  LinearMap acc = maps.front();
  for (std::size_t k = 1; k < maps.size(); ++k) acc = tensor(acc, maps[k]);
  return acc;
}

LinearMap apply_at(const LinearMap& f, std::size_t offset, const LinearMap& g) {
  const Space& cod = g.codomain();
  const std::size_t width = f.domain().num_factors();
  if (offset + width > cod.num_factors() || cod.slice(offset, width) != f.domain())
    throw Error(Errc::space_mismatch, "cannot apply " + f.domain().describe() + "→" + f.codomain().describe() +
                                          " at factor " + std::to_string(offset) + " of " + cod.describe());
  const Space prefix = cod.slice(0, offset);
  const Space suffix = cod.slice(offset + width, cod.num_factors() - offset - width);
  const Index xd = f.domain().dim(), yd = f.codomain().dim(), q = suffix.dim();
  Space new_cod = tensor(tensor(prefix, f.codomain()), suffix);
  std::vector<SparseVec> cols(g.cols());
  for (Index j = 0; j < g.cols(); ++j) {
    std::vector<std::pair<Index, Scalar>> acc;
    for (const auto& [r, c] : g.column(j)) {
      const Index a = r / (xd * q), rem = r % (xd * q), xi = rem / q, b = rem % q;
      for (const auto& [yi, fc] : f.column(xi)) acc.emplace_back((a * yd + yi) * q + b, c * fc);
    }
    cols[j] = normalize(std::move(acc));
  }
  return LinearMap::from_columns(g.domain(), std::move(new_cod), std::move(cols));
}

LinearMap power(const LinearMap& f, unsigned k) {
  if (f.domain() != f.codomain()) throw Error(Errc::space_mismatch, "power of a non-endomorphism");
  LinearMap acc = LinearMap::identity(f.domain());
  for (unsigned i = 0; i < k; ++i) acc = compose(f, acc);
  return acc;
}

LinearMap permutation(const Space& s, const std::vector<std::size_t>& order) {
  const std::size_t k = s.num_factors();
  if (order.size() != k) throw Error(Errc::invalid_argument, "permutation has wrong length");
  Space target = Space::unit(s.field());
  std::vector<bool> seen(k, false);
  for (std::size_t p : order) {
    if (p >= k || seen[p]) throw Error(Errc::invalid_argument, "not a permutation of the factors");
    seen[p] = true;
    target = tensor(target, s.slice(p, 1));
  }
  const Scalar one(s.field(), 1L);
  std::vector<SparseVec> cols(s.dim());
  for (Index j = 0; j < s.dim(); ++j) {
    const auto parts = s.split(j);
    Index r = 0;
    for (std::size_t p : order) r = r * s.factors()[p]->labels.size() + parts[p];
    cols[j] = {{r, one}};
  }
  return LinearMap::from_columns(s, target, std::move(cols));
}

// --- elimination --------------------------------------------------------------

namespace {

// Column echelon form with optional bookkeeping of how each pivot is built
// from the inserted vectors. Pivots have leading coefficient 1 at distinct rows.
class Echelon {
 public:
  Echelon(Field f, Index rows, bool track) : field_(f), rows_(rows), track_(track), pivot_at_(rows, -1), work_(rows, Scalar(f)) {}

  struct Reduced {
    SparseVec residual;
    SparseVec used;  // coefficients c_k with v = Σ c_k pivot_k + residual
  };

  Reduced reduce(const SparseVec& v) {
    Reduced out;
    if (v.empty()) return out;
    for (const auto& [i, c] : v) work_[i] = c;
    std::vector<std::pair<Index, Scalar>> used;
    for (Index r = v.front().first; r < rows_; ++r) {
      if (work_[r].is_zero()) continue;
      const long p = pivot_at_[r];
      if (p < 0) continue;
      const Scalar c = work_[r];
      for (const auto& [i, a] : pivots_[p].vec) work_[i] -= c * a;
      if (track_) used.emplace_back(static_cast<Index>(p), c);
    }
    for (Index r = v.front().first; r < rows_; ++r)
      if (!work_[r].is_zero()) {
        out.residual.emplace_back(r, std::move(work_[r]));
        work_[r] = Scalar(field_);
      }
    out.used = std::move(used);
    return out;
  }

  // Adds a nonzero residual as a new pivot; `combo` expresses it through the inputs.
  void add_pivot(SparseVec residual, SparseVec combo) {
    const Scalar lead_inv = residual.front().second.inv();
    Pivot p;
    p.row = residual.front().first;
    p.vec = scaled(residual, lead_inv);
    if (track_) p.combo = scaled(combo, lead_inv);
    pivot_at_[p.row] = static_cast<long>(pivots_.size());
    pivots_.push_back(std::move(p));
  }

  // Σ c_k combo_k for the coefficients reported by reduce().
  SparseVec combine(const SparseVec& used) const {
    SparseVec acc;
    for (const auto& [k, c] : used) axpy(acc, c, pivots_[k].combo);
    return acc;
  }

  std::size_t rank() const { return pivots_.size(); }
  bool is_pivot_row(Index r) const { return pivot_at_[r] >= 0; }

 private:
  struct Pivot {
    Index row = 0;
    SparseVec vec;
    SparseVec combo;
  };
  Field field_;
  Index rows_;
  bool track_;
  std::vector<long> pivot_at_;
  std::vector<Pivot> pivots_;
  std::vector<Scalar> work_;
};

}  // namespace

Index rank(const LinearMap& f) {
  // Eliminate along the shorter side.
  Echelon e(f.field(), f.rows(), false);
  for (Index j = 0; j < f.cols(); ++j) {
    auto red = e.reduce(f.column(j));
    if (!red.residual.empty()) e.add_pivot(std::move(red.residual), {});
    if (e.rank() == f.rows()) break;
  }
  return e.rank();
}

Subquotient kernel(const LinearMap& f, const std::string& name) {
  const Field field = f.field();
  const Scalar one(field, 1L), minus(field, -1L);
  Echelon e(field, f.rows(), true);
  std::vector<SparseVec> basis;
  std::vector<Index> own;
  for (Index j = 0; j < f.cols(); ++j) {
    auto red = e.reduce(f.column(j));
    SparseVec combo = e.combine(red.used);
    for (auto& [i, c] : combo) c = -c;
    axpy(combo, one, SparseVec{{j, one}});
    if (red.residual.empty()) {
      basis.push_back(std::move(combo));
      own.push_back(j);
    } else {
      e.add_pivot(std::move(red.residual), std::move(combo));
    }
  }
  Space sub = Space::plain(field, name, basis.size());
  Subquotient out;
  out.kind = Subquotient::Kind::sub;
  out.embed = LinearMap::from_columns(sub, f.domain(), basis);
  std::vector<std::tuple<Index, Index, Scalar>> t;
  for (Index k = 0; k < own.size(); ++k) t.emplace_back(k, own[k], one);
  out.project = LinearMap::from_triples(f.domain(), sub, t);
  return out;
}

Subquotient cokernel(const LinearMap& f, const std::string& name) {
  const Field field = f.field();
  const Scalar one(field, 1L);
  Echelon e(field, f.rows(), false);
  for (Index j = 0; j < f.cols(); ++j) {
    auto red = e.reduce(f.column(j));
    if (!red.residual.empty()) e.add_pivot(std::move(red.residual), {});
  }
  std::vector<Index> quotient_index(f.rows(), static_cast<Index>(-1));
  std::vector<std::string> labels;
  std::vector<Index> free_rows;
  for (Index r = 0; r < f.rows(); ++r)
    if (!e.is_pivot_row(r)) {
      quotient_index[r] = free_rows.size();
      free_rows.push_back(r);
      labels.push_back("[" + f.codomain().label(r) + "]");
    }
  Space q = Space::atom(field, name, labels);
  std::vector<SparseVec> proj(f.rows());
  for (Index r = 0; r < f.rows(); ++r) {
    if (!e.is_pivot_row(r)) {
      proj[r] = {{quotient_index[r], one}};
      continue;
    }
    auto red = e.reduce(SparseVec{{r, one}});
    for (auto& [i, c] : red.residual) proj[r].emplace_back(quotient_index[i], std::move(c));
  }
  std::vector<SparseVec> sec(free_rows.size());
  for (Index k = 0; k < free_rows.size(); ++k) sec[k] = {{free_rows[k], one}};
  Subquotient out;
  out.kind = Subquotient::Kind::quotient;
  out.project = LinearMap::from_columns(f.codomain(), q, std::move(proj));
  out.embed = LinearMap::from_columns(q, f.codomain(), std::move(sec));
  return out;
}

std::optional<LinearMap> induced(const Subquotient& source, const Subquotient& target, const LinearMap& op) {
  if (source.kind != target.kind) throw Error(Errc::invalid_argument, "induced map between a subspace and a quotient");
  LinearMap h = compose(target.project, compose(op, source.embed));
  if (source.kind == Subquotient::Kind::sub) {
    if (compose(op, source.embed) != compose(target.embed, h)) return std::nullopt;
  } else {
    if (compose(target.project, op) != compose(h, source.project)) return std::nullopt;
  }
  return h;
}

std::optional<LinearMap> factor_through(const LinearMap& inclusion, const LinearMap& g) {
  if (inclusion.codomain() != g.codomain()) throw Error(Errc::space_mismatch, "factor_through: codomains differ");
  const Field field = inclusion.field();
  const Scalar one(field, 1L);
  Echelon e(field, inclusion.rows(), true);
  for (Index j = 0; j < inclusion.cols(); ++j) {
    auto red = e.reduce(inclusion.column(j));
    if (red.residual.empty()) throw Error(Errc::invalid_argument, "factor_through: inclusion is not injective");
    SparseVec combo = e.combine(red.used);
    for (auto& [i, c] : combo) c = -c;
    axpy(combo, one, SparseVec{{j, one}});
    e.add_pivot(std::move(red.residual), std::move(combo));
  }
  std::vector<SparseVec> cols(g.cols());
  for (Index j = 0; j < g.cols(); ++j) {
    auto red = e.reduce(g.column(j));
    if (!red.residual.empty()) return std::nullopt;
    cols[j] = e.combine(red.used);
  }
  return LinearMap::from_columns(g.domain(), inclusion.domain(), std::move(cols));
}

std::optional<LinearMap> inverse(const LinearMap& f) {
  if (f.rows() != f.cols() || rank(f) != f.cols()) return std::nullopt;
  return factor_through(f, LinearMap::identity(f.codomain()));
}

std::optional<Index> first_difference(const LinearMap& a, const LinearMap& b) {
  if (a.cols() != b.cols()) return Index{0};
  for (Index j = 0; j < a.cols(); ++j)
    if (a.column(j) != b.column(j)) return j;
  return std::nullopt;
}

std::string format_vector(const Space& s, const SparseVec& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v) {
    std::string coeff = c.to_string();
    const bool compound = coeff.find_first_of("+-", 1) != std::string::npos;
    if (!first) os << " + ";
    first = false;
    if (c.is_one())
      os << s.label(i);
    else if (compound)
      os << "(" << coeff << ")*" << s.label(i);
    else
      os << coeff << "*" << s.label(i);
  }
  return os.str();
}

}  // namespace bhc
