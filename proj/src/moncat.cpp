#include "bhc/moncat.hpp"

#include <numeric>

namespace bhc {

const char* kind_name(CategoryKind k) noexcept {
  switch (k) {
    case CategoryKind::trivial: return "trivial";
    case CategoryKind::koszul: return "koszul";
    case CategoryKind::bicharacter: return "bicharacter";
    case CategoryKind::r_matrix: return "r_matrix";
    case CategoryKind::yetter_drinfeld: return "yetter_drinfeld";
  }
  return "unknown";
}

CategoryPtr BraidedCategory::trivial(Field f) {
  auto c = std::shared_ptr<BraidedCategory>(new BraidedCategory());
  c->kind_ = CategoryKind::trivial;
  c->field_ = f;
  c->chi_table_ = {Scalar(f, 1L)};
  return c;
}

CategoryPtr BraidedCategory::koszul(Field f) {
  auto c = std::shared_ptr<BraidedCategory>(new BraidedCategory());
  c->kind_ = CategoryKind::koszul;
  c->field_ = f;
  c->factors_ = {2};
  c->exponents_ = {{1}};
  c->root_order_ = 2;
  c->chi_table_ = {Scalar(f, 1L), Scalar(f, 1L), Scalar(f, 1L), Scalar(f, -1L)};
  return c;
}

CategoryPtr BraidedCategory::bicharacter(Field f, std::vector<unsigned> factors, std::vector<std::vector<long>> exponents,
                                         unsigned root_order) {
  if (factors.empty()) throw Error(Errc::invalid_argument, "bicharacter category needs at least one cyclic factor");
  for (unsigned n : factors)
    if (n == 0) throw Error(Errc::invalid_argument, "cyclic factor of order 0");
  if (exponents.size() != factors.size())
    throw Error(Errc::invalid_argument, "exponent matrix must be square of the group rank");
  for (const auto& row : exponents)
    if (row.size() != factors.size()) throw Error(Errc::invalid_argument, "exponent matrix must be square of the group rank");
  unsigned N = root_order;
  if (N == 0) {
    N = 1;
    for (unsigned n : factors) N = std::lcm(N, n);
  }
  if (!f.contains_root_of_unity(N))
    throw Error(Errc::field_mismatch, "field " + f.name() + " lacks the " + std::to_string(N) + "-th roots of unity");
  const long n_root = static_cast<long>(N);
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const long e = exponents[i][j];
      if ((static_cast<long>(factors[i]) * e) % n_root != 0 || (e * static_cast<long>(factors[j])) % n_root != 0)
        throw Error(Errc::precondition_failed, "χ is not a bicharacter on the group: exponent (" + std::to_string(i) + "," +
                                                   std::to_string(j) + ") is incompatible with the factor orders");
    }

  auto c = std::shared_ptr<BraidedCategory>(new BraidedCategory());
  c->kind_ = CategoryKind::bicharacter;
  c->field_ = f;
  c->factors_ = std::move(factors);
  c->exponents_ = std::move(exponents);
  c->root_order_ = N;
  const unsigned g = c->group_order();
  auto decode = [&](unsigned code) {
    std::vector<long> a;
    for (unsigned n : c->factors_) {
      a.push_back(code % n);
      code /= n;
    }
    return a;
  };
  c->chi_table_.reserve(static_cast<std::size_t>(g) * g);
  for (unsigned x = 0; x < g; ++x)
    for (unsigned y = 0; y < g; ++y) {
      const auto a = decode(x), b = decode(y);
      long e = 0;
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) e += a[i] * c->exponents_[i][j] * b[j];
      c->chi_table_.push_back(Scalar::root_of_unity(f, N, e));
    }
  // multiplicativity in each variable, on all pairs of group elements
  for (unsigned x = 0; x < g; ++x)
    for (unsigned x2 = 0; x2 < g; ++x2)
      for (unsigned y = 0; y < g; ++y) {
        if (c->chi(c->grade_add(x, x2), y) != c->chi(x, y) * c->chi(x2, y) ||
            c->chi(y, c->grade_add(x, x2)) != c->chi(y, x) * c->chi(y, x2))
          throw Error(Errc::precondition_failed, "χ is not multiplicative");
      }
  return c;
}

namespace {

// Left multiplication by r in the algebra H⊗H (componentwise product).
LinearMap left_mult_tensor_square(const HopfData& h, const SparseVec& r) {
  const Index d = h.H.dim();
  const Space hh = tensor(h.H, h.H);
  std::vector<SparseVec> cols(d * d);
  for (Index x = 0; x < d; ++x)
    for (Index y = 0; y < d; ++y) {
      SparseVec& col = cols[x * d + y];
      for (const auto& [ab, c] : r) {
        const Index a = ab / d, b = ab % d;
        for (const auto& [p, u] : h.m.column(a * d + x))
          for (const auto& [q, v] : h.m.column(b * d + y)) col.emplace_back(p * d + q, c * u * v);
      }
    }
  return LinearMap::from_columns(hh, hh, std::move(cols));
}

SparseVec unit_square(const HopfData& h) {
  const Index d = h.H.dim();
  SparseVec one = h.eta.column(0), out;
  for (const auto& [p, u] : one)
    for (const auto& [q, v] : one) out.emplace_back(p * d + q, u * v);
  return out;
}

void check_background(const HopfData& h) {
  const Space& H = h.H;
  if (h.m.domain() != tensor(H, H) || h.m.codomain() != H || h.eta.codomain() != H || !h.eta.domain().is_unit() ||
      h.delta.domain() != H || h.delta.codomain() != tensor(H, H) || h.eps.domain() != H || !h.eps.codomain().is_unit() ||
      h.S.domain() != H || h.S.codomain() != H)
    throw Error(Errc::space_mismatch, "background Hopf algebra maps have the wrong shapes");
}

}  // namespace

CategoryPtr BraidedCategory::r_matrix(HopfData background, SparseVec R) {
  check_background(background);
  R = make_sparse(std::move(R));
  auto c = std::shared_ptr<BraidedCategory>(new BraidedCategory());
  c->kind_ = CategoryKind::r_matrix;
  c->field_ = background.H.field();
  const LinearMap left = left_mult_tensor_square(background, R);
  auto inv = inverse(left);
  if (!inv) throw Error(Errc::precondition_failed, "R is not invertible in H⊗H");
  const SparseVec one = unit_square(background);
  SparseVec rinv = inv->apply(one);
  if (left_mult_tensor_square(background, rinv).apply(R) != one)
    throw Error(Errc::precondition_failed, "R has no two-sided inverse in H⊗H");
  c->R_ = std::move(R);
  c->R_inv_ = std::move(rinv);
  c->bg_ = std::make_shared<HopfData>(std::move(background));
  c->chi_table_ = {Scalar(c->field_, 1L)};
  return c;
}

CategoryPtr BraidedCategory::yetter_drinfeld(HopfData background, LinearMap S_inverse) {
  check_background(background);
  if (S_inverse.domain() != background.H || S_inverse.codomain() != background.H)
    throw Error(Errc::space_mismatch, "S⁻¹ must be an endomorphism of the background algebra");
  if (!compose(background.S, S_inverse).is_identity() || !compose(S_inverse, background.S).is_identity())
    throw Error(Errc::precondition_failed, "supplied S⁻¹ is not a two-sided inverse of S");
  auto c = std::shared_ptr<BraidedCategory>(new BraidedCategory());
  c->kind_ = CategoryKind::yetter_drinfeld;
  c->field_ = background.H.field();
  c->bg_ = std::make_shared<HopfData>(std::move(background));
  c->S_inv_ = std::move(S_inverse);
  c->chi_table_ = {Scalar(c->field_, 1L)};
  return c;
}

std::string BraidedCategory::name() const {
  std::string out = kind_name(kind_);
  if (kind_ == CategoryKind::bicharacter) {
    out += "(Z";
    for (std::size_t i = 0; i < factors_.size(); ++i) out += (i ? "xZ" : "") + std::to_string(factors_[i]);
    out += ")";
  }
  return out;
}

bool BraidedCategory::graded() const noexcept {
  return kind_ == CategoryKind::koszul || kind_ == CategoryKind::bicharacter;
}

bool BraidedCategory::module_kind() const noexcept {
  return kind_ == CategoryKind::r_matrix || kind_ == CategoryKind::yetter_drinfeld;
}

unsigned BraidedCategory::group_order() const noexcept {
  unsigned g = 1;
  for (unsigned n : factors_) g *= n;
  return g;
}

int BraidedCategory::grade_add(int a, int b) const {
  if (!graded()) return 0;
  int out = 0, stride = 1;
  for (unsigned n : factors_) {
    const int x = a % static_cast<int>(n), y = b % static_cast<int>(n);
    out += ((x + y) % static_cast<int>(n)) * stride;
    a /= static_cast<int>(n);
    b /= static_cast<int>(n);
    stride *= static_cast<int>(n);
  }
  return out;
}

int BraidedCategory::grade_of(const Space& s, Index i) const {
  if (!graded()) return 0;
  const auto parts = s.split(i);
  int g = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& grades = s.factors()[k]->grades;
    if (grades.empty()) continue;
    const int x = grades[parts[k]];
    if (x < 0 || x >= static_cast<int>(group_order()))
      throw Error(Errc::object_not_in_category, "grade code " + std::to_string(x) + " of '" + s.factors()[k]->name +
                                                    "' is not an element of the grading group");
    g = grade_add(g, x);
  }
  return g;
}

Scalar BraidedCategory::chi(int a, int b) const {
  if (!graded()) return chi_table_[0];
  const unsigned g = group_order();
  return chi_table_.at(static_cast<std::size_t>(a) * g + static_cast<std::size_t>(b));
}

const HopfData& BraidedCategory::background() const {
  if (!bg_) throw Error(Errc::invalid_argument, std::string(kind_name(kind_)) + " category has no background Hopf algebra");
  return *bg_;
}

const LinearMap& BraidedCategory::s_inverse() const {
  if (!S_inv_) throw Error(Errc::invalid_argument, "only Yetter-Drinfeld categories carry S⁻¹");
  return *S_inv_;
}

// --- objects ------------------------------------------------------------------

CatObject BraidedCategory::object(Space s) const {
  if (s.field() != field_) throw Error(Errc::field_mismatch, "object over a different field than the category");
  CatObject o{std::move(s), std::nullopt, std::nullopt};
  if (module_kind()) {
    o.action = tensor(bg_->eps, LinearMap::identity(o.space));
    if (kind_ == CategoryKind::yetter_drinfeld) o.coaction = tensor(bg_->eta, LinearMap::identity(o.space));
  }
  return o;
}

CatObject BraidedCategory::module_object(Space s, LinearMap action, std::optional<LinearMap> coaction) const {
  if (!module_kind()) throw Error(Errc::invalid_argument, "module objects only exist in r_matrix/yetter_drinfeld categories");
  if (action.domain() != tensor(bg_->H, s) || action.codomain() != s)
    throw Error(Errc::space_mismatch, "action must be H⊗V → V");
  if (kind_ == CategoryKind::yetter_drinfeld) {
    if (!coaction) throw Error(Errc::object_not_in_category, "Yetter-Drinfeld objects need a coaction");
    if (coaction->domain() != s || coaction->codomain() != tensor(bg_->H, s))
      throw Error(Errc::space_mismatch, "coaction must be V → H⊗V");
  }
  return CatObject{std::move(s), std::move(action), std::move(coaction)};
}

CatObject BraidedCategory::unit_object() const { return object(Space::unit(field_)); }

CatObject BraidedCategory::tensor_object(const CatObject& a, const CatObject& b) const {
  CatObject o{tensor(a.space, b.space), std::nullopt, std::nullopt};
  if (!module_kind()) return o;
  if (!a.action || !b.action) throw Error(Errc::object_not_in_category, "tensor factor lacks an action");
  const HopfData& h = *bg_;
  const std::size_t ka = a.space.num_factors();
  // h ▷ (x⊗y) = h1▷x ⊗ h2▷y
  LinearMap g = LinearMap::identity(tensor(h.H, o.space));
  g = apply_at(h.delta, 0, g);
  // factors: H H A.. B..  →  H A.. H B..
  std::vector<std::size_t> order{0};
  for (std::size_t k = 0; k < ka; ++k) order.push_back(2 + k);
  order.push_back(1);
  for (std::size_t k = 0; k < b.space.num_factors(); ++k) order.push_back(2 + ka + k);
  g = compose(permutation(g.codomain(), order), g);
  g = apply_at(*a.action, 0, g);
  g = apply_at(*b.action, ka, g);
  o.action = g;
  if (kind_ == CategoryKind::yetter_drinfeld) {
    if (!a.coaction || !b.coaction) throw Error(Errc::object_not_in_category, "tensor factor lacks a coaction");
    // x⊗y ↦ x_{-1} y_{-1} ⊗ x_0 ⊗ y_0
    LinearMap c = LinearMap::identity(o.space);
    c = apply_at(*a.coaction, 0, c);
    c = apply_at(*b.coaction, 1 + ka, c);
    std::vector<std::size_t> ord{0, 1 + ka};
    for (std::size_t k = 0; k < ka; ++k) ord.push_back(1 + k);
    for (std::size_t k = 0; k < b.space.num_factors(); ++k) ord.push_back(2 + ka + k);
    c = compose(permutation(c.codomain(), ord), c);
    c = apply_at(h.m, 0, c);
    o.coaction = c;
  }
  return o;
}

CatObject BraidedCategory::tensor_objects(const std::vector<CatObject>& objs) const {
  CatObject acc = unit_object();
  for (const auto& o : objs) acc = tensor_object(acc, o);
  return acc;
}

void BraidedCategory::check_module_object(const CatObject& v, CheckReport& r) const {
  const HopfData& h = *bg_;
  if (!v.action) {
    r.expect("has action", false, "object carries no action");
    return;
  }
  const LinearMap& act = *v.action;
  const Space hv = tensor(h.H, v.space);
  if (act.domain() != hv || act.codomain() != v.space) {
    r.expect("action shape", false, "action must be H⊗V → V");
    return;
  }
  LinearMap hhv = LinearMap::identity(tensor(h.H, hv));
  r.expect_equal("action associativity", compose(act, apply_at(h.m, 0, hhv)), compose(act, apply_at(act, 1, hhv)));
  r.expect_equal("action unit", compose(act, tensor(h.eta, LinearMap::identity(v.space))), LinearMap::identity(v.space));
  if (kind_ != CategoryKind::yetter_drinfeld) return;
  if (!v.coaction) {
    r.expect("has coaction", false, "Yetter-Drinfeld object carries no coaction");
    return;
  }
  const LinearMap& co = *v.coaction;
  if (co.domain() != v.space || co.codomain() != hv) {
    r.expect("coaction shape", false, "coaction must be V → H⊗V");
    return;
  }
  r.expect_equal("coaction coassociativity", apply_at(h.delta, 0, co), apply_at(co, 1, co));
  r.expect_equal("coaction counit", apply_at(h.eps, 0, co), LinearMap::identity(v.space));
  // (hv)_{(-1)} ⊗ (hv)_{(0)} = h1 v_{(-1)} S(h3) ⊗ h2 v_{(0)}
  const std::size_t kv = v.space.num_factors();
  LinearMap g = LinearMap::identity(hv);
  g = apply_at(h.delta, 0, g);
  g = apply_at(h.delta, 1, g);
  g = apply_at(co, 3, g);
  g = apply_at(h.S, 2, g);
  std::vector<std::size_t> order{0, 3, 2, 1};
  for (std::size_t k = 0; k < kv; ++k) order.push_back(4 + k);
  g = compose(permutation(g.codomain(), order), g);
  g = apply_at(h.m, 0, g);
  g = apply_at(h.m, 0, g);
  g = apply_at(act, 1, g);
  r.expect_equal("Yetter-Drinfeld compatibility", compose(co, act), g);
}

CheckReport BraidedCategory::check_object(const CatObject& v) const {
  CheckReport r("object " + v.space.describe());
  if (v.space.field() != field_) {
    r.expect("field", false, "object over " + v.space.field().name() + ", category over " + field_.name());
    return r;
  }
  if (graded()) {
    bool ok = true;
    std::string why;
    try {
      for (Index i = 0; i < v.space.dim(); ++i) (void)grade_of(v.space, i);
    } catch (const Error& e) {
      ok = false;
      why = e.what();
    }
    r.expect("grades lie in the grading group", ok, why);
  }
  if (module_kind()) check_module_object(v, r);
  return r;
}

void BraidedCategory::require_object(const CatObject& v) const {
  CheckReport r = check_object(v);
  if (const CheckEntry* e = r.first_failure())
    throw Error(Errc::object_not_in_category, v.space.describe() + " is not an object of " + name() + ": " + e->name +
                                                  (e->detail.empty() ? "" : " (" + e->detail + ")"));
}

bool BraidedCategory::is_homogeneous(const LinearMap& f) const {
  if (!graded()) return true;
  for (Index c = 0; c < f.cols(); ++c) {
    const int gc = grade_of(f.domain(), c);
    for (const auto& [r, v] : f.column(c))
      if (grade_of(f.codomain(), r) != gc) return false;
  }
  return true;
}

bool BraidedCategory::is_morphism(const LinearMap& f, const CatObject& src, const CatObject& dst) const {
  if (f.domain() != src.space || f.codomain() != dst.space) return false;
  if (graded()) return is_homogeneous(f);
  if (!module_kind()) return true;
  if (!src.action || !dst.action) return false;
  if (compose(f, *src.action) != compose(*dst.action, tensor(LinearMap::identity(bg_->H), f))) return false;
  if (kind_ == CategoryKind::yetter_drinfeld) {
    if (!src.coaction || !dst.coaction) return false;
    if (compose(*dst.coaction, f) != compose(tensor(LinearMap::identity(bg_->H), f), *src.coaction)) return false;
  }
  return true;
}

// --- braidings ----------------------------------------------------------------

LinearMap BraidedCategory::braiding(const CatObject& v, const CatObject& w) const {
  const Index dv = v.space.dim(), dw = w.space.dim();
  const Space dom = tensor(v.space, w.space), cod = tensor(w.space, v.space);
  std::vector<SparseVec> cols(dv * dw);
  switch (kind_) {
    case CategoryKind::trivial:
    case CategoryKind::koszul:
    case CategoryKind::bicharacter: {
      std::vector<int> gv(dv), gw(dw);
      for (Index i = 0; i < dv; ++i) gv[i] = grade_of(v.space, i);
      for (Index j = 0; j < dw; ++j) gw[j] = grade_of(w.space, j);
      for (Index i = 0; i < dv; ++i)
        for (Index j = 0; j < dw; ++j) cols[i * dw + j] = {{j * dv + i, chi(gv[i], gw[j])}};
      break;
    }
    case CategoryKind::r_matrix: {
      if (!v.action || !w.action) throw Error(Errc::object_not_in_category, "r_matrix braiding needs module objects");
      const Index d = bg_->H.dim();
      for (Index i = 0; i < dv; ++i)
        for (Index j = 0; j < dw; ++j) {
          SparseVec& col = cols[i * dw + j];  // from_columns merges repeated rows
          for (const auto& [ab, c] : R_) {
            const Index a = ab / d, b = ab % d;
            for (const auto& [x, s] : v.action->column(a * dv + i))
              for (const auto& [y, t] : w.action->column(b * dw + j)) col.emplace_back(y * dv + x, c * t * s);
          }
        }
      break;
    }
    case CategoryKind::yetter_drinfeld: {
      if (!v.coaction || !w.action) throw Error(Errc::object_not_in_category, "Yetter-Drinfeld braiding needs YD objects");
      for (Index i = 0; i < dv; ++i)
        for (Index j = 0; j < dw; ++j) {
          SparseVec& col = cols[i * dw + j];
          for (const auto& [ak, c] : v.coaction->column(i)) {
            const Index a = ak / dv, k = ak % dv;
            for (const auto& [l, t] : w.action->column(a * dw + j)) col.emplace_back(l * dv + k, c * t);
          }
        }
      break;
    }
  }
  return LinearMap::from_columns(dom, cod, std::move(cols));
}

LinearMap BraidedCategory::braiding_inverse(const CatObject& v, const CatObject& w) const {
  // ψ⁻¹_{V,W}: W⊗V → V⊗W
  const Index dv = v.space.dim(), dw = w.space.dim();
  const Space dom = tensor(w.space, v.space), cod = tensor(v.space, w.space);
  std::vector<SparseVec> cols(dv * dw);
  switch (kind_) {
    case CategoryKind::trivial:
    case CategoryKind::koszul:
    case CategoryKind::bicharacter: {
      for (Index i = 0; i < dv; ++i)
        for (Index j = 0; j < dw; ++j)
          cols[j * dv + i] = {{i * dw + j, chi(grade_of(v.space, i), grade_of(w.space, j)).inv()}};
      break;
    }
    case CategoryKind::r_matrix: {
      if (!v.action || !w.action) throw Error(Errc::object_not_in_category, "r_matrix braiding needs module objects");
      // w⊗v ↦ R⁻¹ ▷ (v⊗w)
      const Index d = bg_->H.dim();
      for (Index j = 0; j < dw; ++j)
        for (Index i = 0; i < dv; ++i) {
          SparseVec& col = cols[j * dv + i];
          for (const auto& [ab, c] : R_inv_) {
            const Index a = ab / d, b = ab % d;
            for (const auto& [x, s] : v.action->column(a * dv + i))
              for (const auto& [y, t] : w.action->column(b * dw + j)) col.emplace_back(x * dw + y, c * s * t);
          }
        }
      break;
    }
    case CategoryKind::yetter_drinfeld: {
      if (!v.coaction || !w.action) throw Error(Errc::object_not_in_category, "Yetter-Drinfeld braiding needs YD objects");
      // w⊗v ↦ v_{(0)} ⊗ S⁻¹(v_{(-1)}) w
      for (Index j = 0; j < dw; ++j)
        for (Index i = 0; i < dv; ++i) {
          SparseVec& col = cols[j * dv + i];
          for (const auto& [ak, c] : v.coaction->column(i)) {
            const Index a = ak / dv, k = ak % dv;
            for (const auto& [b, s] : S_inv_->column(a))
              for (const auto& [l, t] : w.action->column(b * dw + j)) col.emplace_back(k * dw + l, c * s * t);
          }
        }
      break;
    }
  }
  return LinearMap::from_columns(dom, cod, std::move(cols));
}

LinearMap BraidedCategory::block_braiding(const std::vector<CatObject>& left, const std::vector<CatObject>& right,
                                          Route route) const {
  if (route == Route::direct && !module_kind()) {
    CatObject l{Space::unit(field_), std::nullopt, std::nullopt}, r = l;
    for (const auto& o : left) l.space = tensor(l.space, o.space);
    for (const auto& o : right) r.space = tensor(r.space, o.space);
    return braiding(l, r);
  }
  std::vector<CatObject> cur = left;
  cur.insert(cur.end(), right.begin(), right.end());
  Space dom = Space::unit(field_);
  for (const auto& o : cur) dom = tensor(dom, o.space);
  LinearMap g = LinearMap::identity(dom);
  auto swap_at = [&](std::size_t k) {
    std::size_t offset = 0;
    for (std::size_t t = 0; t < k; ++t) offset += cur[t].space.num_factors();
    g = apply_at(braiding(cur[k], cur[k + 1]), offset, g);
    std::swap(cur[k], cur[k + 1]);
  };
  const std::size_t p = left.size(), q = right.size();
  if (route == Route::right_first) {
    // ψ_{A, B⊗C} = (1_B ⊗ ψ_{A,C})(ψ_{A,B} ⊗ 1_C): bring each right factor across the whole left block
    for (std::size_t j = 0; j < q; ++j)
      for (std::size_t pos = p + j; pos-- > j;) swap_at(pos);
  } else {
    // ψ_{A⊗B, C} = (ψ_{A,C} ⊗ 1_B)(1_A ⊗ ψ_{B,C}): carry each left factor, last first, across the right block
    for (std::size_t i = p; i-- > 0;)
      for (std::size_t pos = i; pos < i + q; ++pos) swap_at(pos);
  }
  return g;
}

LinearMap BraidedCategory::block_braiding(const CatObject& x, unsigned p, const CatObject& y, unsigned q) const {
  return block_braiding(std::vector<CatObject>(p, x), std::vector<CatObject>(q, y));
}

std::vector<std::string> BraidedCategory::notes() const {
  std::vector<std::string> out;
  if (kind_ == CategoryKind::bicharacter) {
    std::string e = "χ(a,b) = ζ_" + std::to_string(root_order_) + "^(aᵀEb) with E = [";
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
      if (i) e += "; ";
      for (std::size_t j = 0; j < exponents_[i].size(); ++j) e += (j ? " " : "") + std::to_string(exponents_[i][j]);
    }
    e += "]; this bicharacter is a choice of the implementation";
    out.push_back(e);
  }
  if (kind_ == CategoryKind::r_matrix) out.push_back("ψ(v⊗w) = R_2▷w ⊗ R_1▷v");
  if (kind_ == CategoryKind::yetter_drinfeld) out.push_back("ψ(v⊗w) = v_(-1)w ⊗ v_(0)");
  return out;
}

// --- category checks ------------------------------------------------------------

CheckReport check_category(const BraidedCategory& cat, const std::vector<CatObject>& objects,
                           const std::vector<Morphism>& maps) {
  CheckReport r("category " + cat.name());
  for (const auto& n : cat.notes()) r.note("braiding", n);
  for (std::size_t i = 0; i < objects.size(); ++i) r.merge(cat.check_object(objects[i]), "object " + std::to_string(i) + ": ");
  if (!r.passed()) return r;

  const CatObject unit = cat.unit_object();
  bool symmetric = true;
  std::string asym_witness;
  for (std::size_t a = 0; a < objects.size(); ++a) {
    const CatObject& A = objects[a];
    const std::string sa = std::to_string(a);
    r.expect_equal("ψ_{I,A} = id (A=" + sa + ")", cat.braiding(unit, A), LinearMap::identity(A.space));
    r.expect_equal("ψ_{A,I} = id (A=" + sa + ")", cat.braiding(A, unit), LinearMap::identity(A.space));
    for (std::size_t b = 0; b < objects.size(); ++b) {
      const CatObject& B = objects[b];
      const std::string sab = sa + "," + std::to_string(b);
      const LinearMap psi = cat.braiding(A, B), inv = cat.braiding_inverse(A, B);
      r.expect_equal("ψ⁻¹ψ = id (" + sab + ")", compose(inv, psi), LinearMap::identity(psi.domain()));
      r.expect_equal("ψψ⁻¹ = id (" + sab + ")", compose(psi, inv), LinearMap::identity(psi.codomain()));
      const LinearMap back = compose(cat.braiding(B, A), psi);
      if (!back.is_identity()) {
        symmetric = false;
        if (asym_witness.empty()) {
          auto d = first_difference(back, LinearMap::identity(back.domain()));
          asym_witness = "objects (" + sab + "), " + psi.domain().label(*d);
        }
      }
      for (std::size_t c = 0; c < objects.size(); ++c) {
        const CatObject& C = objects[c];
        const std::string sabc = sab + "," + std::to_string(c);
        const LinearMap idA = LinearMap::identity(A.space), idB = LinearMap::identity(B.space),
                        idC = LinearMap::identity(C.space);
        // ψ_{A,B⊗C} = (1_B ⊗ ψ_{A,C})(ψ_{A,B} ⊗ 1_C)
        r.expect_equal("hexagon ψ_{A,B⊗C} (" + sabc + ")", cat.braiding(A, cat.tensor_object(B, C)),
                       compose(tensor(idB, cat.braiding(A, C)), tensor(cat.braiding(A, B), idC)));
        // ψ_{A⊗B,C} = (ψ_{A,C} ⊗ 1_B)(1_A ⊗ ψ_{B,C})
        r.expect_equal("hexagon ψ_{A⊗B,C} (" + sabc + ")", cat.braiding(cat.tensor_object(A, B), C),
                       compose(tensor(cat.braiding(A, C), idB), tensor(idA, cat.braiding(B, C))));
      }
    }
  }
  for (std::size_t x = 0; x < maps.size(); ++x)
    for (std::size_t y = 0; y < maps.size(); ++y) {
      const Morphism& f = maps[x];
      const Morphism& g = maps[y];
      if (f.source >= objects.size() || f.target >= objects.size() || g.source >= objects.size() ||
          g.target >= objects.size())
        throw Error(Errc::invalid_argument, "morphism refers to an unknown object");
      if (!cat.is_morphism(f.map, objects[f.source], objects[f.target]) ||
          !cat.is_morphism(g.map, objects[g.source], objects[g.target])) {
        r.expect("naturality (" + std::to_string(x) + "," + std::to_string(y) + ")", false, "test map is not a morphism");
        continue;
      }
      // ψ_{A',B'} ∘ (f⊗g) = (g⊗f) ∘ ψ_{A,B}
      r.expect_equal("naturality (" + std::to_string(x) + "," + std::to_string(y) + ")",
                     compose(cat.braiding(objects[f.target], objects[g.target]), tensor(f.map, g.map)),
                     compose(tensor(g.map, f.map), cat.braiding(objects[f.source], objects[g.source])));
    }
  CheckEntry& s = r.expect("symmetric (ψ_{B,A}ψ_{A,B} = id)", symmetric, {}, false);
  s.witness = asym_witness;
  return r;
}

}  // namespace bhc
