#include "bhc/cocyclic.hpp"

#include <algorithm>
#include <map>

namespace bhc {

namespace {

std::size_t nf(const Space& s) { return s.num_factors(); }

void check_cap(unsigned n_max, unsigned cap) {
  if (n_max > cap)
    throw Error(Errc::cap_exceeded, "degree " + std::to_string(n_max) + " exceeds the cap " + std::to_string(cap));
}

void require_pair(const HopfObject& h, const ModularPair& pair) {
  const CheckReport r = check_modular_pair(h, pair.delta, pair.sigma);
  if (const CheckEntry* e = r.first_failure()) throw Error(Errc::precondition_failed, "not a modular pair: " + e->name + " fails");
}

std::string deg(unsigned n) { return std::to_string(n); }

}  // namespace

// --- Hopf route ------------------------------------------------------------------

LinearMap cm_multiplication(const HopfObject& h, unsigned n) {
  if (n == 0) throw Error(Errc::degree_out_of_range, "m_n needs n ≥ 1");
  return cm_multiplication(h, n, LinearMap::identity(h.H().power(2 * n)));
}

LinearMap cm_multiplication(const HopfObject& h, unsigned n, LinearMap g) {
  if (n == 0) throw Error(Errc::degree_out_of_range, "m_n needs n ≥ 1");
  const std::size_t nh = nf(h.H());
  for (unsigned j = n - 1; j >= 1; --j)
    for (unsigned k = 0; k < n - j; ++k) g = apply_at(h.psi(), (j + 2 * k) * nh, g);
  for (unsigned k = 0; k < n; ++k) g = apply_at(h.m(), k * nh, g);
  return g;
}

ParaCocyclicModule build_cm(const HopfObject& h, const ModularPair& pair, unsigned n_max, unsigned cap) {
  check_cap(n_max, cap);
  require_pair(h, pair);
  return build_cm_unchecked(h, pair, n_max, cap);
}

ParaCocyclicModule build_cm_unchecked(const HopfObject& h, const ModularPair& pair, unsigned n_max, unsigned cap) {
  check_cap(n_max, cap);
  const std::size_t nh = nf(h.H());
  const LinearMap St = twisted_antipode(h, pair.delta);
  const LinearMap& sigma = pair.sigma.map;

  ParaCocyclicModule P;
  P.name = "CM(" + h.name() + (pair.name.empty() ? "" : ", " + pair.name) + ")";
  P.max_degree = n_max;
  P.host = h;
  P.notes.push_back("τ_n = m_n(Δ^{n-1}S̃, 1_{H^{n-1}}, σ), m_n = (m,...,m)ℱ_n(ψ)");
  for (unsigned n = 0; n <= n_max; ++n) P.spaces.push_back(h.H().power(n));
  P.faces.resize(n_max + 1);
  for (unsigned n = 1; n <= n_max; ++n) {
    const LinearMap id = LinearMap::identity(h.H().power(n - 1));
    P.faces[n].push_back(tensor(h.eta(), id));
    for (unsigned i = 1; i < n; ++i) P.faces[n].push_back(apply_at(h.delta(), (i - 1) * nh, id));
    P.faces[n].push_back(tensor(id, sigma));
  }
  P.degeneracies.resize(n_max);
  for (unsigned n = 0; n < n_max; ++n) {
    const LinearMap id = LinearMap::identity(h.H().power(n + 1));
    for (unsigned i = 0; i <= n; ++i) P.degeneracies[n].push_back(apply_at(h.eps(), i * nh, id));
  }
  P.tau.push_back(LinearMap::identity(P.spaces[0]));
  for (unsigned n = 1; n <= n_max; ++n) {
    const LinearMap head = compose(h.delta_power(n - 1), St);
    const LinearMap spread = tensor({head, LinearMap::identity(h.H().power(n - 1)), sigma});
    P.tau.push_back(cm_multiplication(h, n, spread));
  }
  return P;
}

// --- triples ---------------------------------------------------------------------

ParaCocyclicModule build_triple(const ModuleCoalgebra& C, const SaydModule& M, unsigned n_max, bool balanced, unsigned cap) {
  check_cap(n_max, cap);
  {
    const CheckReport rc = check_module_coalgebra(C);
    if (const CheckEntry* e = rc.first_failure()) throw Error(Errc::precondition_failed, "module coalgebra: " + e->name + " fails");
    for (const CheckReport& r : {check_right_module(M.module), check_left_comodule(M.comodule)})
      if (const CheckEntry* e = r.first_failure()) throw Error(Errc::precondition_failed, M.name + ": " + e->name + " fails");
  }
  const HopfObject& h = C.H;
  const BraidedCategory& cat = h.cat();
  const std::size_t nm = nf(M.M().space), nc = nf(C.C.space);
  const Space& Ms = M.M().space;
  const LinearMap psiHM = cat.braiding(h.carrier(), M.M());

  ParaCocyclicModule P;
  P.name = std::string(balanced ? "balanced " : "") + "triple(" + h.name() + ", " + C.C.space.describe() + ", " + M.name + ")";
  P.max_degree = n_max;
  auto cpow = [&](unsigned k) { return C.C.space.power(k); };
  auto psi_C_Cn = [&](unsigned n) {
    return cat.block_braiding(std::vector<CatObject>{C.C}, std::vector<CatObject>(n, C.C));
  };
  // shared tail of δ_n and τ_n, applied to H⊗M⊗C^{n+1}
  auto twist = [&](LinearMap g, unsigned n) {
    g = apply_at(psiHM, 0, g);
    g = apply_at(C.phiC, nm, g);
    return apply_at(psi_C_Cn(n), nm, g);
  };

  std::vector<Space> raw;
  for (unsigned n = 0; n <= n_max; ++n) raw.push_back(tensor(Ms, cpow(n + 1)));
  std::vector<std::vector<LinearMap>> faces(n_max + 1), degs(n_max);
  std::vector<LinearMap> tau;
  for (unsigned n = 1; n <= n_max; ++n) {
    const LinearMap id = LinearMap::identity(raw[n - 1]);
    for (unsigned i = 0; i < n; ++i) faces[n].push_back(apply_at(C.deltaC, nm + i * nc, id));
    const LinearMap g = tensor({M.rho(), C.deltaC, LinearMap::identity(cpow(n - 1))});
    faces[n].push_back(twist(g, n));
  }
  for (unsigned n = 0; n < n_max; ++n) {
    const LinearMap id = LinearMap::identity(raw[n + 1]);
    for (unsigned i = 0; i <= n; ++i) degs[n].push_back(apply_at(C.epsC, nm + (i + 1) * nc, id));
  }
  for (unsigned n = 0; n <= n_max; ++n) {
    const LinearMap g = tensor(M.rho(), LinearMap::identity(cpow(n + 1)));
    tau.push_back(twist(g, n));
  }

  if (!balanced) {
    P.spaces = raw;
    P.faces = std::move(faces);
    P.degeneracies = std::move(degs);
    P.tau = std::move(tau);
    P.notes.push_back("operators follow the displayed triple formulas literally");
    return P;
  }

  for (unsigned n = 0; n <= n_max; ++n) {
    const CatObject Cn = cat.tensor_objects(std::vector<CatObject>(n + 1, C.C));
    P.pieces.push_back(balanced_tensor(M.module, Cn, diagonal_action(C, n), "M⊗_H C^" + deg(n + 1)));
    P.spaces.push_back(P.pieces.back().space());
  }
  auto descend = [&](const LinearMap& op, unsigned a, unsigned b, const std::string& what) {
    auto h_op = induced(P.pieces[a], P.pieces[b], op);
    if (!h_op) throw Error(Errc::induced_map_undefined, what + " does not descend to the balanced tensor products");
    return *h_op;
  };
  P.faces.resize(n_max + 1);
  for (unsigned n = 1; n <= n_max; ++n)
    for (unsigned i = 0; i <= n; ++i)
      P.faces[n].push_back(descend(faces[n][i], n - 1, n, "δ_" + deg(i) + " in degree " + deg(n)));
  P.degeneracies.resize(n_max);
  for (unsigned n = 0; n < n_max; ++n)
    for (unsigned i = 0; i <= n; ++i)
      P.degeneracies[n].push_back(descend(degs[n][i], n + 1, n, "σ_" + deg(i) + " in degree " + deg(n)));
  for (unsigned n = 0; n <= n_max; ++n) P.tau.push_back(descend(tau[n], n, n, "τ_" + deg(n)));
  P.notes.push_back("operators induced through the balanced-tensor projections");
  return P;
}

LinearMap balanced_identification(const ParaCocyclicModule& balanced, const HopfObject& h, unsigned n) {
  if (balanced.pieces.size() <= n) throw Error(Errc::degree_out_of_range, "no balanced piece in degree " + deg(n));
  const Subquotient& q = balanced.pieces[n];
  const LinearMap insert = tensor(h.eta(), LinearMap::identity(h.H().power(n)));
  if (insert.codomain() != q.project.domain())
    throw Error(Errc::precondition_failed, "the identification needs M = I and C = H");
  return compose(q.project, insert);
}

// --- super sign route ------------------------------------------------------------

namespace {

using Tuple = std::vector<Index>;

struct Degree {
  Space space;
  std::vector<Tuple> basis;
  std::map<Tuple, Index> index;
};

class Accumulator {
 public:
  explicit Accumulator(const Degree& d) : d_(d) {}
  void add(const Tuple& t, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = d_.index.find(t);
    if (it == d_.index.end())
      throw Error(Errc::truncation_overflow, "a term leaves the filtered range of " + d_.space.describe());
    auto [pos, inserted] = acc_.emplace(it->second, c);
    if (!inserted) pos->second += c;
  }
  SparseVec take() {
    std::vector<std::pair<Index, Scalar>> v(acc_.begin(), acc_.end());
    acc_.clear();
    return make_sparse(std::move(v));
  }

 private:
  const Degree& d_;
  std::map<Index, Scalar> acc_;
};

// All ways to pick one term from each vector: calls f(tuple, coefficient).
template <class F>
void expand(const std::vector<SparseVec>& slots, const Scalar& coeff, F&& f) {
  Tuple t(slots.size());
  auto rec = [&](auto&& self, std::size_t k, const Scalar& c) -> void {
    if (k == slots.size()) {
      f(t, c);
      return;
    }
    for (const auto& [i, x] : slots[k]) {
      t[k] = i;
      self(self, k + 1, c * x);
    }
  };
  rec(rec, 0, coeff);
}

SparseVec mul_vec(const SuperHopfBasis& H, const SparseVec& a, const SparseVec& b) {
  SparseVec out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) axpy(out, x * y, H.product(i, j));
  return out;
}

}  // namespace

std::vector<std::vector<Index>> basis_tuples(const SuperHopfBasis& H, unsigned n, std::optional<unsigned> filtration_cap) {
  std::vector<Tuple> out;
  const Index d = H.size();
  if (d == 0 && n > 0) return out;
  Tuple t(n, 0);
  for (bool more = true; more;) {
    unsigned fil = 0;
    for (Index x : t) fil += H.filtration(x);
    if (!filtration_cap || fil <= *filtration_cap) out.push_back(t);
    more = false;
    for (std::size_t k = n; k-- > 0;) {
      if (++t[k] < d) {
        more = true;
        break;
      }
      t[k] = 0;
    }
  }
  return out;
}

Space cochain_space(const SuperHopfBasis& H, unsigned n, std::optional<unsigned> filtration_cap, const std::string& name) {
  if (n == 0) return Space::unit(H.field());
  std::vector<std::string> labels;
  std::vector<int> grades;
  for (const Tuple& t : basis_tuples(H, n, filtration_cap)) {
    int par = 0;
    std::string l;
    for (std::size_t k = 0; k < t.size(); ++k) par ^= H.parity(t[k]), l += (k ? "⊗" : "") + H.label(t[k]);
    labels.push_back(l);
    grades.push_back(par);
  }
  const std::string suffix = filtration_cap ? "≤" + std::to_string(*filtration_cap) : "";
  return Space::atom(H.field(), name + "^" + std::to_string(n) + suffix, labels, grades);
}

namespace {

class HopfBasisAdapter final : public SuperHopfBasis {
 public:
  explicit HopfBasisAdapter(const HopfObject& h) : h_(h), d_(h.H().dim()) {
    if (h.cat().kind() != CategoryKind::koszul)
      throw Error(Errc::precondition_failed, "the sign-formula route needs a Hopf object in the Koszul category");
    for (Index i = 0; i < d_; ++i) parity_.push_back(h.cat().grade_of(h.H(), i));
  }
  Field field() const override { return h_.field(); }
  Index size() const override { return d_; }
  std::string label(Index a) const override { return h_.H().label(a); }
  int parity(Index a) const override { return parity_[a]; }
  SparseVec unit() const override { return h_.eta().column(0); }
  SparseVec product(Index a, Index b) const override { return h_.m().column(a * d_ + b); }
  std::vector<std::tuple<Index, Index, Scalar>> coproduct(Index a) const override {
    std::vector<std::tuple<Index, Index, Scalar>> out;
    for (const auto& [k, c] : h_.delta().column(a)) out.emplace_back(k / d_, k % d_, c);
    return out;
  }
  SparseVec antipode(Index a) const override { return h_.S().column(a); }
  Scalar counit(Index a) const override { return h_.eps().entry(0, a); }

 private:
  const HopfObject& h_;
  Index d_;
  std::vector<int> parity_;
};

ParaCocyclicModule build_super_impl(const SuperHopfBasis& H, const std::vector<Scalar>& delta, const SparseVec& sigma,
                                    unsigned n_max, std::optional<unsigned> fcap, const std::optional<Space>& carrier,
                                    const std::string& name) {
  const Field F = H.field();
  const Index d = H.size();
  if (delta.size() != d) throw Error(Errc::space_mismatch, "δ must have one value per basis vector");
  for (const auto& [i, c] : sigma)
    if (H.parity(i) != 0) throw Error(Errc::precondition_failed, "σ must be even");

  // degree n basis tuples, lexicographic (= left-major), filtered by total filtration
  std::vector<Degree> D(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    Degree& dg = D[n];
    for (Tuple& t : basis_tuples(H, n, fcap)) {
      dg.index.emplace(t, dg.basis.size());
      dg.basis.push_back(std::move(t));
    }
    dg.space = carrier && !fcap ? carrier->power(n) : cochain_space(H, n, fcap, name);
  }

  // S̃(x) = Σ δ(x') S(x'')
  std::vector<SparseVec> St(d);
  for (Index a = 0; a < d; ++a)
    for (const auto& [x, y, c] : H.coproduct(a))
      if (!delta[x].is_zero()) axpy(St[a], c * delta[x], H.antipode(y));

  ParaCocyclicModule P;
  P.name = "CM-super(" + name + ")";
  P.max_degree = n_max;
  P.notes.push_back("τ_n assembled by the super sign formula αβ");
  for (unsigned n = 0; n <= n_max; ++n) P.spaces.push_back(D[n].space);

  P.faces.resize(n_max + 1);
  for (unsigned n = 1; n <= n_max; ++n) {
    const Degree &src = D[n - 1], &dst = D[n];
    for (unsigned i = 0; i <= n; ++i) {
      std::vector<SparseVec> cols;
      Accumulator acc(dst);
      for (const Tuple& t : src.basis) {
        const Scalar one(F, 1L);
        if (i == 0) {
          for (const auto& [u, c] : H.unit()) {
            Tuple s{u};
            s.insert(s.end(), t.begin(), t.end());
            acc.add(s, c);
          }
        } else if (i == n) {
          for (const auto& [u, c] : sigma) {
            Tuple s = t;
            s.push_back(u);
            acc.add(s, c);
          }
        } else {
          for (const auto& [x, y, c] : H.coproduct(t[i - 1])) {
            Tuple s(t.begin(), t.begin() + (i - 1));
            s.push_back(x);
            s.push_back(y);
            s.insert(s.end(), t.begin() + i, t.end());
            acc.add(s, c);
          }
        }
        cols.push_back(acc.take());
      }
      P.faces[n].push_back(LinearMap::from_columns(src.space, dst.space, std::move(cols)));
    }
  }

  P.degeneracies.resize(n_max);
  for (unsigned n = 0; n < n_max; ++n) {
    const Degree &src = D[n + 1], &dst = D[n];
    for (unsigned i = 0; i <= n; ++i) {
      std::vector<SparseVec> cols;
      Accumulator acc(dst);
      for (const Tuple& t : src.basis) {
        Tuple s = t;
        s.erase(s.begin() + i);
        acc.add(s, H.counit(t[i]));
        cols.push_back(acc.take());
      }
      P.degeneracies[n].push_back(LinearMap::from_columns(src.space, dst.space, std::move(cols)));
    }
  }

  P.tau.push_back(LinearMap::identity(D[0].space));
  for (unsigned n = 1; n <= n_max; ++n) {
    const Degree& dg = D[n];
    std::vector<SparseVec> cols;
    Accumulator acc(dg);
    for (const Tuple& t : dg.basis) {
      // right-nested Δ^{n-1}(h_1)
      std::vector<std::pair<Tuple, Scalar>> pieces{{Tuple{t[0]}, Scalar(F, 1L)}};
      for (unsigned k = 1; k < n; ++k) {
        std::vector<std::pair<Tuple, Scalar>> next;
        for (const auto& [p, c] : pieces)
          for (const auto& [x, y, e] : H.coproduct(p.back())) {
            Tuple q = p;
            q.back() = x;
            q.push_back(y);
            next.emplace_back(std::move(q), c * e);
          }
        pieces = std::move(next);
      }
      for (const auto& [p, c] : pieces) {
        int sign = 0;
        for (unsigned i = 0; i < n; ++i)
          for (unsigned j = i + 1; j < n; ++j) sign ^= H.parity(p[i]) & H.parity(p[j]);  // α
        for (unsigned j = 1; j < n; ++j) {                                                 // β
          int tail = 0;
          for (unsigned k = 1; k <= n - j; ++k) tail ^= H.parity(t[k]);
          sign ^= H.parity(p[j - 1]) & tail;
        }
        std::vector<SparseVec> slots;
        for (unsigned k = 1; k < n; ++k) {
          SparseVec hk{{t[k], Scalar(F, 1L)}};
          slots.push_back(mul_vec(H, H.antipode(p[n - k]), hk));
        }
        slots.push_back(mul_vec(H, St[p[0]], sigma));
        expand(slots, sign ? -c : c, [&](const Tuple& s, const Scalar& x) { acc.add(s, x); });
      }
      cols.push_back(acc.take());
    }
    P.tau.push_back(LinearMap::from_columns(dg.space, dg.space, std::move(cols)));
  }
  return P;
}

}  // namespace

ParaCocyclicModule build_cm_super(const SuperHopfBasis& H, const std::vector<Scalar>& delta, const SparseVec& sigma,
                                  unsigned n_max, std::optional<unsigned> filtration_cap, const std::string& name) {
  return build_super_impl(H, delta, sigma, n_max, filtration_cap, std::nullopt, name);
}

ParaCocyclicModule build_cm_super(const HopfObject& h, const ModularPair& pair, unsigned n_max, unsigned cap) {
  check_cap(n_max, cap);
  require_pair(h, pair);
  const HopfBasisAdapter adapter(h);
  std::vector<Scalar> delta;
  for (Index i = 0; i < h.H().dim(); ++i) delta.push_back(pair.delta.map.entry(0, i));
  ParaCocyclicModule P = build_super_impl(adapter, delta, pair.sigma.map.column(0), n_max, std::nullopt, h.H(), h.name());
  P.name = "CM-super(" + h.name() + (pair.name.empty() ? "" : ", " + pair.name) + ")";
  return P;
}

// --- verification ----------------------------------------------------------------

CheckReport verify_identities(const ParaCocyclicModule& P) {
  CheckReport r("para-cocyclic identities for " + P.name);
  const unsigned N = P.max_degree;
  auto d = [&](unsigned n, unsigned i) -> const LinearMap& { return P.face(n, i); };
  auto s = [&](unsigned n, unsigned i) -> const LinearMap& { return P.degeneracy(n, i); };
  auto tag = [](unsigned n, unsigned i, unsigned j) {
    return " [n=" + std::to_string(n) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + "]";
  };
  // δ: C^{n-1} → C^n, σ: C^{n+1} → C^n
  for (unsigned n = 1; n + 1 <= N; ++n)
    for (unsigned j = 1; j <= n + 1; ++j)
      for (unsigned i = 0; i < j; ++i)
        r.expect_equal("δ_jδ_i = δ_iδ_{j-1}" + tag(n, i, j), compose(d(n + 1, j), d(n, i)), compose(d(n + 1, i), d(n, j - 1)));
  for (unsigned n = 1; n + 1 <= N; ++n)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned i = 0; i <= j; ++i)
        r.expect_equal("σ_jσ_i = σ_iσ_{j+1}" + tag(n, i, j), compose(s(n - 1, j), s(n, i)), compose(s(n - 1, i), s(n, j + 1)));
  for (unsigned n = 0; n + 1 <= N; ++n)
    for (unsigned j = 0; j <= n; ++j)
      for (unsigned i = 0; i <= n + 1; ++i) {
        const LinearMap lhs = compose(s(n, j), d(n + 1, i));
        if (i == j || i == j + 1)
          r.expect_equal("σ_jδ_i = id" + tag(n, i, j), lhs, LinearMap::identity(P.spaces[n]));
        else if (i < j)
          r.expect_equal("σ_jδ_i = δ_iσ_{j-1}" + tag(n, i, j), lhs, compose(d(n, i), s(n - 1, j - 1)));
        else
          r.expect_equal("σ_jδ_i = δ_{i-1}σ_j" + tag(n, i, j), lhs, compose(d(n, i - 1), s(n - 1, j)));
      }
  for (unsigned n = 1; n <= N; ++n) {
    r.expect_equal("τ_nδ_0 = δ_n" + tag(n, 0, n), compose(P.tau[n], d(n, 0)), d(n, n));
    for (unsigned i = 1; i <= n; ++i)
      r.expect_equal("τ_nδ_i = δ_{i-1}τ_{n-1}" + tag(n, i, 0), compose(P.tau[n], d(n, i)), compose(d(n, i - 1), P.tau[n - 1]));
  }
  for (unsigned n = 0; n + 1 <= N; ++n) {
    r.expect_equal("τ_nσ_0 = σ_nτ_{n+1}²" + tag(n, 0, n), compose(P.tau[n], s(n, 0)),
                   compose({s(n, n), P.tau[n + 1], P.tau[n + 1]}));
    for (unsigned i = 1; i <= n; ++i)
      r.expect_equal("τ_nσ_i = σ_{i-1}τ_{n+1}" + tag(n, i, 0), compose(P.tau[n], s(n, i)), compose(s(n, i - 1), P.tau[n + 1]));
  }
  for (unsigned n = 0; n <= N; ++n)
    r.expect_equal("τ_n^{n+1} = id [n=" + std::to_string(n) + "]", power(P.tau[n], n + 1), LinearMap::identity(P.spaces[n]),
                   false);
  return r;
}

TauPower tau_power(const ParaCocyclicModule& P, unsigned n) {
  if (n < 1 || n > P.max_degree)
    throw Error(Errc::degree_out_of_range, "τ-power needs 1 ≤ n ≤ " + std::to_string(P.max_degree));
  if (!P.host) throw Error(Errc::precondition_failed, "τ-power comparison needs a module built by build_cm");
  TauPower t;
  t.tau_power = power(P.tau[n], n + 1);
  t.psi_power = power(P.host->block_psi(n - 1, 1), n);
  t.equal = t.tau_power == t.psi_power;
  return t;
}

CocyclicModule restrict_to_cyclic(const ParaCocyclicModule& P) {
  CocyclicModule out;
  ParaCocyclicModule& R = out.restricted;
  R.name = "ker(1-τ^{n+1}) of " + P.name;
  R.max_degree = P.max_degree;
  R.notes = P.notes;
  for (unsigned n = 0; n <= P.max_degree; ++n) {
    const LinearMap f = LinearMap::identity(P.spaces[n]) - power(P.tau[n], n + 1);
    out.pieces.push_back(kernel(f, "ker(1-τ^" + std::to_string(n + 1) + ")"));
    R.spaces.push_back(out.pieces.back().space());
  }
  auto restrict = [&](const LinearMap& op, unsigned a, unsigned b, const std::string& what) {
    auto h = induced(out.pieces[a], out.pieces[b], op);
    if (!h) {
      // name the first kernel vector that leaves the target kernel
      const LinearMap img = compose(op, out.pieces[a].embed);
      std::string witness;
      for (Index j = 0; j < img.cols() && witness.empty(); ++j) {
        const LinearMap col = LinearMap::from_columns(Space::plain(img.field(), "v", 1), img.codomain(), {img.column(j)});
        if (!factor_through(out.pieces[b].embed, col))
          witness = format_vector(P.spaces[a], out.pieces[a].embed.column(j));
      }
      throw Error(Errc::restriction_undefined, what + " does not preserve ker(1-τ^{n+1}); witness " + witness);
    }
    return *h;
  };
  R.faces.resize(P.max_degree + 1);
  for (unsigned n = 1; n <= P.max_degree; ++n)
    for (unsigned i = 0; i <= n; ++i) R.faces[n].push_back(restrict(P.face(n, i), n - 1, n, "δ_" + deg(i) + " in degree " + deg(n)));
  R.degeneracies.resize(P.max_degree);
  for (unsigned n = 0; n < P.max_degree; ++n)
    for (unsigned i = 0; i <= n; ++i)
      R.degeneracies[n].push_back(restrict(P.degeneracy(n, i), n + 1, n, "σ_" + deg(i) + " in degree " + deg(n)));
  for (unsigned n = 0; n <= P.max_degree; ++n) R.tau.push_back(restrict(P.tau[n], n, n, "τ_" + deg(n)));
  return out;
}

}  // namespace bhc
