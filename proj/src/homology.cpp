#include "bhc/homology.hpp"

#include <algorithm>

namespace bhc {

namespace {

Index kernel_dim(const LinearMap& f) { return f.cols() - rank(f); }

bool is_cocyclic(const ParaCocyclicModule& P) {
  for (unsigned n = 0; n <= P.max_degree; ++n)
    if (!power(P.tau[n], n + 1).is_identity()) return false;
  return true;
}

// Block matrix from (row block, col block, map) triples.
LinearMap assemble(const Space& dom, const std::vector<Index>& dom_off, const Space& cod, const std::vector<Index>& cod_off,
                   const std::vector<std::tuple<std::size_t, std::size_t, const LinearMap*>>& blocks) {
  std::vector<SparseVec> cols(dom.dim());
  for (const auto& [rb, cb, f] : blocks)
    for (Index j = 0; j < f->cols(); ++j)
      for (const auto& [i, x] : f->column(j)) cols[dom_off[cb] + j].emplace_back(cod_off[rb] + i, x);
  return LinearMap::from_columns(dom, cod, std::move(cols));
}

}  // namespace

std::vector<Index> ChainComplex::homology_dims() const {
  std::vector<Index> out;
  if (cohomological) {
    for (std::size_t n = 0; n < d.size(); ++n) out.push_back(kernel_dim(d[n]) - (n == 0 ? 0 : rank(d[n - 1])));
  } else {
    for (std::size_t n = 0; n + 1 < d.size(); ++n) out.push_back(kernel_dim(d[n]) - rank(d[n + 1]));
  }
  return out;
}

void require_d_squared_zero(const ChainComplex& c, const std::string& what) {
  for (std::size_t n = 0; n + 1 < c.d.size(); ++n) {
    const LinearMap dd = c.cohomological ? compose(c.d[n + 1], c.d[n]) : compose(c.d[n], c.d[n + 1]);
    if (!dd.is_zero()) {
      const LinearMap zero(dd.domain(), dd.codomain());
      const Index j = *first_difference(dd, zero);
      throw Error(Errc::verification_failed, what + ": d∘d ≠ 0 in degree " + std::to_string(c.cohomological ? n : n + 1) +
                                                 ", witness " + dd.domain().label(j));
    }
  }
}

ChainComplex hochschild_b(const ParaCocyclicModule& P) {
  const CheckReport r = verify_identities(P);
  for (const CheckEntry& e : r.entries())
    if (e.required && !e.passed && (e.name.rfind("δ", 0) == 0 || e.name.rfind("σ", 0) == 0))
      throw Error(Errc::precondition_failed, "cosimplicial identity " + e.name + " fails");
  ChainComplex c;
  c.spaces = P.spaces;
  for (unsigned n = 1; n <= P.max_degree; ++n) {
    LinearMap b(P.spaces[n - 1], P.spaces[n]);
    for (unsigned i = 0; i <= n; ++i) b += (i % 2 ? -P.face(n, i) : P.face(n, i));
    c.d.push_back(std::move(b));
  }
  require_d_squared_zero(c, "Hochschild complex of " + P.name);
  return c;
}

std::vector<LinearMap> connes_B(const ParaCocyclicModule& P) {
  if (!is_cocyclic(P)) throw Error(Errc::precondition_failed, P.name + " is not cocyclic (τ^{n+1} ≠ id); restrict first");
  const ChainComplex bc = hochschild_b(P);
  auto lambda = [&](unsigned k) { return k % 2 ? -P.tau[k] : P.tau[k]; };
  std::vector<LinearMap> B;
  for (unsigned n = 0; n < P.max_degree; ++n) {
    const LinearMap id_n = LinearMap::identity(P.spaces[n]);
    LinearMap N(P.spaces[n], P.spaces[n]), li = id_n;
    const LinearMap ln = lambda(n);
    for (unsigned i = 0; i <= n; ++i) {
      N += li;
      li = compose(ln, li);
    }
    const LinearMap s = compose(P.degeneracy(n, n), P.tau[n + 1]);
    const LinearMap one_minus = LinearMap::identity(P.spaces[n + 1]) - lambda(n + 1);
    LinearMap Bn = compose({N, s, one_minus});
    // fix the relative sign so that bB + Bb = 0 across consecutive degrees
    if (n >= 1) {
      const LinearMap lhs = compose(bc.d[n - 1], B[n - 1]);
      const LinearMap rhs = compose(Bn, bc.d[n]);
      if (lhs + rhs != LinearMap(lhs.domain(), lhs.codomain())) {
        if (lhs - rhs != LinearMap(lhs.domain(), lhs.codomain()))
          throw Error(Errc::calibration_failed, "bB + Bb ≠ 0 on C^" + std::to_string(n) + " for either sign of B");
        Bn = -Bn;
      }
    }
    B.push_back(std::move(Bn));
  }
  for (unsigned n = 0; n < B.size(); ++n) {
    if (n + 1 < B.size() && !compose(B[n], B[n + 1]).is_zero())
      throw Error(Errc::calibration_failed, "B² ≠ 0 on C^" + std::to_string(n + 2));
    if (n == 0 && !compose(B[0], bc.d[0]).is_zero()) throw Error(Errc::calibration_failed, "Bb ≠ 0 on C^0");
  }
  return B;
}

std::vector<Index> cyclic_cohomology(const ParaCocyclicModule& P, unsigned n_max, StaircaseOrder order) {
  if (P.max_degree < n_max + 1)
    throw Error(Errc::degree_out_of_range, "HC^" + std::to_string(n_max) + " needs the complex through degree " +
                                               std::to_string(n_max + 1));
  const ChainComplex bc = hochschild_b(P);
  const std::vector<LinearMap> B = connes_B(P);
  const Field F = P.spaces[0].field();

  // Tot^n = ⊕_{p ≥ 0, 2p ≤ n} C^{n-2p}; blocks listed by p ascending (column_first) or descending (row_first).
  auto blocks = [&](unsigned n) {
    std::vector<unsigned> degs;
    for (unsigned p = 0; 2 * p <= n; ++p) degs.push_back(n - 2 * p);
    if (order == StaircaseOrder::row_first) std::reverse(degs.begin(), degs.end());
    return degs;
  };
  struct Tot {
    Space space;
    std::vector<unsigned> degs;
    std::vector<Index> off;
  };
  auto tot = [&](unsigned n) {
    Tot t{Space(), blocks(n), {}};
    Index total = 0;
    for (unsigned k : t.degs) t.off.push_back(total), total += P.spaces[k].dim();
    t.space = Space::plain(F, "Tot" + std::to_string(n) + "_", total);
    return t;
  };
  std::vector<LinearMap> D;
  for (unsigned n = 0; n <= n_max; ++n) {
    const Tot src = tot(n), dst = tot(n + 1);
    std::vector<std::tuple<std::size_t, std::size_t, const LinearMap*>> parts;
    auto where = [](const Tot& t, unsigned k) {
      return static_cast<std::size_t>(std::find(t.degs.begin(), t.degs.end(), k) - t.degs.begin());
    };
    for (std::size_t cb = 0; cb < src.degs.size(); ++cb) {
      const unsigned k = src.degs[cb];
      parts.emplace_back(where(dst, k + 1), cb, &bc.d[k]);
      if (k >= 1) parts.emplace_back(where(dst, k - 1), cb, &B[k - 1]);
    }
    D.push_back(assemble(src.space, src.off, dst.space, dst.off, parts));
  }
  std::vector<Index> dims;
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n + 1 <= n_max && !compose(D[n + 1], D[n]).is_zero())
      throw Error(Errc::calibration_failed, "total differential does not square to zero in degree " + std::to_string(n));
    dims.push_back(kernel_dim(D[n]) - (n == 0 ? 0 : rank(D[n - 1])));
  }
  return dims;
}

std::vector<Index> cyclic_cohomology(const HopfObject& h, const ModularPair& pair, unsigned n_max) {
  ParaCocyclicModule P = build_cm(h, pair, n_max + 1, n_max + 1);
  if (!is_cocyclic(P)) P = restrict_to_cyclic(P).restricted;
  return cyclic_cohomology(P, n_max);
}

std::vector<Index> cotor(const HopfObject& h, const Cocharacter& sigma, unsigned n_max) {
  if (sigma.map.domain() != h.I() || sigma.map.codomain() != h.H()) throw Error(Errc::host_mismatch, "σ is not hosted by " + h.name());
  if (compose(h.delta(), sigma.map) != tensor(sigma.map, sigma.map) || !compose(h.eps(), sigma.map).is_identity())
    throw Error(Errc::precondition_failed, "σ is not grouplike");
  const Subquotient bar = kernel(h.eps(), "ker ε");
  const LinearMap& inc = bar.embed;
  const LinearMap raw = compose(h.delta(), inc) - tensor(h.eta(), inc) - tensor(inc, sigma.map);
  const auto reduced = factor_through(tensor(inc, inc), raw);
  if (!reduced) throw Error(Errc::precondition_failed, "reduced coproduct leaves ker ε ⊗ ker ε");
  const Space& Cb = bar.space();
  const std::size_t nc = Cb.num_factors();

  std::vector<LinearMap> d;
  d.push_back(LinearMap(Space::unit(h.field()), Cb));
  for (unsigned n = 1; n <= n_max; ++n) {
    const LinearMap id = LinearMap::identity(Cb.power(n));
    LinearMap dn(Cb.power(n), Cb.power(n + 1));
    for (unsigned i = 1; i <= n; ++i) {
      const LinearMap term = apply_at(*reduced, (i - 1) * nc, id);
      dn += (i % 2 ? -term : term);
    }
    d.push_back(std::move(dn));
  }
  ChainComplex c;
  for (unsigned n = 0; n <= n_max + 1; ++n) c.spaces.push_back(Cb.power(n));
  c.d = std::move(d);
  require_d_squared_zero(c, "reduced cobar complex of " + h.name());
  return c.homology_dims();
}

std::vector<Index> hochschild_dims(const HopfObject& h, const ModularPair& pair, unsigned n_max) {
  const ParaCocyclicModule P = build_cm(h, pair, n_max + 1, n_max + 1);
  return hochschild_b(P).homology_dims();
}

std::vector<Index> parity_partial_sums(const std::vector<Index>& v) {
  std::vector<Index> out;
  for (std::size_t n = 0; n < v.size(); ++n) out.push_back(v[n] + (n >= 2 ? out[n - 2] : 0));
  return out;
}

Decomposition decomposition_check(const HopfObject& h, unsigned n_max) {
  if (!is_braided_commutative(h)) throw Error(Errc::precondition_failed, h.name() + " is not braided commutative (mψ ≠ m)");
  Decomposition out;
  out.hc = cyclic_cohomology(h, trivial_pair(h), n_max);
  out.hh = cotor(h, unit_cocharacter(h), n_max);
  out.partial_sums = parity_partial_sums(out.hh);
  out.report = CheckReport("HC^n = ⊕_{i ≡ n} HH^i for " + h.name());
  for (unsigned n = 0; n <= n_max; ++n)
    out.report.expect("HC^" + std::to_string(n) + " = Σ HH^i", out.hc[n] == out.partial_sums[n],
                      std::to_string(out.hc[n]) + " = " + std::to_string(out.partial_sums[n]));
  return out;
}

}  // namespace bhc
