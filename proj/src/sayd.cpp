#include "bhc/sayd.hpp"

namespace bhc {

namespace {

std::size_t nf(const Space& s) { return s.num_factors(); }

void require_passed(const CheckReport& r, const std::string& what) {
  if (const CheckEntry* e = r.first_failure())
    throw Error(Errc::precondition_failed, what + ": " + e->name + " fails" + (e->witness.empty() ? "" : " at " + e->witness));
}

void require_shape(const LinearMap& f, const Space& d, const Space& c, const char* what) {
  if (f.domain() != d || f.codomain() != c)
    throw Error(Errc::space_mismatch, std::string(what) + " must map " + d.describe() + " → " + c.describe());
}

}  // namespace

CheckReport check_right_module(const RightModule& mod) {
  const HopfObject& h = mod.H;
  const Space& M = mod.M.space;
  CheckReport r("right module " + M.describe() + " over " + h.name());
  const LinearMap idMHH = LinearMap::identity(tensor(M, h.H().power(2)));
  r.expect_equal("φ(1⊗m) = φ(φ⊗1)", compose(mod.phi, apply_at(h.m(), nf(M), idMHH)),
                 compose(mod.phi, apply_at(mod.phi, 0, idMHH)));
  r.expect_equal("φ(1⊗η) = id", compose(mod.phi, tensor(LinearMap::identity(M), h.eta())), LinearMap::identity(M));
  return r;
}

CheckReport check_left_comodule(const LeftComodule& c) {
  const HopfObject& h = c.H;
  CheckReport r("left comodule " + c.M.space.describe() + " over " + h.name());
  r.expect_equal("(Δ⊗1)ρ = (1⊗ρ)ρ", apply_at(h.delta(), 0, c.rho), apply_at(c.rho, nf(h.H()), c.rho));
  r.expect_equal("(ε⊗1)ρ = id", apply_at(h.eps(), 0, c.rho), LinearMap::identity(c.M.space));
  return r;
}

CheckReport check_module_coalgebra(const ModuleCoalgebra& c) {
  const HopfObject& h = c.H;
  const Space& C = c.C.space;
  const std::size_t nh = nf(h.H()), nc = nf(C);
  CheckReport r("module coalgebra " + C.describe() + " over " + h.name());
  r.expect_equal("(Δ_C⊗1)Δ_C = (1⊗Δ_C)Δ_C", apply_at(c.deltaC, 0, c.deltaC), apply_at(c.deltaC, nc, c.deltaC));
  r.expect_equal("(ε_C⊗1)Δ_C = id", apply_at(c.epsC, 0, c.deltaC), LinearMap::identity(C));
  r.expect_equal("(1⊗ε_C)Δ_C = id", apply_at(c.epsC, nc, c.deltaC), LinearMap::identity(C));
  const LinearMap idHHC = LinearMap::identity(tensor(h.H().power(2), C));
  r.expect_equal("φ_C(m⊗1) = φ_C(1⊗φ_C)", compose(c.phiC, apply_at(h.m(), 0, idHHC)),
                 compose(c.phiC, apply_at(c.phiC, nh, idHHC)));
  r.expect_equal("φ_C(η⊗1) = id", compose(c.phiC, tensor(h.eta(), LinearMap::identity(C))), LinearMap::identity(C));
  LinearMap g = tensor(h.delta(), c.deltaC);
  g = apply_at(h.cat().braiding(h.carrier(), c.C), nh, g);
  g = apply_at(c.phiC, 0, g);
  g = apply_at(c.phiC, nc, g);
  r.expect_equal("Δ_Cφ_C = (φ_C⊗φ_C)(1⊗ψ_{H,C}⊗1)(Δ_H⊗Δ_C)", compose(c.deltaC, c.phiC), g);
  r.expect_equal("ε_Cφ_C = ε_H⊗ε_C", compose(c.epsC, c.phiC), tensor(h.eps(), c.epsC));
  return r;
}

SaydModule make_sayd(RightModule module, LeftComodule comodule, std::string name) {
  const Space& M = module.M.space;
  if (comodule.M.space != M) throw Error(Errc::space_mismatch, "module and comodule live on different spaces");
  require_shape(module.phi, tensor(M, module.H.H()), M, "φ_M");
  require_shape(comodule.rho, M, tensor(comodule.H.H(), M), "ρ_M");
  return SaydModule{std::move(module), std::move(comodule), std::move(name)};
}

SaydModule sigma_I_delta(const HopfObject& h, const ModularPair& pair) {
  require_passed(check_modular_pair(h, pair.delta, pair.sigma), "not a modular pair");
  const CatObject I = h.cat().unit_object();
  const std::string name = pair.name.empty() ? std::string("σI_δ") : "I" + pair.name;
  return make_sayd(RightModule{h, I, pair.delta.map}, LeftComodule{h, I, pair.sigma.map}, name);
}

LinearMap ayd_rhs(const SaydModule& s) {
  const HopfObject& h = s.H();
  const std::size_t nh = nf(h.H()), nm = nf(s.M().space);
  const BraidedCategory& cat = h.cat();
  const LinearMap psiMH = cat.braiding(s.M(), h.carrier());
  const LinearMap psiH2H = cat.block_braiding({h.carrier(), h.carrier()}, {h.carrier()});
  LinearMap g = tensor(s.rho(), h.delta_power(2));  // H M H H H
  g = apply_at(psiMH, nh, g);                       // H H M H H
  g = apply_at(h.psi(), 2 * nh + nm, g);
  g = apply_at(psiMH, 2 * nh, g);  // H H H M H
  g = apply_at(psiH2H, 0, g);
  g = apply_at(compose(h.m(), tensor(h.S(), h.m())), 0, g);
  return apply_at(s.phi(), nh, g);
}

CheckReport check_aYD(const SaydModule& s) {
  require_passed(check_right_module(s.module), "module axioms");
  require_passed(check_left_comodule(s.comodule), "comodule axioms");
  CheckReport r("anti-Yetter-Drinfeld condition for " + s.name + " over " + s.H().name());
  r.note("composite", "ρ⊗Δ², (1,ψ_{M,H},1,1), (1,1,1,ψ_{H,H}), (1,1,ψ_{M,H},1), (ψ_{H²,H},1,1), S, m, m, φ");
  r.expect_equal("ρφ = [m(S⊗m)⊗φ][ψ-shuffle][ρ⊗Δ²]", compose(s.rho(), s.phi()), ayd_rhs(s));
  return r;
}

CheckReport check_stability(const SaydModule& s) {
  require_passed(check_right_module(s.module), "module axioms");
  require_passed(check_left_comodule(s.comodule), "comodule axioms");
  CheckReport r("stability for " + s.name + " over " + s.H().name());
  const LinearMap psiHM = s.H().cat().braiding(s.H().carrier(), s.M());
  r.expect_equal("φψ_{H,M}ρ = id", compose({s.phi(), psiHM, s.rho()}), LinearMap::identity(s.M().space));
  return r;
}

ModuleCoalgebra regular_module_coalgebra(const HopfObject& h) {
  return ModuleCoalgebra{h, h.carrier(), h.delta(), h.eps(), h.m()};
}

LinearMap diagonal_action(const ModuleCoalgebra& c, unsigned n) {
  require_passed(check_module_coalgebra(c), "module-coalgebra axioms");
  const HopfObject& h = c.H;
  const std::size_t nh = nf(h.H()), nc = nf(c.C.space);
  const LinearMap psiHC = h.cat().braiding(h.carrier(), c.C);
  LinearMap g = tensor(h.delta_power(n), LinearMap::identity(c.C.space.power(n + 1)));
  for (unsigned i = n; i >= 1; --i)
    for (unsigned k = 0; k <= n - i; ++k) g = apply_at(psiHC, i * nh + k * (nh + nc), g);
  for (unsigned j = 0; j <= n; ++j) g = apply_at(c.phiC, j * nc, g);
  return g;
}

LinearMap balancing_map(const RightModule& m, const CatObject& X, const LinearMap& phiX) {
  require_shape(phiX, tensor(m.H.H(), X.space), X.space, "φ_X");
  return tensor(m.phi, LinearMap::identity(X.space)) - tensor(LinearMap::identity(m.M.space), phiX);
}

Subquotient balanced_tensor(const RightModule& m, const CatObject& X, const LinearMap& phiX, const std::string& name) {
  require_passed(check_right_module(m), "module axioms");
  return cokernel(balancing_map(m, X, phiX), name);
}

LinearMap phi_map(const HopfObject& h) {
  const std::size_t nh = nf(h.H());
  LinearMap g = apply_at(h.delta(), 0, LinearMap::identity(h.H().power(2)));
  g = apply_at(h.S(), nh, g);
  return apply_at(h.m(), nh, g);
}

LinearMap phi_inverse_map(const HopfObject& h) {
  return apply_at(h.m(), nf(h.H()), apply_at(h.delta(), 0, LinearMap::identity(h.H().power(2))));
}

CheckReport check_phi_isomorphism(const HopfObject& h) {
  require_passed(verify_hopf(h), "Hopf axioms");
  CheckReport r("φ-isomorphism on H⊗H for " + h.name());
  const std::size_t nh = nf(h.H());
  const LinearMap phi = phi_map(h), phi_inv = phi_inverse_map(h);
  const LinearMap id2 = LinearMap::identity(h.H().power(2));
  r.expect_equal("φφ⁻¹ = id", compose(phi, phi_inv), id2);
  r.expect_equal("φ⁻¹φ = id", compose(phi_inv, phi), id2);
  LinearMap diag = apply_at(h.delta(), 0, LinearMap::identity(h.H().power(3)));
  diag = apply_at(h.psi(), nh, diag);
  diag = apply_at(h.m(), 0, diag);
  diag = apply_at(h.m(), nh, diag);
  const LinearMap other = tensor(h.m(), h.id());
  r.expect_equal("φφ_{H²} = φ′_{H²}(1⊗φ)", compose(phi, diag), compose(other, tensor(h.id(), phi)));
  return r;
}

}  // namespace bhc
