#pragma once

// Modules, comodules, SAYD conditions, module coalgebras and balanced tensor products.

#include <string>

#include "bhc/hopf.hpp"

namespace bhc {

struct RightModule {
  HopfObject H;
  CatObject M;
  LinearMap phi;  // M⊗H → M
};

struct LeftComodule {
  HopfObject H;
  CatObject M;
  LinearMap rho;  // M → H⊗M
};

struct SaydModule {
  RightModule module;
  LeftComodule comodule;
  std::string name;
  const HopfObject& H() const noexcept { return module.H; }
  const CatObject& M() const noexcept { return module.M; }
  const LinearMap& phi() const noexcept { return module.phi; }
  const LinearMap& rho() const noexcept { return comodule.rho; }
};

struct ModuleCoalgebra {
  HopfObject H;
  CatObject C;
  LinearMap deltaC;  // C → C⊗C
  LinearMap epsC;    // C → I
  LinearMap phiC;    // H⊗C → C
};

CheckReport check_right_module(const RightModule& m);
CheckReport check_left_comodule(const LeftComodule& c);
CheckReport check_module_coalgebra(const ModuleCoalgebra& c);

// Throws SpaceMismatch on shape errors; the SAYD conditions themselves are not checked.
SaydModule make_sayd(RightModule module, LeftComodule comodule, std::string name = "M");
// The one-dimensional module with action δ and coaction σ. PreconditionFailed
// unless (δ, σ) satisfies the modular-pair axioms.
SaydModule sigma_I_delta(const HopfObject& h, const ModularPair& pair);

// The AYD composite [(m)(S⊗m)⊗φ][(ψ_{H²,H},1,1)(1,1,ψ_{M,H},1)(1,1,1,ψ_{H,H})(1,ψ_{M,H},1,1)][ρ⊗Δ²].
LinearMap ayd_rhs(const SaydModule& s);
// PreconditionFailed unless the module and comodule axioms hold.
CheckReport check_aYD(const SaydModule& s);
CheckReport check_stability(const SaydModule& s);

// C = H with Δ, ε and left multiplication.
ModuleCoalgebra regular_module_coalgebra(const HopfObject& h);
// H⊗C^{⊗(n+1)} → C^{⊗(n+1)}.
LinearMap diagonal_action(const ModuleCoalgebra& c, unsigned n);
// Cokernel of φ_M⊗1 − 1⊗φ_X: M⊗H⊗X → M⊗X.
Subquotient balanced_tensor(const RightModule& m, const CatObject& X, const LinearMap& phiX, const std::string& name = "M⊗_H X");
LinearMap balancing_map(const RightModule& m, const CatObject& X, const LinearMap& phiX);

// φ = (1,m)(1,S,1)(Δ,1) and φ⁻¹ = (1,m)(Δ,1) on H⊗H.
LinearMap phi_map(const HopfObject& h);
LinearMap phi_inverse_map(const HopfObject& h);
CheckReport check_phi_isomorphism(const HopfObject& h);

}  // namespace bhc
