#pragma once

#include <string>

#include "bhc/moncat.hpp"
#include "bhc/report.hpp"

namespace bhc {

class HopfObject {
 public:
  HopfObject() = default;
  // Checks shapes and that the five maps are morphisms of the category, but
  // not the Hopf axioms (so broken presentations can be built and verified).
  static HopfObject make(CategoryPtr cat, CatObject carrier, HopfData maps, std::string name = "H");

  const std::string& name() const noexcept { return name_; }
  const BraidedCategory& cat() const noexcept { return *cat_; }
  const CategoryPtr& category() const noexcept { return cat_; }
  const CatObject& carrier() const noexcept { return carrier_; }
  const Space& H() const noexcept { return carrier_.space; }
  Field field() const noexcept { return carrier_.space.field(); }
  Space I() const { return Space::unit(field()); }
  const HopfData& data() const noexcept { return maps_; }
  const LinearMap& m() const noexcept { return maps_.m; }
  const LinearMap& eta() const noexcept { return maps_.eta; }
  const LinearMap& delta() const noexcept { return maps_.delta; }
  const LinearMap& eps() const noexcept { return maps_.eps; }
  const LinearMap& S() const noexcept { return maps_.S; }
  const LinearMap& psi() const noexcept { return psi_; }  // ψ_{H,H}
  const LinearMap& psi_inverse() const noexcept { return psi_inv_; }
  LinearMap id() const { return LinearMap::identity(H()); }

  // ψ_{H^p, H^q}
  LinearMap block_psi(unsigned p, unsigned q) const;
  // Δ^k: H → H^{k+1}, Δ^0 = id, Δ^k = (1_{H^{k-1}} ⊗ Δ)Δ^{k-1}
  LinearMap delta_power(unsigned k) const;
  // m^{(k)}: H^k → H, iterated product from the left; m^{(0)} = η
  LinearMap product(unsigned k) const;

 private:
  std::string name_;
  CategoryPtr cat_;
  CatObject carrier_;
  HopfData maps_;
  LinearMap psi_, psi_inv_;
};

// Algebra map δ: H → I. `make` validates, direct aggregate construction does not.
struct Character {
  LinearMap map;
  static Character make(const HopfObject& h, LinearMap map);
};

// Coalgebra map σ: I → H.
struct Cocharacter {
  LinearMap map;
  static Cocharacter make(const HopfObject& h, LinearMap map);
};

struct ModularPair {
  Character delta;
  Cocharacter sigma;
  std::string name;  // e.g. "(ε,1)"
  static ModularPair make(const HopfObject& h, Character d, Cocharacter s, std::string name = {});
};

Character counit_character(const HopfObject& h);
Cocharacter unit_cocharacter(const HopfObject& h);
ModularPair trivial_pair(const HopfObject& h);

// Nine entries: associativity, unit, coassociativity, counit, braided
// compatibility, Δη = η⊗η, εm = ε⊗ε, εη = id_I, antipode.
CheckReport verify_hopf(const HopfObject& h);
CheckReport derived_identities(const HopfObject& h);
// (δ⊗S)Δ
LinearMap twisted_antipode(const HopfObject& h, const Character& delta);
CheckReport check_twisted_antipode(const HopfObject& h, const Character& delta, const Cocharacter* sigma = nullptr);
CheckReport check_modular_pair(const HopfObject& h, const Character& delta, const Cocharacter& sigma);
// m((m⊗1)(Sσ ⊗ S̃² ⊗ σ)) = id_H
CheckReport check_bmpi(const HopfObject& h, const ModularPair& pair);
LinearMap bmpi_composite(const HopfObject& h, const ModularPair& pair);
// (mψ = m) ∨ (Δ = ψΔ) ⟹ S² = id
CheckReport check_s_squared(const HopfObject& h);

bool is_braided_commutative(const HopfObject& h);
bool is_braided_cocommutative(const HopfObject& h);

}  // namespace bhc
