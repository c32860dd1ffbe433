#pragma once

// Braidings of strict braided monoidal categories realized on based spaces.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bhc/linalg.hpp"
#include "bhc/report.hpp"

namespace bhc {

enum class CategoryKind { trivial, koszul, bicharacter, r_matrix, yetter_drinfeld };
const char* kind_name(CategoryKind k) noexcept;

// Structure tensors of a Hopf algebra, without reference to any category.
struct HopfData {
  Space H;
  LinearMap m;      // H⊗H → H
  LinearMap eta;    // I → H
  LinearMap delta;  // H → H⊗H
  LinearMap eps;    // H → I
  LinearMap S;      // H → H
};

// An object of a category: a based space plus, for the module-category kinds,
// an action H_bg⊗V → V and (Yetter-Drinfeld only) a coaction V → H_bg⊗V.
struct CatObject {
  Space space;
  std::optional<LinearMap> action;
  std::optional<LinearMap> coaction;
};

struct Morphism {
  LinearMap map;
  std::size_t source = 0;  // indices into the object list handed to check_category
  std::size_t target = 0;
};

class BraidedCategory;
using CategoryPtr = std::shared_ptr<const BraidedCategory>;

class BraidedCategory {
 public:
  static CategoryPtr trivial(Field f);
  static CategoryPtr koszul(Field f);
  // G = Z_{n_1} × ... × Z_{n_r}; χ(a, b) = ζ_N^{aᵀ E b} with N = root_order
  // (0 means lcm of the n_i). Grade codes are mixed radix, first factor fastest.
  static CategoryPtr bicharacter(Field f, std::vector<unsigned> factors, std::vector<std::vector<long>> exponents,
                                 unsigned root_order = 0);
  // R is a vector of H_bg⊗H_bg; ψ(v⊗w) = R_2▷w ⊗ R_1▷v.
  static CategoryPtr r_matrix(HopfData background, SparseVec R);
  static CategoryPtr yetter_drinfeld(HopfData background, LinearMap S_inverse);

  CategoryKind kind() const noexcept { return kind_; }
  Field field() const noexcept { return field_; }
  std::string name() const;
  bool graded() const noexcept;
  bool module_kind() const noexcept;

  // grading data (koszul and bicharacter)
  const std::vector<unsigned>& group_factors() const noexcept { return factors_; }
  const std::vector<std::vector<long>>& exponents() const noexcept { return exponents_; }
  unsigned root_order() const noexcept { return root_order_; }
  unsigned group_order() const noexcept;
  int grade_add(int a, int b) const;
  int grade_of(const Space& s, Index i) const;
  Scalar chi(int a, int b) const;

  // background Hopf algebra (module kinds)
  const HopfData& background() const;
  const SparseVec& r_element() const noexcept { return R_; }
  const SparseVec& r_inverse() const noexcept { return R_inv_; }
  const LinearMap& s_inverse() const;

  // Objects. For module kinds `object` attaches the trivial structure (ε, η).
  CatObject object(Space s) const;
  CatObject module_object(Space s, LinearMap action, std::optional<LinearMap> coaction = std::nullopt) const;
  CatObject unit_object() const;
  CatObject tensor_object(const CatObject& a, const CatObject& b) const;
  CatObject tensor_objects(const std::vector<CatObject>& objs) const;
  // Module/comodule axioms and Yetter-Drinfeld compatibility.
  CheckReport check_object(const CatObject& v) const;
  // Throws ObjectNotInCategory when check_object fails.
  void require_object(const CatObject& v) const;
  // Degree-0 (graded kinds), H_bg-linear and colinear (module kinds).
  bool is_morphism(const LinearMap& f, const CatObject& src, const CatObject& dst) const;
  // Degree-0 check when only spaces are known (graded kinds); true otherwise.
  bool is_homogeneous(const LinearMap& f) const;

  LinearMap braiding(const CatObject& v, const CatObject& w) const;
  LinearMap braiding_inverse(const CatObject& v, const CatObject& w) const;

  enum class Route { direct, left_first, right_first };
  // ψ_{L_1⊗...⊗L_p, R_1⊗...⊗R_q}. `direct` uses the grading formula when
  // available and falls back to left_first otherwise.
  LinearMap block_braiding(const std::vector<CatObject>& left, const std::vector<CatObject>& right,
                           Route route = Route::direct) const;
  // Same as block_braiding(left, right) for objects built by object(), i.e.
  // the braiding of adjacent blocks of H-factors.
  LinearMap block_braiding(const CatObject& x, unsigned p, const CatObject& y, unsigned q) const;

  std::vector<std::string> notes() const;

 private:
  BraidedCategory() = default;
  void check_module_object(const CatObject& v, CheckReport& r) const;

  CategoryKind kind_ = CategoryKind::trivial;
  Field field_;
  std::vector<unsigned> factors_;
  std::vector<std::vector<long>> exponents_;
  unsigned root_order_ = 1;
  std::vector<Scalar> chi_table_;
  std::shared_ptr<const HopfData> bg_;
  SparseVec R_, R_inv_;
  std::optional<LinearMap> S_inv_;
};

// Both hexagons on all object triples, naturality for every pair of supplied
// morphisms, inverse laws, unit laws, and symmetry (informational).
CheckReport check_category(const BraidedCategory& cat, const std::vector<CatObject>& objects,
                           const std::vector<Morphism>& maps);

}  // namespace bhc
