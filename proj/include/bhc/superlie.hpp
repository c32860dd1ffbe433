#pragma once

// Super Lie algebras, the super Chevalley-Eilenberg complex, enveloping-algebra
// models and the antisymmetrization map.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bhc/cocyclic.hpp"
#include "bhc/homology.hpp"

namespace bhc {

// Basis: even generators 0..even-1 followed by odd generators. Rational scalars only.
class SuperLieAlgebra {
 public:
  using Bracket = std::tuple<Index, Index, SparseVec>;  // [e_i, e_j] = value

  // Unlisted brackets are zero; (j,i) is filled in by super antisymmetry, and
  // listing both must agree. δ is set to zero on odd generators.
  static SuperLieAlgebra make(std::string name, unsigned even, unsigned odd, std::vector<Bracket> brackets,
                              std::vector<std::pair<Index, Scalar>> delta = {}, std::vector<std::string> names = {});

  const std::string& name() const noexcept { return name_; }
  unsigned even_dim() const noexcept { return even_; }
  unsigned odd_dim() const noexcept { return odd_; }
  Index dim() const noexcept { return even_ + odd_; }
  int parity(Index i) const noexcept { return i >= even_ ? 1 : 0; }
  const std::string& generator(Index i) const { return names_.at(i); }
  const std::vector<std::string>& generators() const noexcept { return names_; }
  const SparseVec& bracket(Index i, Index j) const { return table_.at(i * dim() + j); }
  const Scalar& delta(Index i) const { return delta_.at(i); }
  const std::vector<Scalar>& delta() const noexcept { return delta_; }
  bool is_abelian() const;
  // The listed brackets with i ≤ j, as used by the interchange format.
  std::vector<Bracket> bracket_list() const;

  // Degree additivity, antisymmetry, Jacobi on all basis triples, δ a character.
  CheckReport check() const;

 private:
  std::string name_;
  unsigned even_ = 0, odd_ = 0;
  std::vector<std::string> names_;
  std::vector<SparseVec> table_;
  std::vector<Scalar> delta_;
};

// Monomials x_{i_1}∧...∧x_{i_n} with i_1 ≤ ... ≤ i_n, strict on even indices.
std::vector<std::vector<Index>> exterior_basis(const SuperLieAlgebra& g, unsigned n);
Space exterior_power(const SuperLieAlgebra& g, unsigned n);

// Spaces Λ^0..Λ^{n_max}, d[n]: Λ^n → Λ^{n-1} (d[0] lands in the zero space).
// VerificationFailed with a witness if d∘d ≠ 0.
ChainComplex ce_differential(const SuperLieAlgebra& g, unsigned n_max);
std::vector<Index> lie_homology(const SuperLieAlgebra& g, unsigned n_max);

enum class EnvelopingMode { finite_nilpotent, truncated };

// PBW model of U(g): ordered monomials (odd exponents ≤ 1) of length ≤ N.
// Products that would leave the retained range raise TruncationOverflow.
class EnvelopingModel final : public SuperHopfBasis {
 public:
  // finite_nilpotent needs a purely odd abelian g (UnsupportedMode otherwise); N is then ignored.
  static EnvelopingModel make(const SuperLieAlgebra& g, EnvelopingMode mode, unsigned N = 0);

  EnvelopingMode mode() const noexcept { return mode_; }
  unsigned truncation() const noexcept { return N_; }
  const SuperLieAlgebra& lie() const noexcept { return g_; }
  Index generator_index(Index i) const { return gen_.at(i); }
  const std::vector<Index>& word(Index a) const { return words_.at(a); }
  // Product of arbitrary basis words, reduced to PBW form (no range check).
  std::map<std::vector<Index>, Scalar> reduce(const std::vector<Index>& word) const;
  // finite_nilpotent only: the Hopf object in the Koszul category.
  HopfObject hopf() const;

  Field field() const override { return Field::rational(); }
  Index size() const override { return words_.size(); }
  std::string label(Index a) const override;
  int parity(Index a) const override;
  unsigned filtration(Index a) const override { return static_cast<unsigned>(words_.at(a).size()); }
  SparseVec unit() const override;
  SparseVec product(Index a, Index b) const override;
  std::vector<std::tuple<Index, Index, Scalar>> coproduct(Index a) const override;
  SparseVec antipode(Index a) const override;
  Scalar counit(Index a) const override;

 private:
  SparseVec to_vector(const std::map<std::vector<Index>, Scalar>& x, const char* what) const;

  SuperLieAlgebra g_;
  EnvelopingMode mode_ = EnvelopingMode::truncated;
  unsigned N_ = 0;
  std::vector<std::vector<Index>> words_;
  std::map<std::vector<Index>, Index> index_;
  std::vector<Index> gen_;
  mutable std::map<std::vector<Index>, std::map<std::vector<Index>, Scalar>> memo_;
};

EnvelopingModel enveloping_model(const SuperLieAlgebra& g, EnvelopingMode mode, unsigned N = 0);

// CM cochains of the model with pair (δ, 1), filtered by total length ≤ N.
ParaCocyclicModule enveloping_cocyclic(const EnvelopingModel& U, unsigned n_max);

// Λ^n → C^n of enveloping_cocyclic(U, ·). crossing_signs = false drops (-1)^{α_σ}.
// TruncationTooSmall if n exceeds the model's truncation.
LinearMap antisymmetrize(const EnvelopingModel& U, unsigned n, bool crossing_signs = true);

// B∘A(n) = A(n-1)∘d(n) for 1 ≤ n ≤ n_max in a truncated model of length N (0 means max(2, n_max)).
CheckReport check_BA_equals_Ad(const SuperLieAlgebra& g, unsigned n_max, unsigned N = 0, bool crossing_signs = true);

struct LieComparison {
  std::vector<Index> hc;            // dim HC^n(U(g), (δ,1))
  std::vector<Index> lie;           // dim H_i(g; C_δ)
  std::vector<Index> partial_sums;  // Σ_{i ≤ n, i ≡ n} dim H_i
  bool agree = false;
};
// Only for a finite enveloping algebra; UnsupportedMode otherwise.
LieComparison compare_cyclic_with_lie(const SuperLieAlgebra& g, unsigned n_max);

}  // namespace bhc
