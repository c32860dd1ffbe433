#pragma once

// Para-cocyclic objects: builders, identity verification, τ-powers, restriction.

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bhc/hopf.hpp"
#include "bhc/sayd.hpp"

namespace bhc {

constexpr unsigned kDefaultDegreeCap = 4;

struct ParaCocyclicModule {
  std::string name;
  unsigned max_degree = 0;
  std::vector<Space> spaces;                         // C^0 .. C^max
  std::vector<std::vector<LinearMap>> faces;         // faces[n][i]: C^{n-1} → C^n, 1 ≤ n ≤ max, 0 ≤ i ≤ n
  std::vector<std::vector<LinearMap>> degeneracies;  // degeneracies[n][i]: C^{n+1} → C^n, n < max, 0 ≤ i ≤ n
  std::vector<LinearMap> tau;                        // tau[n]: C^n → C^n
  std::optional<HopfObject> host;                    // set by build_cm
  std::vector<Subquotient> pieces;                   // balanced triples: C^n as a quotient
  std::vector<std::string> notes;

  const LinearMap& face(unsigned n, unsigned i) const { return faces.at(n).at(i); }
  const LinearMap& degeneracy(unsigned n, unsigned i) const { return degeneracies.at(n).at(i); }
};

// Right-nested Δ^{n-1}S̃ paired with interleaved multiplication m_n = (m,...,m)ℱ_n(ψ).
LinearMap cm_multiplication(const HopfObject& h, unsigned n);
// m_n ∘ g, without building m_n on H^{2n}
LinearMap cm_multiplication(const HopfObject& h, unsigned n, LinearMap g);
ParaCocyclicModule build_cm(const HopfObject& h, const ModularPair& pair, unsigned n_max, unsigned cap = kDefaultDegreeCap);
// Same operators without the modular-pair precondition, for feeding broken pairs to the verifier.
ParaCocyclicModule build_cm_unchecked(const HopfObject& h, const ModularPair& pair, unsigned n_max,
                                      unsigned cap = kDefaultDegreeCap);

// C^n = M⊗C^{n+1}; balanced: M⊗_H C^{n+1} with induced operators.
ParaCocyclicModule build_triple(const ModuleCoalgebra& C, const SaydModule& M, unsigned n_max, bool balanced,
                                unsigned cap = kDefaultDegreeCap);
// The identification H^n → I⊗_H H^{n+1}, h ↦ [1⊗1⊗h], for the balanced triple (H, H, I).
LinearMap balanced_identification(const ParaCocyclicModule& balanced, const HopfObject& h, unsigned n);

// A super Hopf algebra given elementwise on a homogeneous basis (possibly a
// filtered truncation of an infinite-dimensional one).
class SuperHopfBasis {
 public:
  virtual ~SuperHopfBasis() = default;
  virtual Field field() const = 0;
  virtual Index size() const = 0;
  virtual std::string label(Index a) const = 0;
  virtual int parity(Index a) const = 0;
  virtual unsigned filtration(Index) const { return 0; }
  virtual SparseVec unit() const = 0;
  virtual SparseVec product(Index a, Index b) const = 0;
  virtual std::vector<std::tuple<Index, Index, Scalar>> coproduct(Index a) const = 0;
  virtual SparseVec antipode(Index a) const = 0;
  virtual Scalar counit(Index a) const = 0;
};

// Sign-formula route for super Hopf algebras: τ_n(h_1..h_n) = αβ(S(h_1^{(n)})h_2, ..., S̃(h_1^{(1)})σ).
// With filtration_cap set, C^n is the span of basis tensors of total filtration ≤ cap.
ParaCocyclicModule build_cm_super(const SuperHopfBasis& H, const std::vector<Scalar>& delta, const SparseVec& sigma,
                                  unsigned n_max, std::optional<unsigned> filtration_cap = std::nullopt,
                                  const std::string& name = "H");
// Basis tensors of C^n in the order used by build_cm_super (lexicographic, filtered).
std::vector<std::vector<Index>> basis_tuples(const SuperHopfBasis& H, unsigned n, std::optional<unsigned> filtration_cap);
// The space build_cm_super uses for C^n when no Hopf carrier is given.
Space cochain_space(const SuperHopfBasis& H, unsigned n, std::optional<unsigned> filtration_cap, const std::string& name);
// Same route for a Hopf object in the Koszul category; spaces coincide with build_cm's.
ParaCocyclicModule build_cm_super(const HopfObject& h, const ModularPair& pair, unsigned n_max,
                                  unsigned cap = kDefaultDegreeCap);

CheckReport verify_identities(const ParaCocyclicModule& P);

struct TauPower {
  LinearMap tau_power;  // τ_n^{n+1}
  LinearMap psi_power;  // (ψ_{H^{n-1},H})^n
  bool equal = false;
};
// DegreeOutOfRange unless 1 ≤ n ≤ max_degree; PreconditionFailed without a host.
TauPower tau_power(const ParaCocyclicModule& P, unsigned n);

struct CocyclicModule {
  ParaCocyclicModule restricted;
  std::vector<Subquotient> pieces;  // ker(1 − τ_n^{n+1}) ⊂ C^n
};
// RestrictionUndefined if an operator does not preserve the kernels.
CocyclicModule restrict_to_cyclic(const ParaCocyclicModule& P);

}  // namespace bhc
