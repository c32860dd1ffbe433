#pragma once

// Hochschild b, Connes' B, cyclic cohomology via the (b,B) staircase, Cotor.

#include <vector>

#include "bhc/cocyclic.hpp"

namespace bhc {

struct ChainComplex {
  std::vector<Space> spaces;
  // cohomological: d[n]: C^n → C^{n+1}; homological: d[n]: C^n → C^{n-1} (d[0] is the zero map to 0)
  std::vector<LinearMap> d;
  bool cohomological = true;

  // dim H^n / H_n for every degree whose outgoing and incoming maps are known
  std::vector<Index> homology_dims() const;
};

// Throws VerificationFailed with a witness if d∘d ≠ 0.
void require_d_squared_zero(const ChainComplex& c, const std::string& what);

// b_n = Σ_{i=0}^{n} (-1)^i δ_i: C^{n-1} → C^n, stored as d[n-1]. PreconditionFailed
// if the cosimplicial identities fail.
ChainComplex hochschild_b(const ParaCocyclicModule& P);

// B_n = N s (1 - λ): C^{n+1} → C^n with λ = (-1)^n τ_n, s = σ_n τ_{n+1}; entry n of the result.
// PreconditionFailed without τ^{n+1} = id; CalibrationFailed if B² = 0 or bB + Bb = 0 fails.
std::vector<LinearMap> connes_B(const ParaCocyclicModule& P);

enum class StaircaseOrder { column_first, row_first };
// dim HC^0 .. HC^{n_max}; P must reach degree n_max + 1.
std::vector<Index> cyclic_cohomology(const ParaCocyclicModule& P, unsigned n_max,
                                     StaircaseOrder order = StaircaseOrder::column_first);
// Same, from a Hopf object and pair (builds the complex to n_max + 1 internally).
std::vector<Index> cyclic_cohomology(const HopfObject& h, const ModularPair& pair, unsigned n_max);

// Dims of H^*(C̄^{⊗•}, Σ(-1)^i Δ̄_i) with C̄ = ker ε and Δ̄c = Δc - 1⊗c - c⊗σ.
std::vector<Index> cotor(const HopfObject& h, const Cocharacter& sigma, unsigned n_max);
// Dims of ker b / im b on the raw cochains.
std::vector<Index> hochschild_dims(const HopfObject& h, const ModularPair& pair, unsigned n_max);

struct Decomposition {
  std::vector<Index> hc;
  std::vector<Index> hh;
  std::vector<Index> partial_sums;  // Σ_{i ≤ n, i ≡ n} HH^i
  CheckReport report;
};
// PreconditionFailed unless mψ = m.
Decomposition decomposition_check(const HopfObject& h, unsigned n_max);

// Σ_{i ≤ n, i ≡ n (2)} v_i
std::vector<Index> parity_partial_sums(const std::vector<Index>& v);

}  // namespace bhc
