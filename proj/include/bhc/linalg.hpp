#pragma once

// Based spaces and exact sparse linear maps.
//
// A Space is a list of atomic based spaces; tensor products concatenate the
// lists, so (A ⊗ B) ⊗ C and A ⊗ (B ⊗ C) are literally the same space and the
// unit object is the empty list. Basis vectors of a product are ordered
// left-major: index = ((i_1 * d_2) + i_2) * d_3 + ...

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bhc/exactnum.hpp"

namespace bhc {

using Index = std::size_t;

struct Atom {
  std::string name;
  std::vector<std::string> labels;
  std::vector<int> grades;  // empty when ungraded; otherwise one code per basis vector
};
using AtomPtr = std::shared_ptr<const Atom>;

bool same_atom(const Atom& a, const Atom& b) noexcept;

class Space {
 public:
  Space() = default;  // the unit object over Q
  static Space unit(Field f);
  static Space atom(Field f, std::string name, std::vector<std::string> labels, std::vector<int> grades = {});
  // An ungraded atom with labels name0, name1, ...
  static Space plain(Field f, std::string name, Index dim);

  Field field() const noexcept { return field_; }
  Index dim() const noexcept { return dim_; }
  const std::vector<AtomPtr>& factors() const noexcept { return factors_; }
  std::size_t num_factors() const noexcept { return factors_.size(); }
  bool is_unit() const noexcept { return factors_.empty(); }

  // Factors [first, first + count) as a space of its own.
  Space slice(std::size_t first, std::size_t count) const;
  Space power(unsigned n) const;

  std::string label(Index i) const;
  std::vector<Index> split(Index i) const;  // per-factor indices
  std::string describe() const;             // e.g. "H⊗H", or "I"

  friend Space tensor(const Space& a, const Space& b);
  friend bool operator==(const Space& a, const Space& b) noexcept;
  friend bool operator!=(const Space& a, const Space& b) noexcept { return !(a == b); }

 private:
  Field field_;
  std::vector<AtomPtr> factors_;
  Index dim_ = 1;
};

Space tensor(const Space& a, const Space& b);
Space tensor(const std::vector<Space>& spaces, Field f);

// Sorted by index, no explicit zeros.
using SparseVec = std::vector<std::pair<Index, Scalar>>;

// Sorts, merges repeated indices and drops zeros.
SparseVec make_sparse(std::vector<std::pair<Index, Scalar>> entries);
// v += a * w
void axpy(SparseVec& v, const Scalar& a, const SparseVec& w);
SparseVec scaled(const SparseVec& v, const Scalar& a);

class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(Space domain, Space codomain);  // zero map

  static LinearMap identity(const Space& s);
  static LinearMap from_columns(Space domain, Space codomain, std::vector<SparseVec> columns);
  static LinearMap from_dense(Space domain, Space codomain, const std::vector<std::vector<Scalar>>& rows);
  // (row, col, value) triples; repeated positions are summed.
  static LinearMap from_triples(Space domain, Space codomain, const std::vector<std::tuple<Index, Index, Scalar>>& triples);

  const Space& domain() const noexcept { return domain_; }
  const Space& codomain() const noexcept { return codomain_; }
  Field field() const noexcept { return domain_.field(); }
  Index rows() const noexcept { return codomain_.dim(); }
  Index cols() const noexcept { return domain_.dim(); }

  const SparseVec& column(Index j) const { return cols_.at(j); }
  Scalar entry(Index row, Index col) const;
  std::size_t nnz() const noexcept;
  bool is_zero() const noexcept;
  bool is_identity() const;

  SparseVec apply(const SparseVec& v) const;
  // Same matrix, relabelled spaces of equal dimension.
  LinearMap retyped(Space domain, Space codomain) const;
  std::vector<std::tuple<Index, Index, Scalar>> triples() const;
  std::vector<std::vector<Scalar>> dense() const;

  LinearMap& operator+=(const LinearMap& other);
  LinearMap& operator-=(const LinearMap& other);
  LinearMap operator-() const;
  friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
  friend LinearMap operator-(LinearMap a, const LinearMap& b) { return a -= b; }
  friend LinearMap operator*(const Scalar& s, const LinearMap& f);
  friend bool operator==(const LinearMap& a, const LinearMap& b);
  friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

 private:
  Space domain_, codomain_;
  std::vector<SparseVec> cols_;
};

// f ∘ g
LinearMap compose(const LinearMap& f, const LinearMap& g);
// f_1 ∘ f_2 ∘ ... ∘ f_k (rightmost applied first)
LinearMap compose(const std::vector<LinearMap>& maps);
LinearMap tensor(const LinearMap& f, const LinearMap& g);
LinearMap tensor(const std::vector<LinearMap>& maps);
// (1 ⊗ f ⊗ 1) ∘ g where f acts on the codomain factors of g starting at `offset`.
LinearMap apply_at(const LinearMap& f, std::size_t offset, const LinearMap& g);
LinearMap power(const LinearMap& f, unsigned k);
// Plain reordering of tensor factors: factor k of the result is factor order[k] of s.
LinearMap permutation(const Space& s, const std::vector<std::size_t>& order);

// Either a subspace (embed = inclusion, project = a left inverse) or a quotient
// (project = the canonical projection, embed = a section). project ∘ embed = id.
struct Subquotient {
  enum class Kind { sub, quotient };
  Kind kind = Kind::sub;
  LinearMap embed;
  LinearMap project;
  const Space& space() const { return kind == Kind::sub ? embed.domain() : project.codomain(); }
  Index dim() const { return space().dim(); }
};

Index rank(const LinearMap& f);
Subquotient kernel(const LinearMap& f, const std::string& name = "ker");
Subquotient cokernel(const LinearMap& f, const std::string& name = "coker");

// The map h with s.project' ∘ op ∘ s.embed, checked for well-definedness:
// for subspaces op ∘ embed = embed' ∘ h, for quotients project' ∘ op = h ∘ project.
// Returns nullopt when op does not restrict/descend.
std::optional<LinearMap> induced(const Subquotient& source, const Subquotient& target, const LinearMap& op);

// Solve inclusion ∘ h = g for h, if possible (inclusion must be injective).
std::optional<LinearMap> factor_through(const LinearMap& inclusion, const LinearMap& g);

// Two-sided inverse of a bijective map, or nullopt.
std::optional<LinearMap> inverse(const LinearMap& f);

// First column where a and b differ, if any.
std::optional<Index> first_difference(const LinearMap& a, const LinearMap& b);
std::string format_vector(const Space& s, const SparseVec& v);

}  // namespace bhc
