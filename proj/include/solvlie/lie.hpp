#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "solvlie/subspace.hpp"

namespace solvlie {

// One structure-constant entry: [b_i, b_j] = value, i < j.
struct ScEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  Vec value;
};

// Finite-dimensional Lie algebra given by structure constants on a fixed
// basis.  Antisymmetry is by construction (only i<j is supplied); the Jacobi
// identity is verified for every i<j<k at build time.
class LieAlgebra {
 public:
  LieAlgebra(FieldDescriptor field, std::size_t dim,
             std::vector<std::string> basis_names,
             const std::vector<ScEntry>& table);

  const FieldDescriptor& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  // [b_i, b_j] for any i, j (diagonal zero, j<i negated).
  const Vec& structure_constant(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& u, const Vec& v) const;

  // Matrix of the right-bracket action v ↦ [v, x]: column i holds [b_i, x].
  Matrix ad_matrix(const Vec& x) const;

  Subspace zero_space() const { return Subspace::zero(field_, dim_); }
  Subspace full_space() const { return Subspace::full(field_, dim_); }

  // The i<j entries with nonzero value, ascending — serialization order.
  std::vector<ScEntry> nonzero_entries() const;

 private:
  FieldDescriptor field_;
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<Vec> sc_;  // dense n×n of [b_i,b_j], negatives filled in
};

// span{[u_r, v_s]} over basis pairs of U and V (bilinearity makes that the
// span over all pairs).
Subspace product_space(const LieAlgebra& L, const Subspace& u,
                       const Subspace& v);

// L ⊇ L² ⊇ (L²)² ⊇ … until stable; solvable iff it bottoms out at 0.
std::vector<Subspace> derived_series(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);

// I¹ = I, Iᵏ⁺¹ = [Iᵏ, I] inside the ideal I; class = smallest c with
// I^{c+1} = 0, or nothing when the series stabilizes above 0.
std::vector<Subspace> lower_central_series(const LieAlgebra& L,
                                           const Subspace& ideal);
std::optional<std::size_t> nilpotency_class(const LieAlgebra& L,
                                            const Subspace& ideal);

// C_L(U) = {x : [x, u] = 0 for all u in U}.
Subspace centralizer(const LieAlgebra& L, const Subspace& u);

bool is_subalgebra(const LieAlgebra& L, const Subspace& u);
bool is_ideal(const LieAlgebra& L, const Subspace& u);

// Largest ideal of L inside the subalgebra U, by the descending fixpoint
// U ⊇ U_1 ⊇ U_2 ⊇ … with U_{i+1} = {u in U_i : [b_j, u] in U_i for all j}.
Subspace core(const LieAlgebra& L, const Subspace& u);

// Smallest ideal containing v; grows span(v) under [·, b_j] until stable.
Subspace ideal_closure(const LieAlgebra& L, const Vec& v);

// Smallest subalgebra containing U; grows under pairwise brackets.
Subspace subalgebra_closure(const LieAlgebra& L, const Subspace& u);

// The subalgebra M as an algebra in its own right, on M's canonical basis.
// to_sub/from_sub translate between parent and subalgebra coordinates.
struct SubalgebraView {
  LieAlgebra algebra;
  Subspace space;                      // in the parent
  Vec to_sub(const Vec& parent) const;  // parent vector (must lie in M)
  Vec from_sub(const Vec& sub) const;
  Subspace to_sub_space(const Subspace& parent) const;
  Subspace from_sub_space(const Subspace& sub) const;
};
SubalgebraView sub_algebra_on(const LieAlgebra& L, const Subspace& m);

// Quotient L/I on the complement coordinates of I's pivot columns.
// project ∘ section = id; pull(push(U)) = U + I.
class QuotientMap {
 public:
  QuotientMap(const LieAlgebra& L, Subspace ideal);

  const LieAlgebra& algebra() const { return *quotient_; }
  const Subspace& ideal() const { return ideal_; }

  Vec project(const Vec& v) const;
  Vec section(const Vec& q) const;
  Subspace push(const Subspace& u) const;
  Subspace pull(const Subspace& q) const;

 private:
  Subspace ideal_;
  std::size_t parent_dim_;
  std::vector<std::size_t> comp_cols_;  // non-pivot columns of the ideal
  std::optional<LieAlgebra> quotient_;
};

// All minimal ideals: the minimal elements of {ideal_closure(v) : v ≠ 0}
// (a minimal ideal is the closure of each of its nonzero vectors).
// Prime fields only.
std::vector<Subspace> minimal_ideals(const LieAlgebra& L);

struct ChiefSeries {
  std::vector<Subspace> terms;  // 0 = terms[0] < … < terms.back() = L
};

// Built by repeatedly lifting the lex-smallest minimal ideal of the
// successive quotients.  Prime fields, solvable algebras only.
ChiefSeries chief_series(const LieAlgebra& L);

// All proper subalgebras maximal under inclusion (full subspace enumeration;
// prime fields only, cap applies).
std::vector<Subspace> maximal_subalgebras(const LieAlgebra& L,
                                          std::size_t cap = 0);

enum class Maximality { maximal, not_maximal, unverified };

// Exact over prime fields (one-vector extension test) and for codimension-1
// subalgebras over any field; codim ≥ 2 over ℚ is reported unverified.
Maximality maximality_check(const LieAlgebra& L, const Subspace& m,
                            std::size_t cap = 0);
bool is_maximal(const LieAlgebra& L, const Subspace& m, std::size_t cap = 0);

// For maximal M: the unique k with L_k ⊆ M, L_{k+1} ⊄ M; verifies the
// complement equations L = M + L_{k+1} and M ∩ L_{k+1} = L_k.
std::size_t complemented_chief_factor(const LieAlgebra& L, const Subspace& m,
                                      const ChiefSeries& series);

}  // namespace solvlie
