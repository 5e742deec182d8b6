#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "solvlie/lie.hpp"

namespace solvlie {

// Automorphism of L realized as an invertible coordinate matrix together
// with the generator word that produced it (exp(ad x) factors, applied
// first-to-last).
struct InnerAutomorphism {
  Matrix matrix;
  std::vector<Vec> word;

  Vec apply(const Vec& v) const { return matrix.apply(v); }
};

struct Eligibility {
  bool eligible = false;
  // char p witness: the smallest ideal containing x, and its class
  std::optional<Subspace> closure;
  std::optional<std::size_t> closure_class;
  std::string reason;
};

// Matrix of b ↦ [b, x] (right-bracket convention throughout).
Matrix ad_matrix(const LieAlgebra& L, const Vec& x);

// char 0: ad x nilpotent.  char p: ideal_closure(x) nilpotent of class < p
// (any qualifying ideal contains the closure, so the closure decides).
Eligibility exp_eligible(const LieAlgebra& L, const Vec& x);

// exp(ad x) = Σ_r (ad x)^r / r!, truncated at the nilpotency index.  The
// eligibility bound keeps every divisor r! invertible in char p.  The result
// is validated: bracket-preserving on all basis pairs and invertible.
InnerAutomorphism exp_ad(const LieAlgebra& L, const Vec& x);

InnerAutomorphism identity_automorphism(const LieAlgebra& L);

// a ∘ b (apply b first, then a); words concatenate accordingly.
InnerAutomorphism compose(const InnerAutomorphism& a,
                          const InnerAutomorphism& b);

// Canonical image subspace span{φ(m_i)}.
Subspace conjugate_subalgebra(const InnerAutomorphism& phi, const Subspace& m);

// The deduplicated exp(ad x) for eligible x ∈ B (identity always included).
std::vector<InnerAutomorphism> eligible_generators(const LieAlgebra& L,
                                                   const Subspace& b);

struct InnerGroup {
  std::vector<InnerAutomorphism> generators;
  std::vector<InnerAutomorphism> elements;
  std::size_t cap = 0;
  bool complete = false;  // closure reached a fixed point under the cap
};

std::size_t default_group_cap();  // 10^6

// I(L:B): BFS closure under composition of the eligible generators.
// Prime fields only (element enumeration of B).
InnerGroup inner_group(const LieAlgebra& L, const Subspace& b,
                       std::size_t cap = 0);

struct ConjugacyResult {
  bool conjugate = false;
  std::optional<InnerAutomorphism> witness;  // maps M onto K when conjugate
  std::size_t orbit_size = 0;  // full orbit size when not conjugate
};

// Orbit BFS of M under the eligible generators from B.  A negative answer
// certifies the whole orbit was enumerated; overflowing the cap is an error,
// never a silent "false".
ConjugacyResult are_conjugate_bruteforce(const LieAlgebra& L,
                                         const Subspace& m, const Subspace& k,
                                         const Subspace& b,
                                         std::size_t cap = 0);

// Partition the given subspaces into I(L:B)-orbits; returns one index list
// per class, in first-seen order.
std::vector<std::vector<std::size_t>> orbit_partition(
    const LieAlgebra& L, const std::vector<Subspace>& spaces,
    const Subspace& b, std::size_t cap = 0);

}  // namespace solvlie
