#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "solvlie/inner.hpp"

namespace solvlie {

// The characteristic-sensitive hypothesis gate: solvable, and in char p the
// derived algebra L² must be nilpotent of class < p.
struct HypothesisReport {
  bool solvable = false;
  std::optional<int64_t> char_p;                 // empty in char 0
  std::optional<std::size_t> class_of_derived;   // empty = not nilpotent
  bool hypothesis_met = false;
};

HypothesisReport hypothesis_report(const LieAlgebra& L);

enum class Verdict { conjugate, not_conjugate, hypothesis_not_met };

struct ConjugacyVerdict {
  Verdict verdict = Verdict::hypothesis_not_met;
  std::string method;  // "core_test" | "brute_force" | "both"
  std::optional<InnerAutomorphism> witness;
  Subspace core_m;
  Subspace core_k;
  HypothesisReport hypothesis;
};

// Core-equality decision: under the hypothesis, M ~ K ⇔ core(M) = core(K).
// Refuses (hypothesis_not_met) instead of guessing when the gate fails.
ConjugacyVerdict conjugate_by_core_test(const LieAlgebra& L, const Subspace& m,
                                        const Subspace& k);

std::size_t default_conjugator_cap();  // 10^5 element draws from A

struct CorefreeConjugator {
  Vec a;                  // conjugator, living in the minimal ideal
  Subspace minimal_ideal; // A, the unique minimal ideal
  InnerAutomorphism map;  // equals identity + ad a
};

// For core-free maximal M, K over a prime field: the conjugator a ∈ A with
// (1 + ad a)(M) = K, after verifying the context facts L = A ⊕ M = A ⊕ K,
// C_L(A) = A, and uniqueness of the minimal ideal.
CorefreeConjugator corefree_conjugator(const LieAlgebra& L, const Subspace& m,
                                       const Subspace& k,
                                       std::size_t cap = 0);

struct ChiefFactorConjugator {
  std::size_t k = 0;      // index of the factor complemented by M
  Subspace a_space;       // A = L_{k+1}
  Subspace b_space;       // B = L_k
  Vec a;                  // conjugator found inside A
  InnerAutomorphism map;  // exp(ad a)
  Subspace intersection;  // {m ∈ M : [m, a] ∈ M}, checked equal to M ∩ K
  // [L,A] + B = A — the proof's dichotomy step.  It genuinely fails when M
  // is an ideal (the factor is central and M = K with a = 0); the violation
  // is recorded as-is rather than interpreted away.
  bool dichotomy_holds = false;
  std::string staging_note;  // empty unless the dichotomy failed
};

// The main conjugator theorem, constructively: a ∈ A with exp(ad a)(M) = K,
// the intersection formula, and the proof's staging facts B = A ∩ core(M)
// (always asserted) and [L, A] + B = A (recorded).
ChiefFactorConjugator find_conjugator_in_chief_factor(const LieAlgebra& L,
                                                      const Subspace& m,
                                                      const Subspace& k,
                                                      const ChiefSeries& series,
                                                      std::size_t cap = 0);

// {v ∈ M : [v, a] ∈ M} — the right-hand side of the intersection formula.
Subspace bracket_into_condition(const LieAlgebra& L, const Subspace& m,
                                const Vec& a);

// L = A ⊕ U as vector spaces, with U a subalgebra.
bool is_complement(const LieAlgebra& L, const Subspace& a, const Subspace& u);

// Complements M, K to the minimal ideal A are I(L:A)-conjugate iff
// M ∩ C_L(A) = K ∩ C_L(A).
bool complement_conjugacy_criterion(const LieAlgebra& L, const Subspace& a,
                                    const Subspace& m, const Subspace& k);

struct BijectionReport {
  bool has_complements = false;
  std::size_t complement_count = 0;
  std::size_t class_count = 0;            // I(L:A)-orbits of complements
  std::size_t ideal_complement_count = 0; // ideal complements to A in C_L(A)
  bool map_well_defined = false;  // M ↦ M ∩ C_L(A) constant on classes, lands right
  bool injective = false;
  bool surjective = false;
  bool counts_equal = false;
};

// The class-counting bijection: conjugacy classes of complements to A
// correspond to ideal complements to A inside C_L(A).
BijectionReport complement_classes_bijection(const LieAlgebra& L,
                                             const Subspace& a,
                                             std::size_t cap = 0);

struct IntersectionReport {
  Subspace intersection;      // M ∩ K
  Subspace core_m;
  Subspace core_k;
  bool cores_comparable_km = false;  // core(K) ⊆ core(M)
  bool cores_comparable_mk = false;  // core(M) ⊆ core(K)
  Maximality in_m = Maximality::unverified;
  Maximality in_k = Maximality::unverified;
};

// The intersection theorems: core(K) ⊄ core(M) forces M ∩ K maximal in M;
// non-conjugate complement pairs of a minimal ideal get it in both; under
// the hypothesis, incomparable-or-distinct cores give at least one.
IntersectionReport intersection_maximality_check(const LieAlgebra& L,
                                                 const Subspace& m,
                                                 const Subspace& k,
                                                 std::size_t cap = 0);

// The (p+2)-dimensional cyclic-weight algebra over GF(p): basis
// e_0..e_{p-1}, x, y with [e_i, x] = e_{i+1 mod p}, [e_i, y] = i·e_i,
// [x, y] = x.  Verified monolithic with monolith span(e_0..e_{p-1}) and
// non-nilpotent derived algebra whenever the check fits under the cap.
LieAlgebra example4_base_algebra(int64_t p);

}  // namespace solvlie
