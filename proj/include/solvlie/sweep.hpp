#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "solvlie/catalog.hpp"
#include "solvlie/theorems.hpp"

namespace solvlie {

// One line of a theorem-sweep report.  Exceeding a cap turns into a
// "skipped" record with the reason — never a silent wrong answer.
struct CheckRecord {
  std::string algebra;  // label, e.g. "heisenberg3/GF(2)" or "random(...)"
  std::string check;
  std::string status;  // "pass" | "fail" | "skipped"
  std::string detail;
};

struct SweepOptions {
  uint64_t seed = 42;             // base seed for the random family
  std::size_t random_count = 50;  // hypothesis-met random algebras to draw
  std::size_t max_dim = 4;
  bool include_random = true;
  std::size_t automorphism_samples = 1000;
  std::vector<int64_t> primes = {2, 3};  // ground fields for the catalog
};

struct SweepAlgebra {
  std::string label;
  LieAlgebra algebra;
};

// Fixtures over GF(2)/GF(3) with dim ≤ max_dim (example4 at p = 2 included
// as the deliberate hypothesis violator), then seeded random solvable
// algebras filtered to hypothesis-met ones.  Deterministic in the options.
std::vector<SweepAlgebra> sweep_catalog(const SweepOptions& opts);

// Core-equality verdict == brute-force orbit verdict, all maximal pairs.
std::vector<CheckRecord> sweep_equivalence(
    const std::vector<SweepAlgebra>& algebras);
// Brute-force conjugacy ⇒ equal cores, hypothesis violators included.
std::vector<CheckRecord> sweep_forward(
    const std::vector<SweepAlgebra>& algebras);
// For conjugate pairs: conjugator in the complemented chief factor plus the
// intersection formula.
std::vector<CheckRecord> sweep_conjugator(
    const std::vector<SweepAlgebra>& algebras);
// Core-free pairs: the map is literally 1 + ad a with (ad a)² = 0.
std::vector<CheckRecord> sweep_lemma(
    const std::vector<SweepAlgebra>& algebras);
// Complement class counts vs ideal complements, per minimal ideal.
std::vector<CheckRecord> sweep_bijection(
    const std::vector<SweepAlgebra>& algebras);
// Pairwise complement conjugacy iff centralizer traces agree.
std::vector<CheckRecord> sweep_criterion(
    const std::vector<SweepAlgebra>& algebras);
// core(K) ⊄ core(M) forces M∩K maximal in M; non-conjugate complement
// pairs get it in both.
std::vector<CheckRecord> sweep_intersection(
    const std::vector<SweepAlgebra>& algebras);
// The base-algebra family facts at p = 2 and 3.
std::vector<CheckRecord> sweep_example4();
// Seeded eligible elements: validated exponentials, exp(ad −x) inverses,
// core-invariant images of maximal subalgebras.
std::vector<CheckRecord> sweep_automorphisms(
    const std::vector<SweepAlgebra>& algebras, uint64_t seed,
    std::size_t samples);

// Suite names: all | bijection | conjugator | intersection | lemma.
std::vector<CheckRecord> run_suite(const std::string& suite,
                                   const SweepOptions& opts);
// Same, but over caller-provided algebras (the --file path); prepends
// per-algebra structure diagnostics.
std::vector<CheckRecord> run_suite_on(
    const std::string& suite, const std::vector<SweepAlgebra>& algebras,
    const SweepOptions& opts);

}  // namespace solvlie
