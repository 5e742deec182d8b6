#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "solvlie/lie.hpp"

namespace solvlie {

// Fixture names carry their parameter inline: "dim2_nonabelian",
// "heisenberg3", "dim3_almost_abelian", "dim3_scaled(2)",
// "upper_triangular(3)", "example4" (p comes from the field).
struct FixtureId {
  std::string name;
  FieldDescriptor field;
};

LieAlgebra fixture(const FixtureId& id);

// The listable fixture family names (parameter slots spelled generically).
std::vector<std::string> fixture_names();

// Full upper-triangular n×n matrices under the commutator; basis E_ab for
// a ≤ b in row-major order, dimension n(n+1)/2.
LieAlgebra upper_triangular_algebra(const FieldDescriptor& f, std::size_t n);

// Pinned 64-bit linear congruential stream: s ← 6364136223846793005·s +
// 1442695040888963407, output s >> 33.  Part of the reproducibility
// contract — reports quote seeds against exactly this stream.
class Rng {
 public:
  explicit Rng(uint64_t seed) : s_(seed) {}
  uint64_t next() {
    s_ = 6364136223846793005ULL * s_ + 1442695040888963407ULL;
    return s_ >> 33;
  }
  int64_t below(int64_t n) { return static_cast<int64_t>(next() % n); }

 private:
  uint64_t s_;
};

// Seeded random solvable algebra: random elements of t(ambient_n, F) are
// drawn and closed under brackets until the span reaches target_dim (or
// generation_failed after bounded draws).  Pure in (seed, parameters).
LieAlgebra random_solvable(uint64_t seed, std::size_t target_dim,
                           const FieldDescriptor& f, std::size_t ambient_n);

}  // namespace solvlie
