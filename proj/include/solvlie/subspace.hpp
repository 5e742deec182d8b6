#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "solvlie/matrix.hpp"

namespace solvlie {

// Subspace of F^n in canonical form: basis matrix in RREF with zero rows
// dropped, pivots strictly ascending.  Equality is entry-wise data equality,
// which is what makes orbit/visited-set bookkeeping exact.
class Subspace {
 public:
  static Subspace zero(FieldDescriptor field, std::size_t ambient_dim);
  static Subspace full(FieldDescriptor field, std::size_t ambient_dim);
  static Subspace span(FieldDescriptor field, std::size_t ambient_dim,
                       const std::vector<Vec>& vectors);

  const FieldDescriptor& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  // Coset representative of v: pivot coordinates eliminated.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coefficients of v in the canonical basis, or nothing if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  // Linear combination of the basis with the given coefficients.
  Vec from_coordinates(const Vec& coeffs) const;

  bool operator==(const Subspace& other) const;
  bool operator!=(const Subspace& other) const { return !(*this == other); }

  // Same row format as Matrix::to_string; usable as an exact set key.
  std::string to_string() const;

 private:
  Subspace(Matrix basis, std::size_t ambient);
  Matrix basis_;
  std::size_t ambient_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

// (dimension asc, then flattened basis entries) — the deterministic order
// used whenever the code must pick one subspace among several.
bool subspace_lex_less(const Subspace& a, const Subspace& b);

// Number of k-dim subspaces of F_p^n (Gaussian binomial), and their total.
BigInt count_subspaces(std::size_t n, std::size_t k, int64_t p);
BigInt count_all_subspaces(std::size_t n, int64_t p);

// Enumeration cap: SOLVLIE_MAX_SUBSPACES env var, else 100000.
std::size_t default_subspace_cap();

// Every subspace of F^n exactly once, sorted by subspace_lex_less.
// Prime fields only; total count must stay within cap.
std::vector<Subspace> enumerate_subspaces(std::size_t n, FieldDescriptor field,
                                          std::size_t cap = 0);
// Same, restricted to one dimension.
std::vector<Subspace> enumerate_subspaces_of_dim(std::size_t n,
                                                 FieldDescriptor field,
                                                 std::size_t k,
                                                 std::size_t cap = 0);

// All p^n vectors of F^n in a fixed odometer order (first coordinate is the
// most significant digit).
std::vector<Vec> enumerate_vectors(FieldDescriptor field, std::size_t n);

// All p^dim elements of the subspace (coefficient odometer over the basis).
std::vector<Vec> subspace_vectors(const Subspace& u);

}  // namespace solvlie
