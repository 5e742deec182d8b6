#include "solvlie/subspace.hpp"

#include <algorithm>
#include <cstdlib>

#include "solvlie/error.hpp"

namespace solvlie {

Subspace::Subspace(Matrix basis, std::size_t ambient)
    : basis_(std::move(basis)), ambient_(ambient) {
  Echelon e = rref(basis_);
  Matrix trimmed(basis_.field(), e.rank, ambient_);
  for (std::size_t r = 0; r < e.rank; ++r) trimmed.set_row(r, e.mat.row(r));
  basis_ = std::move(trimmed);
  pivots_ = std::move(e.pivots);
}

Subspace Subspace::zero(FieldDescriptor field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim), ambient_dim);
}

Subspace Subspace::full(FieldDescriptor field, std::size_t ambient_dim) {
  return Subspace(Matrix::identity(field, ambient_dim), ambient_dim);
}

Subspace Subspace::span(FieldDescriptor field, std::size_t ambient_dim,
                        const std::vector<Vec>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim)
      fail("shape_mismatch", "span vector has wrong ambient dimension");
  }
  return Subspace(Matrix::from_rows(field, vectors), ambient_dim);
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_)
    fail("shape_mismatch", "reduce: vector dimension mismatch");
  Vec w = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    const Scalar c = w[pivots_[r]];  // copy: the loop below rewrites w
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      w[j] = w[j] - c * basis_.at(r, j);
  }
  return w;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    fail("shape_mismatch", "contains: ambient dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_vector(r))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_)
    fail("shape_mismatch", "coordinates: vector dimension mismatch");
  // pivot columns read the coefficients straight off an RREF basis
  Vec coeffs = vec_zero(field(), dim());
  for (std::size_t r = 0; r < dim(); ++r) coeffs[r] = v[pivots_[r]];
  if (!vec_eq(from_coordinates(coeffs), v)) return std::nullopt;
  return coeffs;
}

Vec Subspace::from_coordinates(const Vec& coeffs) const {
  if (coeffs.size() != dim())
    fail("shape_mismatch", "from_coordinates: coefficient count mismatch");
  Vec out = vec_zero(field(), ambient_);
  for (std::size_t r = 0; r < dim(); ++r) {
    if (coeffs[r].is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      out[j] = out[j] + coeffs[r] * basis_.at(r, j);
  }
  return out;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && basis_ == other.basis_;
}

std::string Subspace::to_string() const {
  if (dim() == 0) return "0";
  return basis_.to_string();
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || u.field() != v.field())
    fail("shape_mismatch", "subspace_sum: ambient mismatch");
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < u.dim(); ++r) rows.push_back(u.basis_vector(r));
  for (std::size_t r = 0; r < v.dim(); ++r) rows.push_back(v.basis_vector(r));
  return Subspace::span(u.field(), u.ambient_dim(), rows);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || u.field() != v.field())
    fail("shape_mismatch", "subspace_intersect: ambient mismatch");
  // Zassenhaus: rows (u_i|u_i), (v_j|0); echelon rows with zero left block
  // carry an intersection basis in the right block.
  std::size_t n = u.ambient_dim();
  FieldDescriptor f = u.field();
  Matrix z(f, u.dim() + v.dim(), 2 * n);
  for (std::size_t r = 0; r < u.dim(); ++r) {
    Vec row = u.basis_vector(r);
    for (std::size_t c = 0; c < n; ++c) {
      z.at(r, c) = row[c];
      z.at(r, n + c) = row[c];
    }
  }
  for (std::size_t r = 0; r < v.dim(); ++r) {
    Vec row = v.basis_vector(r);
    for (std::size_t c = 0; c < n; ++c) z.at(u.dim() + r, c) = row[c];
  }
  Echelon e = rref(z);
  std::vector<Vec> inter;
  for (std::size_t r = 0; r < e.rank; ++r) {
    if (e.pivots[r] < n) continue;  // left block nonzero: belongs to the sum
    Vec w = vec_zero(f, n);
    for (std::size_t c = 0; c < n; ++c) w[c] = e.mat.at(r, n + c);
    inter.push_back(std::move(w));
  }
  return Subspace::span(f, n, inter);
}

bool subspace_lex_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.ambient_dim(); ++c) {
      const Scalar& x = a.basis().at(r, c);
      const Scalar& y = b.basis().at(r, c);
      if (!(x == y)) return x.less(y);
    }
  }
  return false;
}

BigInt count_subspaces(std::size_t n, std::size_t k, int64_t p) {
  if (k > n) return 0;
  // Gaussian binomial: prod_{i<k} (p^{n-i} - 1) / (p^{i+1} - 1)
  BigInt num = 1, den = 1;
  BigInt bp = p;
  auto pw = [&](std::size_t e) {
    BigInt r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= bp;
    return r;
  };
  for (std::size_t i = 0; i < k; ++i) {
    num *= pw(n - i) - 1;
    den *= pw(i + 1) - 1;
  }
  return num / den;
}

BigInt count_all_subspaces(std::size_t n, int64_t p) {
  BigInt total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += count_subspaces(n, k, p);
  return total;
}

std::size_t default_subspace_cap() {
  if (const char* env = std::getenv("SOLVLIE_MAX_SUBSPACES")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

namespace {

// All RREF matrices with the given pivot columns: free entries (right of the
// row's pivot, off other pivots) run through an odometer over residues.
void emit_for_pivots(std::size_t n, FieldDescriptor field,
                     const std::vector<std::size_t>& pivots,
                     std::vector<Subspace>& out) {
  std::size_t k = pivots.size();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::pair<std::size_t, std::size_t>> free_cells;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = pivots[r] + 1; c < n; ++c)
      if (!is_pivot[c]) free_cells.emplace_back(r, c);

  int64_t p = field.p();
  std::vector<int64_t> digits(free_cells.size(), 0);
  while (true) {
    Matrix m(field, k, n);
    for (std::size_t r = 0; r < k; ++r)
      m.at(r, pivots[r]) = Scalar::one(field);
    for (std::size_t i = 0; i < free_cells.size(); ++i)
      m.at(free_cells[i].first, free_cells[i].second) =
          Scalar::of_int(field, digits[i]);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < k; ++r) rows.push_back(m.row(r));
    out.push_back(Subspace::span(field, n, rows));
    // odometer step
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
    if (i == digits.size()) break;
  }
}

void pivot_combinations(std::size_t n, std::size_t k,
                        std::vector<std::size_t>& current, std::size_t start,
                        FieldDescriptor field, std::vector<Subspace>& out) {
  if (current.size() == k) {
    emit_for_pivots(n, field, current, out);
    return;
  }
  for (std::size_t c = start; c + (k - current.size()) <= n; ++c) {
    current.push_back(c);
    pivot_combinations(n, k, current, c + 1, field, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Subspace> enumerate_subspaces_of_dim(std::size_t n,
                                                 FieldDescriptor field,
                                                 std::size_t k,
                                                 std::size_t cap) {
  if (!field.is_prime_field())
    fail("unsupported_field", "subspace enumeration needs a finite field");
  if (cap == 0) cap = default_subspace_cap();
  BigInt total = count_subspaces(n, k, field.p());
  if (total > BigInt(cap))
    fail("cap_exceeded", "subspace enumeration: " + total.str() +
                             " subspaces exceeds cap " + std::to_string(cap));
  std::vector<Subspace> out;
  if (k == 0) {
    out.push_back(Subspace::zero(field, n));
  } else {
    std::vector<std::size_t> current;
    pivot_combinations(n, k, current, 0, field, out);
  }
  std::sort(out.begin(), out.end(), subspace_lex_less);
  return out;
}

std::vector<Subspace> enumerate_subspaces(std::size_t n, FieldDescriptor field,
                                          std::size_t cap) {
  if (!field.is_prime_field())
    fail("unsupported_field", "subspace enumeration needs a finite field");
  if (cap == 0) cap = default_subspace_cap();
  BigInt total = count_all_subspaces(n, field.p());
  if (total > BigInt(cap))
    fail("cap_exceeded", "subspace enumeration: " + total.str() +
                             " subspaces exceeds cap " + std::to_string(cap));
  std::vector<Subspace> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto layer = enumerate_subspaces_of_dim(n, field, k, cap);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  // layers are sorted and dimension leads the order, so out is sorted
  return out;
}

std::vector<Vec> enumerate_vectors(FieldDescriptor field, std::size_t n) {
  if (!field.is_prime_field())
    fail("unsupported_field", "vector enumeration needs a finite field");
  int64_t p = field.p();
  std::vector<Vec> out;
  std::vector<int64_t> digits(n, 0);
  while (true) {
    Vec v = vec_zero(field, n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Scalar::of_int(field, digits[i]);
    out.push_back(std::move(v));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++digits[i] < p) break;
      digits[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::vector<Vec> subspace_vectors(const Subspace& u) {
  if (!u.field().is_prime_field())
    fail("unsupported_field", "element enumeration needs a finite field");
  std::vector<Vec> out;
  for (const Vec& coeffs : enumerate_vectors(u.field(), u.dim()))
    out.push_back(u.from_coordinates(coeffs));
  return out;
}

}  // namespace solvlie
