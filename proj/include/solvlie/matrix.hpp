#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "solvlie/field.hpp"

namespace solvlie {

// Dense matrix over a fixed field, row-major.  All entries share the field of
// the descriptor passed at construction; mixing fields is an error.
class Matrix {
 public:
  Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldDescriptor field, std::size_t n);
  static Matrix from_rows(FieldDescriptor field, std::vector<Vec> rows);

  const FieldDescriptor& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);
  void set_col(std::size_t c, const Vec& v);

  Matrix mul(const Matrix& other) const;
  Matrix add(const Matrix& other) const;
  Matrix sub(const Matrix& other) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  Matrix pow(std::size_t e) const;  // square matrices only

  // matrix * column vector
  Vec apply(const Vec& v) const;

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  // "a,b;c,d" — rows joined by ';', entries by ','.  Stable across runs,
  // usable as a hash key for visited-set bookkeeping.
  std::string to_string() const;

 private:
  FieldDescriptor field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

// Row-reduced echelon form together with the pivot bookkeeping everything
// downstream (canonical subspaces, kernels, solving) hangs off.
struct Echelon {
  Matrix mat;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row, ascending
};

Echelon rref(const Matrix& m);

// Basis of the right kernel {v : m v = 0}, one vector per free column, in
// ascending free-column order (each has a 1 in its free column).
std::vector<Vec> kernel_basis(const Matrix& m);

// Least solution x of m x = b in the RREF sense (free coordinates zero), or
// nothing when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

}  // namespace solvlie
