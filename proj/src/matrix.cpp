#include "solvlie/matrix.hpp"

#include "solvlie/error.hpp"

namespace solvlie {

Matrix::Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols)
    : field_(field),
      rows_(rows),
      cols_(cols),
      data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(FieldDescriptor field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(FieldDescriptor field, std::vector<Vec> rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      fail("shape_mismatch", "ragged rows in matrix construction");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v;
  v.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
  return v;
}

Vec Matrix::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) fail("shape_mismatch", "set_row size mismatch");
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

void Matrix::set_col(std::size_t c, const Vec& v) {
  if (v.size() != rows_) fail("shape_mismatch", "set_col size mismatch");
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Matrix Matrix::mul(const Matrix& other) const {
  if (field_ != other.field_) fail("field_mismatch", "matrix field mismatch");
  if (cols_ != other.rows_) fail("shape_mismatch", "matrix product shapes");
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out.at(i, j) = out.at(i, j) + aik * other.at(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::add(const Matrix& other) const {
  if (field_ != other.field_) fail("field_mismatch", "matrix field mismatch");
  if (rows_ != other.rows_ || cols_ != other.cols_)
    fail("shape_mismatch", "matrix sum shapes");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] + other.data_[i];
  return out;
}

Matrix Matrix::sub(const Matrix& other) const {
  if (field_ != other.field_) fail("field_mismatch", "matrix field mismatch");
  if (rows_ != other.rows_ || cols_ != other.cols_)
    fail("shape_mismatch", "matrix difference shapes");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] - other.data_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

Matrix Matrix::pow(std::size_t e) const {
  if (rows_ != cols_) fail("shape_mismatch", "pow needs a square matrix");
  Matrix acc = Matrix::identity(field_, rows_);
  for (std::size_t i = 0; i < e; ++i) acc = acc.mul(*this);
  return acc;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) fail("shape_mismatch", "matrix apply size mismatch");
  Vec out = vec_zero(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero() && !v[c].is_zero()) acc = acc + at(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == Matrix::identity(field_, rows_);
}

bool Matrix::operator==(const Matrix& other) const {
  if (field_ != other.field_ || rows_ != other.rows_ || cols_ != other.cols_)
    return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!(data_[i] == other.data_[i])) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ';';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ',';
      out += at(r, c).to_string();
    }
  }
  return out;
}

Echelon rref(const Matrix& m) {
  Echelon e{m, 0, {}};
  Matrix& a = e.mat;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    // first nonzero entry on/below pivot_row in this column
    std::size_t sel = a.rows();
    for (std::size_t r = pivot_row; r < a.rows(); ++r) {
      if (!a.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel == a.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t c = 0; c < a.cols(); ++c)
        std::swap(a.at(sel, c), a.at(pivot_row, c));
    }
    Scalar inv = a.at(pivot_row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c)
      a.at(pivot_row, c) = a.at(pivot_row, c) * inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row) continue;
      Scalar f = a.at(r, col);
      if (f.is_zero()) continue;
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) = a.at(r, c) - f * a.at(pivot_row, c);
    }
    e.pivots.push_back(col);
    ++pivot_row;
  }
  e.rank = pivot_row;
  return e;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v = vec_zero(m.field(), m.cols());
    v[free_col] = Scalar::one(m.field());
    for (std::size_t r = 0; r < e.rank; ++r)
      v[e.pivots[r]] = -e.mat.at(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) fail("shape_mismatch", "solve rhs size mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  Echelon e = rref(aug);
  for (auto p : e.pivots)
    if (p == m.cols()) return std::nullopt;  // row [0..0 | 1]: inconsistent
  Vec x = vec_zero(m.field(), m.cols());
  for (std::size_t r = 0; r < e.rank; ++r)
    x[e.pivots[r]] = e.mat.at(r, m.cols());
  return x;
}

}  // namespace solvlie
