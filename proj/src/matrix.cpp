#include "tlg/matrix.hpp"

#include <algorithm>

#include "tlg/errors.hpp"

namespace tlg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw InputError("row " + std::to_string(i) + " has length " +
                       std::to_string(rows[i].size()) + ", expected " + std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  return from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InputError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  auto s = row_span(i);
  return IntVector(s.begin(), s.end());
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> indices) const {
  IntMatrix m(indices.size(), cols_);
  for (std::size_t k = 0; k < indices.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(indices[k], j);
  return m;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> indices) const {
  IntMatrix m(rows_, indices.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < indices.size(); ++k) m(i, k) = (*this)(i, indices[k]);
  return m;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InputError("block out of range");
  IntMatrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix product shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
  IntVector out(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

RatVector IntMatrix::operator*(const RatVector& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
  RatVector out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += Rat((*this)(i, j)) * v[j];
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& left, const IntMatrix& right) {
  if (left.rows_ != right.rows_) throw InputError("hconcat row mismatch");
  IntMatrix m(left.rows_, left.cols_ + right.cols_);
  for (std::size_t i = 0; i < left.rows_; ++i) {
    for (std::size_t j = 0; j < left.cols_; ++j) m(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) m(i, left.cols_ + j) = right(i, j);
  }
  return m;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.cols_ != bottom.cols_) throw InputError("vconcat column mismatch");
  IntMatrix m(top.rows_ + bottom.rows_, top.cols_);
  for (std::size_t i = 0; i < top.rows_; ++i)
    for (std::size_t j = 0; j < top.cols_; ++j) m(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows_; ++i)
    for (std::size_t j = 0; j < top.cols_; ++j) m(top.rows_ + i, j) = bottom(i, j);
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_column_multiple(std::size_t target, std::size_t source, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_column(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

IntVector left_multiply(const IntVector& v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw InputError("vector-matrix shape mismatch");
  IntVector out(m.cols(), Int(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

RatVector left_multiply(const RatVector& v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw InputError("vector-matrix shape mismatch");
  RatVector out(m.cols(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * Rat(m(i, j));
  }
  return out;
}

}  // namespace tlg
