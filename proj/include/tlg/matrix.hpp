#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tlg/arith.hpp"

namespace tlg {

/// Dense row-major matrix of arbitrary-precision integers.
///
/// A matrix with t rows and g columns is read as a homomorphism Z^g -> Z^t
/// acting on column vectors, so row i is the functional picked out by the
/// i-th standard generator of the target.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  /// Builds from explicit rows; all rows must have length `cols`.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Int> row_span(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> row_list() const;

  IntMatrix transpose() const;
  IntMatrix select_rows(std::span<const std::size_t> indices) const;
  IntMatrix select_columns(std::span<const std::size_t> indices) const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(const IntVector& v) const;
  RatVector operator*(const RatVector& v) const;
  IntMatrix operator-() const;

  /// Horizontal / vertical concatenation.
  static IntMatrix hconcat(const IntMatrix& left, const IntMatrix& right);
  static IntMatrix vconcat(const IntMatrix& top, const IntMatrix& bottom);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Int& factor);
  /// col[target] += factor * col[source]
  void add_column_multiple(std::size_t target, std::size_t source, const Int& factor);
  void negate_row(std::size_t i);
  void negate_column(std::size_t j);

  bool is_zero() const;
  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Row-vector times matrix.
IntVector left_multiply(const IntVector& v, const IntMatrix& m);
RatVector left_multiply(const RatVector& v, const IntMatrix& m);

}  // namespace tlg
