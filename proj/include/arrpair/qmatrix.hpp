#pragma once

#include <cstddef>
#include <vector>

#include "arrpair/rational.hpp"

namespace arrpair {

/// Dense row-major matrix of exact rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  /// All rows must have the same length.
  static QMatrix from_rows(const std::vector<QVector>& rows);
  static QMatrix from_columns(const std::vector<QVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector row(std::size_t r) const;
  QVector column(std::size_t c) const;

  QMatrix transpose() const;
  /// Leading k-by-k principal submatrix.
  QMatrix leading(std::size_t k) const;
  QMatrix select_rows(const std::vector<std::size_t>& indices) const;
  bool is_symmetric() const;
  bool is_zero() const;

  QMatrix operator*(const QMatrix& other) const;
  QVector operator*(const QVector& v) const;
  QMatrix operator-() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// v^T S v.
Rational quadratic_form(const QMatrix& S, const QVector& v);

}  // namespace arrpair
