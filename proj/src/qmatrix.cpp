#include "arrpair/qmatrix.hpp"

#include "arrpair/errors.hpp"

namespace arrpair {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  QMatrix M(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) M(r, c) = rows[r][c];
  }
  return M;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& columns) {
  return from_rows(columns).transpose();
}

QVector QMatrix::row(std::size_t r) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

QVector QMatrix::column(std::size_t c) const {
  QVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix T(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) T(c, r) = (*this)(r, c);
  return T;
}

QMatrix QMatrix::leading(std::size_t k) const {
  if (k > rows_ || k > cols_) throw DimensionError("leading: block larger than matrix");
  QMatrix L(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) L(r, c) = (*this)(r, c);
  return L;
}

QMatrix QMatrix::select_rows(const std::vector<std::size_t>& indices) const {
  QMatrix S(indices.size(), cols_);
  for (std::size_t r = 0; r < indices.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) S(r, c) = (*this)(indices[r], c);
  return S;
}

bool QMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool QMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionError("matrix product: inner dimensions differ");
  QMatrix P(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) P(r, c) += a * other(k, c);
    }
  return P;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (cols_ != v.size()) throw DimensionError("matrix-vector product: length mismatch");
  QVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

QMatrix QMatrix::operator-() const {
  QMatrix N = *this;
  for (auto& v : N.data_) v = -v;
  return N;
}

Rational quadratic_form(const QMatrix& S, const QVector& v) { return dot(v, S * v); }

}  // namespace arrpair
