#include "arrpair/linalg.hpp"

#include <utility>

#include "arrpair/errors.hpp"

namespace arrpair {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

// Each row multiplied by the lcm of its denominators. Positive row scaling
// preserves rank and determinant sign.
IntMatrix integer_scaled(const QMatrix& M, Integer* scale_product = nullptr) {
  IntMatrix out(M.rows(), std::vector<Integer>(M.cols()));
  if (scale_product) *scale_product = 1;
  for (std::size_t r = 0; r < M.rows(); ++r) {
    const QVector row = M.row(r);
    const Integer l = lcm_of_denominators(row);
    if (scale_product) *scale_product *= l;
    for (std::size_t c = 0; c < M.cols(); ++c) {
      out[r][c] = boost::multiprecision::numerator(row[c]) * (l / boost::multiprecision::denominator(row[c]));
    }
  }
  return out;
}

struct BareissResult {
  std::size_t rank = 0;
  bool odd_swaps = false;
  Integer last_pivot = 1;
};

// Fraction-free elimination in place. Every division by the previous pivot
// is exact (Sylvester's identity).
BareissResult bareiss(IntMatrix& a, std::size_t cols) {
  BareissResult out;
  const std::size_t rows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      out.odd_swaps = !out.odd_swaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  out.rank = r;
  out.last_pivot = prev;
  return out;
}

}  // namespace

std::size_t rank(const QMatrix& M) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  IntMatrix a = integer_scaled(M);
  return bareiss(a, M.cols()).rank;
}

int det_sign(const QMatrix& M) {
  if (!M.is_square()) throw DimensionError("det_sign: matrix is not square");
  if (M.rows() == 0) return 1;
  IntMatrix a = integer_scaled(M);
  const BareissResult res = bareiss(a, M.cols());
  if (res.rank < M.rows()) return 0;
  const int s = res.last_pivot.sign();
  return res.odd_swaps ? -s : s;
}

Rational determinant(const QMatrix& M) {
  if (!M.is_square()) throw DimensionError("determinant: matrix is not square");
  if (M.rows() == 0) return 1;
  Integer scale;
  IntMatrix a = integer_scaled(M, &scale);
  const BareissResult res = bareiss(a, M.cols());
  if (res.rank < M.rows()) return 0;
  Rational det(res.last_pivot, scale);
  return res.odd_swaps ? Rational(-det) : det;
}

RowEchelon reduced_row_echelon(const QMatrix& M) {
  RowEchelon out{M, {}};
  QMatrix& a = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational pivot = a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) /= pivot;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::optional<QVector> solve_affine(const QMatrix& M, const QVector& rhs) {
  if (M.rows() != rhs.size()) throw DimensionError("solve_affine: rhs length differs from row count");
  QMatrix aug(M.rows(), M.cols() + 1);
  for (std::size_t r = 0; r < M.rows(); ++r) {
    for (std::size_t c = 0; c < M.cols(); ++c) aug(r, c) = M(r, c);
    aug(r, M.cols()) = rhs[r];
  }
  const RowEchelon ech = reduced_row_echelon(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == M.cols()) return std::nullopt;
  QVector x(M.cols());
  for (std::size_t k = 0; k < ech.pivots.size(); ++k) x[ech.pivots[k]] = ech.reduced(k, M.cols());
  return x;
}

std::vector<QVector> nullspace_basis(const QMatrix& M) {
  const RowEchelon ech = reduced_row_echelon(M);
  std::vector<bool> is_pivot(M.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;

  std::vector<QVector> basis;
  for (std::size_t f = 0; f < M.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(M.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < ech.pivots.size(); ++k) v[ech.pivots[k]] = -ech.reduced(k, f);
    const Integer l = lcm_of_denominators(v);
    Integer g = 0;
    for (auto& x : v) {
      x *= l;
      g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(x));
    }
    if (g > 1)
      for (auto& x : v) x /= g;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace arrpair
