#pragma once

#include <optional>
#include <vector>

#include "arrpair/qmatrix.hpp"

namespace arrpair {

/// Dimension of the row space, by fraction-free (Bareiss) elimination on the
/// row-wise integer-scaled matrix.
std::size_t rank(const QMatrix& M);

/// Sign of det(M). Throws DimensionError if M is not square.
int det_sign(const QMatrix& M);

/// Exact determinant. Throws DimensionError if M is not square.
Rational determinant(const QMatrix& M);

/// One exact solution of M x = rhs, or nullopt when the system is
/// inconsistent. Free variables are set to zero, so the result is
/// deterministic; it is unique when M has full column rank.
std::optional<QVector> solve_affine(const QMatrix& M, const QVector& rhs);

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};
RowEchelon reduced_row_echelon(const QMatrix& M);

/// Basis of {x : M x = 0}, one vector per free column of the reduced row
/// echelon form, each scaled to a primitive integer vector.
std::vector<QVector> nullspace_basis(const QMatrix& M);

}  // namespace arrpair
