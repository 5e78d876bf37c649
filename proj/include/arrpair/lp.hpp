#pragma once

#include "arrpair/qmatrix.hpp"

/// Exact two-phase simplex over the rationals.
namespace arrpair::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rational value;
  QVector solution;
};

/// maximize c.y  subject to  A y <= b,  y >= 0.
///
/// Bland's rule is used for both phases, so the method terminates on
/// degenerate problems and the returned vertex is deterministic.
Result maximize(const QMatrix& A, const QVector& b, const QVector& c);

}  // namespace arrpair::lp
