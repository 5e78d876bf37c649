#include "arrpair/lp.hpp"

#include <limits>

#include "arrpair/errors.hpp"

namespace arrpair::lp {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau: rows_ constraint rows, width_ columns plus a trailing rhs.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t width) : rows_(rows), width_(width), cells_(rows * (width + 1)) {}

  Rational& at(std::size_t r, std::size_t c) { return cells_[r * (width_ + 1) + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * (width_ + 1) + c]; }
  Rational& rhs(std::size_t r) { return at(r, width_); }

  std::size_t rows() const { return rows_; }
  std::size_t width() const { return width_; }

  std::vector<std::size_t> basis;

  void pivot(std::size_t pr, std::size_t pc, QVector& objective) {
    const Rational p = at(pr, pc);
    for (std::size_t c = 0; c <= width_; ++c)
      if (!at(pr, c).is_zero()) at(pr, c) /= p;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr || at(r, pc).is_zero()) continue;
      const Rational f = at(r, pc);
      for (std::size_t c = 0; c <= width_; ++c)
        if (!at(pr, c).is_zero()) at(r, c) -= f * at(pr, c);
    }
    if (!objective[pc].is_zero()) {
      const Rational f = objective[pc];
      for (std::size_t c = 0; c <= width_; ++c)
        if (!at(pr, c).is_zero()) objective[c] -= f * at(pr, c);
    }
    basis[pr] = pc;
  }

  // Reduced-cost row for "maximize cost.y": entry j is -(c_j - c_B B^-1 A_j),
  // trailing entry is the current objective value.
  QVector reduced_costs(const QVector& cost) const {
    QVector row(width_ + 1);
    for (std::size_t c = 0; c < width_; ++c) row[c] = -cost[c];
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& cb = cost[basis[r]];
      if (cb.is_zero()) continue;
      for (std::size_t c = 0; c <= width_; ++c) row[c] += cb * at(r, c);
    }
    return row;
  }

  // Bland's rule. Returns false on unboundedness.
  bool optimize(QVector& objective, std::size_t allowed_width) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t c = 0; c < allowed_width; ++c) {
        if (objective[c].sign() < 0) {
          enter = c;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (at(r, enter).sign() <= 0) continue;
        Rational ratio = at(r, width_) / at(r, enter);
        if (leave == kNone || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter, objective);
    }
  }

 private:
  std::size_t rows_;
  std::size_t width_;
  std::vector<Rational> cells_;
};

}  // namespace

Result maximize(const QMatrix& A, const QVector& b, const QVector& c) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  if (b.size() != m || c.size() != n) throw DimensionError("lp::maximize: shape mismatch");

  std::size_t artificials = 0;
  for (const auto& bi : b)
    if (bi < 0) ++artificials;

  // Columns: n structural, m slack, then artificials.
  const std::size_t width = n + m + artificials;
  Tableau T(m, width);
  T.basis.assign(m, kNone);
  std::size_t next_art = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j)
      if (A(i, j) != 0) T.at(i, j) = flip ? Rational(-A(i, j)) : A(i, j);
    T.at(i, n + i) = flip ? -1 : 1;
    T.rhs(i) = flip ? Rational(-b[i]) : b[i];
    if (flip) {
      T.at(i, next_art) = 1;
      T.basis[i] = next_art++;
    } else {
      T.basis[i] = n + i;
    }
  }

  if (artificials > 0) {
    QVector phase1(width);
    for (std::size_t j = n + m; j < width; ++j) phase1[j] = -1;
    QVector objective = T.reduced_costs(phase1);
    T.optimize(objective, width);
    if (objective[width] < 0) return {Status::Infeasible, Rational(0), {}};
    // Drive zero-level artificials out of the basis where possible; rows that
    // cannot pivot are redundant and stay inert.
    for (std::size_t r = 0; r < m; ++r) {
      if (T.basis[r] < n + m) continue;
      for (std::size_t j = 0; j < n + m; ++j) {
        if (T.at(r, j) != 0) {
          T.pivot(r, j, objective);
          break;
        }
      }
    }
  }

  QVector cost(width);
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  QVector objective = T.reduced_costs(cost);
  if (!T.optimize(objective, n + m)) return {Status::Unbounded, Rational(0), {}};

  Result out{Status::Optimal, objective[width], QVector(n)};
  for (std::size_t r = 0; r < m; ++r)
    if (T.basis[r] < n) out.solution[T.basis[r]] = T.rhs(r);
  return out;
}

}  // namespace arrpair::lp
