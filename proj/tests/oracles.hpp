#pragma once

// Independent reference computations. Nothing here calls the elimination,
// simplex or enumeration code under test.

#include <algorithm>
#include <numeric>
#include <vector>

#include "arrpair/arrangement.hpp"

namespace arrpair::oracle {

/// Leibniz expansion over all permutations.
inline Rational leibniz_det(const QMatrix& M) {
  const std::size_t n = M.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= M(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Largest k with a nonzero k x k minor, by exhaustive minors.
inline std::size_t minor_rank(const QMatrix& M) {
  const std::size_t kmax = std::min(M.rows(), M.cols());
  for (std::size_t k = kmax; k > 0; --k) {
    std::vector<bool> rsel(M.rows(), false), csel(M.cols(), false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        QMatrix sub(k, k);
        std::size_t r = 0;
        for (std::size_t i = 0; i < M.rows(); ++i) {
          if (!rsel[i]) continue;
          std::size_t c = 0;
          for (std::size_t j = 0; j < M.cols(); ++j)
            if (csel[j]) sub(r, c++) = M(i, j);
          ++r;
        }
        if (leibniz_det(sub) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

/// a.x + c > 0 (strict) or >= 0.
struct Inequality {
  QVector a;
  Rational c;
  bool strict = false;
};

/// Fourier-Motzkin elimination with strictness tracking.
inline bool fm_feasible(std::vector<Inequality> system, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Inequality> pos, neg, next;
    for (auto& q : system) {
      if (q.a[k] > 0)
        pos.push_back(q);
      else if (q.a[k] < 0)
        neg.push_back(q);
      else
        next.push_back(q);
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        Inequality r;
        const Rational wp = -q.a[k], wq = p.a[k];
        r.a.resize(n);
        for (std::size_t j = 0; j < n; ++j) r.a[j] = wp * p.a[j] + wq * q.a[j];
        r.c = wp * p.c + wq * q.c;
        r.strict = p.strict || q.strict;
        next.push_back(std::move(r));
      }
    }
    system = std::move(next);
  }
  return std::all_of(system.begin(), system.end(),
                     [](const Inequality& q) { return q.strict ? q.c > 0 : q.c >= 0; });
}

inline std::vector<Inequality> sign_system(const Arrangement& arr, const SignVector& signs) {
  std::vector<Inequality> sys;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    const auto& h = arr.hyperplane(i);
    QVector neg_a = h.normal;
    for (auto& x : neg_a) x = -x;
    switch (signs[i]) {
      case Sign::Positive: sys.push_back({h.normal, h.offset, true}); break;
      case Sign::Negative: sys.push_back({neg_a, -h.offset, true}); break;
      case Sign::Zero:
        sys.push_back({h.normal, h.offset, false});
        sys.push_back({neg_a, -h.offset, false});
        break;
    }
  }
  return sys;
}

inline bool fm_face_feasible(const Arrangement& arr, const SignVector& signs) {
  return fm_feasible(sign_system(arr, signs), arr.ambient_dim());
}

/// Bounded iff no recession direction has y_k = +1 or y_k = -1.
inline bool fm_face_bounded(const Arrangement& arr, const SignVector& signs) {
  const std::size_t m = arr.ambient_dim();
  std::vector<Inequality> cone;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    const auto& b = arr.hyperplane(i).normal;
    QVector neg = b;
    for (auto& x : neg) x = -x;
    if (signs[i] != Sign::Negative) cone.push_back({b, 0, false});
    if (signs[i] != Sign::Positive) cone.push_back({neg, 0, false});
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (int dir : {1, -1}) {
      auto sys = cone;
      QVector e(m);
      e[k] = dir;
      sys.push_back({e, -1, false});  // dir * y_k >= 1
      if (fm_feasible(sys, m)) return false;
    }
  }
  return true;
}

/// Every nonzero v in {-1,0,1}^n: v^T S v.
inline std::vector<std::pair<QVector, Rational>> small_vector_values(const QMatrix& S) {
  const std::size_t n = S.rows();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::vector<std::pair<QVector, Rational>> out;
  for (std::size_t code = 0; code < total; ++code) {
    QVector v(n);
    std::size_t c = code;
    bool zero = true;
    for (std::size_t i = 0; i < n; ++i, c /= 3) {
      v[i] = static_cast<long>(c % 3) - 1;
      zero = zero && v[i] == 0;
    }
    if (zero) continue;
    Rational q = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q += v[i] * S(i, j) * v[j];
    out.emplace_back(std::move(v), std::move(q));
  }
  return out;
}

/// Intersection points of every m independent hyperplanes, by Cramer's rule.
inline std::vector<QVector> cramer_vertices(const Arrangement& arr) {
  const std::size_t m = arr.ambient_dim(), s = arr.size();
  std::vector<QVector> out;
  std::vector<bool> sel(s, false);
  std::fill(sel.begin(), sel.begin() + static_cast<long>(std::min(m, s)), true);
  if (m > s) return out;
  do {
    QMatrix B(m, m);
    QVector rhs;
    for (std::size_t i = 0, r = 0; i < s; ++i) {
      if (!sel[i]) continue;
      for (std::size_t j = 0; j < m; ++j) B(r, j) = arr.hyperplane(i).normal[j];
      rhs.push_back(-arr.hyperplane(i).offset);
      ++r;
    }
    const Rational d = leibniz_det(B);
    if (d == 0) continue;
    QVector x(m);
    for (std::size_t j = 0; j < m; ++j) {
      QMatrix Bj = B;
      for (std::size_t r = 0; r < m; ++r) Bj(r, j) = rhs[r];
      x[j] = leibniz_det(Bj) / d;
    }
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return out;
}

/// Pairing matrix from scratch: regions are the bounded sign vectors in
/// {-,+}^s (lex order, - first), a closure's vertices are the conforming
/// intersection points, and the dimension of an intersection of closures
/// is the affine rank of its common vertices.
inline std::vector<std::vector<long long>> brute_force_phi(const Arrangement& arr) {
  const std::size_t s = arr.size(), m = arr.ambient_dim();
  const auto points = cramer_vertices(arr);
  std::vector<std::vector<QVector>> closures;
  for (std::size_t code = 0; code < (std::size_t{1} << s); ++code) {
    SignVector signs(s);
    for (std::size_t i = 0; i < s; ++i) signs[i] = (code >> (s - 1 - i)) & 1 ? Sign::Positive : Sign::Negative;
    if (!fm_face_feasible(arr, signs) || !fm_face_bounded(arr, signs)) continue;
    std::vector<QVector> vs;
    for (const auto& p : points) {
      bool conforms = true;
      for (std::size_t i = 0; i < s && conforms; ++i) {
        const Rational v = arr.hyperplane(i).evaluate(p);
        conforms = signs[i] == Sign::Positive ? v >= 0 : v <= 0;
      }
      if (conforms) vs.push_back(p);
    }
    closures.push_back(std::move(vs));
  }
  const std::size_t r = closures.size();
  std::vector<std::vector<long long>> phi(r, std::vector<long long>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<QVector> common;
      for (const auto& p : closures[i])
        if (std::find(closures[j].begin(), closures[j].end(), p) != closures[j].end()) common.push_back(p);
      if (common.empty()) continue;
      QMatrix diffs(common.size() - 1, m);
      for (std::size_t k = 1; k < common.size(); ++k)
        for (std::size_t c = 0; c < m; ++c) diffs(k - 1, c) = common[k][c] - common[0][c];
      const std::size_t dim = common.size() == 1 ? 0 : minor_rank(diffs);
      const auto n = static_cast<long long>(common.size());
      phi[i][j] = dim % 2 == 0 ? n : -n;
    }
  }
  return phi;
}

}  // namespace arrpair::oracle
