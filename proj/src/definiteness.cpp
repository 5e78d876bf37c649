#include "arrpair/definiteness.hpp"

#include <utility>

#include "arrpair/errors.hpp"
#include "arrpair/linalg.hpp"

namespace arrpair {

namespace {

// Symmetric elimination: returns P and the diagonal D with P^T S P = diag(D).
struct Congruence {
  QMatrix transform;
  QVector diagonal;
};

Congruence diagonalize(const QMatrix& S) {
  const std::size_t n = S.rows();
  QMatrix A = S;
  QMatrix P = QMatrix::identity(n);

  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < n; ++t) std::swap(A(i, t), A(j, t));
    for (std::size_t t = 0; t < n; ++t) std::swap(A(t, i), A(t, j));
    for (std::size_t t = 0; t < n; ++t) std::swap(P(t, i), P(t, j));
  };
  // Replaces basis vector i by e_i + e_j.
  auto add_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < n; ++t) A(i, t) += A(j, t);
    for (std::size_t t = 0; t < n; ++t) A(t, i) += A(t, j);
    for (std::size_t t = 0; t < n; ++t) P(t, i) += P(t, j);
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && A(j, j) == 0) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < n && A(k, j) == 0) ++j;
        if (j == n) continue;  // row k already vanishes on the remaining block
        add_index(k, j);       // new A(k,k) = 2 A(k,j) != 0
      }
    }
    const Rational pivot = A(k, k);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (A(j, k) == 0) continue;
      const Rational f = A(j, k) / pivot;
      for (std::size_t t = 0; t < n; ++t) A(j, t) -= f * A(k, t);
      for (std::size_t t = 0; t < n; ++t) A(t, j) -= f * A(t, k);
      for (std::size_t t = 0; t < n; ++t) P(t, j) -= f * P(t, k);
    }
  }
  QVector d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = A(k, k);
  return {std::move(P), std::move(d)};
}

// Smallest-valued (resp. largest-valued) vector in {-1,0,1}^n with the
// requested sign, normalized so its first nonzero entry is +1.
std::optional<std::pair<QVector, Rational>> small_witness(const QMatrix& S, int want_sign) {
  const std::size_t n = S.rows();
  std::optional<std::pair<QVector, Rational>> best;
  QVector z(n, Rational(0));
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    int first = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const int digit = static_cast<int>(c % 3) - 1;
      c /= 3;
      z[n - 1 - i] = digit;
    }
    for (const auto& x : z)
      if (x != 0) {
        first = x.sign();
        break;
      }
    if (first != 1) continue;
    const Rational value = quadratic_form(S, z);
    if (value.sign() != want_sign) continue;
    if (!best || (want_sign < 0 ? value < best->second : value > best->second)) best.emplace(z, value);
  }
  return best;
}

constexpr std::size_t kSmallSearchLimit = 8;

}  // namespace

std::string_view to_string(Definiteness verdict) {
  switch (verdict) {
    case Definiteness::PositiveDefinite: return "positive-definite";
    case Definiteness::NegativeDefinite: return "negative-definite";
    case Definiteness::Indefinite: return "indefinite";
    case Definiteness::Degenerate: return "degenerate";
  }
  return "degenerate";
}

Definiteness definiteness_from_string(std::string_view text) {
  for (auto v : {Definiteness::PositiveDefinite, Definiteness::NegativeDefinite, Definiteness::Indefinite,
                 Definiteness::Degenerate}) {
    if (to_string(v) == text) return v;
  }
  throw ParseError("unknown definiteness verdict \"" + std::string(text) + "\"");
}

Inertia inertia(const QMatrix& S) {
  if (!S.is_symmetric()) throw PreconditionError("inertia: matrix is not symmetric");
  Inertia out;
  for (const auto& d : diagonalize(S).diagonal) {
    switch (d.sign()) {
      case 1: ++out.positive; break;
      case -1: ++out.negative; break;
      default: ++out.zero; break;
    }
  }
  return out;
}

DefinitenessCertificate definiteness(const QMatrix& S) {
  if (!S.is_symmetric()) throw PreconditionError("definiteness: matrix is not symmetric");
  const std::size_t n = S.rows();
  DefinitenessCertificate cert;
  for (std::size_t k = 1; k <= n; ++k) cert.leading_minors.push_back(determinant(S.leading(k)));

  bool positive = true;
  bool negative = true;
  for (std::size_t k = 0; k < n; ++k) {
    const int s = cert.leading_minors[k].sign();
    positive = positive && s > 0;
    negative = negative && s == ((k % 2 == 0) ? -1 : 1);
  }
  if (positive) {
    cert.verdict = Definiteness::PositiveDefinite;
    return cert;
  }
  if (negative) {
    cert.verdict = Definiteness::NegativeDefinite;
    return cert;
  }

  const Congruence cg = diagonalize(S);
  std::optional<std::size_t> neg_index, pos_index;
  for (std::size_t k = 0; k < n; ++k) {
    if (!neg_index && cg.diagonal[k] < 0) neg_index = k;
    if (!pos_index && cg.diagonal[k] > 0) pos_index = k;
  }
  if (!neg_index || !pos_index) {
    cert.verdict = Definiteness::Degenerate;
    return cert;
  }

  cert.verdict = Definiteness::Indefinite;
  auto assign = [&](int want, std::size_t index, std::optional<QVector>& witness, std::optional<Rational>& value) {
    if (n <= kSmallSearchLimit) {
      if (auto w = small_witness(S, want)) {
        witness = std::move(w->first);
        value = std::move(w->second);
        return;
      }
    }
    witness = cg.transform.column(index);
    value = quadratic_form(S, *witness);
  };
  assign(-1, *neg_index, cert.negative_witness, cert.negative_value);
  assign(1, *pos_index, cert.positive_witness, cert.positive_value);
  return cert;
}

}  // namespace arrpair
