#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrpair/qmatrix.hpp"

namespace arrpair {

enum class Definiteness { PositiveDefinite, NegativeDefinite, Indefinite, Degenerate };

std::string_view to_string(Definiteness verdict);
Definiteness definiteness_from_string(std::string_view text);

/// Exact evidence for a definiteness verdict.
///
/// `leading_minors[k]` is the determinant of the leading (k+1)x(k+1) block.
/// A positive (negative) definite verdict is certified by the minors alone.
/// An indefinite verdict also carries witnesses z with z^T S z < 0 and
/// w^T S w > 0. Degenerate means singular and semidefinite.
struct DefinitenessCertificate {
  Definiteness verdict = Definiteness::Degenerate;
  std::vector<Rational> leading_minors;
  std::optional<QVector> negative_witness;
  std::optional<Rational> negative_value;
  std::optional<QVector> positive_witness;
  std::optional<Rational> positive_value;

  friend bool operator==(const DefinitenessCertificate&, const DefinitenessCertificate&) = default;
};

/// Classifies a symmetric matrix. Throws PreconditionError when S is not
/// symmetric.
DefinitenessCertificate definiteness(const QMatrix& S);

/// Signature (positive, negative, zero) counts via exact congruence
/// diagonalization.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};
Inertia inertia(const QMatrix& S);

}  // namespace arrpair
