#pragma once

#include <map>
#include <vector>

#include "arrpair/arrangement.hpp"

namespace arrpair {

/// A nonempty, strictly increasing set of hyperplane indices (0-based).
struct Simplex {
  std::vector<std::size_t> indices;

  std::size_t dim() const { return indices.size() - 1; }

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// Finite abstract simplicial complex, downward closed.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Takes the given simplices plus all their nonempty faces.
  explicit SimplicialComplex(const std::vector<Simplex>& generators);

  /// -1 for the empty complex.
  int top_dim() const { return static_cast<int>(faces_.size()) - 1; }
  /// Sorted simplices of dimension k (empty when out of range).
  const std::vector<Simplex>& faces(std::size_t k) const;
  std::vector<std::size_t> f_vector() const;
  bool contains(const Simplex& s) const;
  /// Position of s within faces(s.dim()); throws PreconditionError if absent.
  std::size_t index_of(const Simplex& s) const;
  std::vector<Simplex> all_faces() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::vector<Simplex>> faces_;
};

/// Formal rational combination of k-simplices. Zero coefficients are never
/// stored.
class Chain {
 public:
  explicit Chain(std::size_t degree) : degree_(degree) {}

  std::size_t degree() const { return degree_; }
  const std::map<Simplex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Simplex& s) const;
  /// Adds c * s. Throws DimensionError if s has the wrong dimension.
  void add(const Simplex& s, const Rational& c);

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::size_t degree_;
  std::map<Simplex, Rational> terms_;
};

/// <a, b> in the basis where simplices are orthonormal.
Rational inner_product(const Chain& a, const Chain& b);

/// rank of the normals {b_i : i in S} equals |S|.
bool independent(const Arrangement& arr, const std::vector<std::size_t>& subset);

/// Independent subsets of the row matroid of B.
SimplicialComplex independence_complex(const Arrangement& arr);

/// Subsets whose hyperplanes share a common point.
SimplicialComplex nerve_complex(const Arrangement& arr);

/// Simplices present in exactly one of the two complexes.
struct ComplexDifference {
  std::vector<Simplex> only_in_first;
  std::vector<Simplex> only_in_second;

  bool empty() const { return only_in_first.empty() && only_in_second.empty(); }
};
ComplexDifference compare_complexes(const SimplicialComplex& first, const SimplicialComplex& second);

/// Matrix of d_k : C_k -> C_{k-1} in the sorted simplex bases. Entry
/// (tau, sigma) is (-1)^j when tau is sigma without its j-th vertex. For
/// k = 0 the augmented map to the empty simplex (a 1 x f_0 row of ones).
/// Throws PreconditionError unless 0 <= k <= top_dim.
QMatrix boundary_matrix(const SimplicialComplex& K, int k);

/// Boundary of a chain of degree >= 1; throws PreconditionError on degree 0.
Chain boundary(const Chain& c);
/// Sum of the coefficients of a 0-chain: its augmented boundary.
Rational augmentation(const Chain& c);
/// The augmented boundary of c vanishes.
bool is_augmented_cycle(const Chain& c);

/// Reduced Betti numbers over Q for k = 0..top_dim.
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& K);

}  // namespace arrpair
