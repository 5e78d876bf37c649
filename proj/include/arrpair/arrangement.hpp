#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrpair/qmatrix.hpp"

namespace arrpair {

enum class Sign : std::int8_t { Negative = -1, Zero = 0, Positive = 1 };

/// One symbol per hyperplane index.
using SignVector = std::vector<Sign>;

Sign sign_of(const Rational& value);
char to_char(Sign s);
/// e.g. "+-0+".
std::string to_string(const SignVector& signs);
SignVector sign_vector_from_string(const std::string& text);

/// The affine hyperplane {x : <normal, x> + offset = 0}.
struct Hyperplane {
  QVector normal;
  Rational offset;

  Rational evaluate(const QVector& x) const { return dot(normal, x) + offset; }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Ordered list of affine hyperplanes in Q^m. The index order is part of
/// the arrangement's identity: orientation signs depend on it.
class Arrangement {
 public:
  /// Throws PreconditionError if m = 0, the list is empty, a normal has the
  /// wrong length, or a normal is zero ("zero normal at index k", 1-based).
  Arrangement(std::size_t ambient_dim, std::vector<Hyperplane> hyperplanes);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const Hyperplane& hyperplane(std::size_t i) const { return hyperplanes_.at(i); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

  /// s-by-m matrix whose rows are the normals.
  QMatrix normal_matrix() const;
  /// Normals of the given hyperplanes as matrix rows.
  QMatrix normals(const std::vector<std::size_t>& indices) const;
  SignVector sign_vector(const QVector& x) const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<Hyperplane> hyperplanes_;
};

/// A 0-dimensional face: a point cut out by m independent hyperplanes.
struct Vertex {
  QVector point;
  /// Sorted indices of every hyperplane through the point.
  std::vector<std::size_t> incident;
  SignVector signs;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// A relatively open face of the arrangement, identified by its sign vector.
struct Face {
  SignVector signs;
  std::size_t dim = 0;
  /// Indices into BoundedComplex::vertices, ascending: the 0-faces of the closure.
  std::vector<std::size_t> vertex_ids;
  /// A point in the relative interior realizing `signs` exactly.
  QVector sample;

  std::vector<std::size_t> zero_set() const;
};

/// A top-dimensional bounded face. Every sign is nonzero and `signs[i]` is
/// the inward orientation of hyperplane i: the normal epsilon_i * b_i points
/// into the region.
struct Region {
  Face face;

  int inward_sign(std::size_t i) const { return static_cast<int>(face.signs.at(i)); }
};

/// The polyhedral complex of bounded faces.
struct BoundedComplex {
  std::size_t ambient_dim = 0;
  /// Every vertex of the arrangement (all of them are bounded faces), sorted
  /// lexicographically by coordinates.
  std::vector<Vertex> vertices;
  /// faces_by_dim[k]: bounded faces of dimension k, ordered by sign vector.
  std::vector<std::vector<Face>> faces_by_dim;
  /// The dim-m faces F_1..F_r in the chosen region order.
  std::vector<Region> regions;

  std::size_t face_count(std::size_t dim) const;
  /// Alternating face count; 1 whenever the complex is nonempty.
  long long euler_characteristic() const;
  /// The faces of dimension < m: the complex with the open regions removed.
  std::vector<const Face*> gamma_faces() const;
  std::vector<Vertex> vertices_of(const Face& face) const;
};

/// Region ordering. `Lex` compares sign vectors with - < 0 < +. `Input`
/// compares region centroids coordinate by coordinate, which depends only on
/// the geometry and not on the orientation of the stored normals.
enum class RegionOrder { Lex, Input };

/// A point whose sign vector equals `signs` on every index < signs.size(),
/// or nullopt. A shorter sign vector constrains only its prefix.
std::optional<QVector> feasible(const Arrangement& arr, const SignVector& signs);

/// True iff the closure of the face with these signs has recession cone {0}.
/// Throws PreconditionError if the sign vector is infeasible.
bool is_bounded(const Arrangement& arr, const SignVector& signs);

std::vector<Vertex> vertices(const Arrangement& arr);

BoundedComplex bounded_complex(const Arrangement& arr, RegionOrder order = RegionOrder::Lex);

/// Same result as bounded_complex, but screens all 3^s sign vectors instead
/// of pruning infeasible prefixes. Intended for cross-checking.
BoundedComplex bounded_complex_exhaustive(const Arrangement& arr, RegionOrder order = RegionOrder::Lex);

struct ClosureIntersection {
  std::size_t dim = 0;
  std::vector<Vertex> vertices;
};

/// closure(a) and closure(b) as one polyhedron, or nullopt when disjoint.
std::optional<ClosureIntersection> closure_intersection(const BoundedComplex& complex, const Region& a,
                                                        const Region& b);

/// Every vertex lies on exactly m hyperplanes.
bool is_simple(const Arrangement& arr);
bool is_simple(const BoundedComplex& complex);

/// No normal is a coloop of the row matroid of B.
bool is_coloop_free(const Arrangement& arr);

/// Arrangement from toric data: the rows of a primitive integer kernel basis
/// B of A (A B = 0) as normals, and a solution psi of A psi = theta as
/// offsets. Throws DegenerateInput if rank(A) < d or the kernel is trivial,
/// InconsistentSystem if A psi = theta has no solution.
Arrangement gale_arrangement(const QMatrix& A, const QVector& theta);

/// As gale_arrangement, with the lift psi given explicitly. Any two lifts of
/// the same theta give translated arrangements.
Arrangement gale_arrangement_from_lift(const QMatrix& A, const QVector& psi);

}  // namespace arrpair
