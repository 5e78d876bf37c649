#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arrpair/arrangement.hpp"
#include "arrpair/definiteness.hpp"
#include "arrpair/matroid_nerve.hpp"

namespace arrpair {

/// Square integer matrix indexed by regions.
using IntMatrix = std::vector<std::vector<long long>>;

QMatrix to_qmatrix(const IntMatrix& M);

/// Sign of det(b_{i_1}, ..., b_{i_m}) with the normals of the incident
/// hyperplanes as columns in increasing index order. Throws UnsupportedInput
/// unless the vertex lies on exactly m hyperplanes.
int vertex_orientation(const Arrangement& arr, const Vertex& v);

/// Intersection pairing of two regions: 0 if their closures are disjoint,
/// otherwise (-1)^dim(sigma) * #vertices(sigma) with sigma the intersection
/// of the closures. Defined for any arrangement. Indices are 0-based and
/// throw std::out_of_range when invalid.
long long phi(const BoundedComplex& complex, std::size_t i, std::size_t j);
IntMatrix phi_matrix(const BoundedComplex& complex);

/// The (m-1)-chain in the independence complex attached to a region.
struct PsiChain {
  std::size_t region = 0;
  Chain chain{0};
};

/// Coefficient of vertex v in Psi(F): o(v) times the product of the inward
/// signs of F at the hyperplanes through v.
int psi_coefficient(const Arrangement& arr, const Region& region, const Vertex& v);

/// Signed sum over the vertices of closure(F) of the simplex of hyperplanes
/// through each vertex. Throws UnsupportedInput on non-simple arrangements.
PsiChain psi(const Arrangement& arr, const BoundedComplex& complex, std::size_t region);

/// The augmented boundary of c vanishes. Throws PreconditionError when c
/// has a simplex outside K.
bool is_cycle(const SimplicialComplex& K, const Chain& c);

/// Entry (i,j) = <Psi(F_i), Psi(F_j)>. Throws UnsupportedInput on non-simple
/// arrangements.
IntMatrix gram_matrix(const Arrangement& arr, const BoundedComplex& complex);

/// One facet of a region's boundary with the inward sign of its supporting
/// hyperplane relative to the stored normal.
struct BoundaryFacet {
  Face facet;
  std::size_t hyperplane = 0;
  int sign = 1;
};

/// The (m-1)-faces of closure(F), each oriented by its inward normal.
/// Throws UnsupportedInput on non-simple arrangements.
std::vector<BoundaryFacet> region_boundary_cycle(const Arrangement& arr, const BoundedComplex& complex,
                                                 std::size_t region);

/// Every (m-2)-face of closure(F) lies in exactly two of the facets (for
/// m = 1 the empty face lies in both endpoints).
bool boundary_facets_pair_up(const BoundedComplex& complex, const std::vector<BoundaryFacet>& facets);

enum class TheoremVerdict { Verified, HypothesesNotMet, Failed };

std::string_view to_string(TheoremVerdict verdict);
TheoremVerdict theorem_verdict_from_string(std::string_view text);

/// Outcome of checking the definiteness theorem on one arrangement.
///
/// Gram, Psi-based checks and `identity_holds` are only computed for simple
/// arrangements; otherwise they stay empty/false. `definiteness` is the
/// certificate for (-1)^m Phi, `phi_definiteness` the one for Phi itself.
struct VerificationReport {
  std::size_t ambient_dim = 0;
  std::size_t hyperplane_count = 0;
  std::size_t region_count = 0;
  bool is_simple = false;
  bool is_coloop_free = false;
  IntMatrix phi;
  std::optional<IntMatrix> gram;
  bool identity_holds = false;
  bool psi_cycles = false;
  bool psi_independent = false;
  std::size_t psi_rank = 0;
  std::size_t homology_rank_top = 0;
  bool rank_matches_r = false;
  DefinitenessCertificate definiteness;
  DefinitenessCertificate phi_definiteness;
  TheoremVerdict theorem_verdict = TheoremVerdict::HypothesesNotMet;
  std::vector<std::string> notes;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Never throws for valid arrangements: failed checks are report fields.
VerificationReport verify(const Arrangement& arr, RegionOrder order = RegionOrder::Lex);

}  // namespace arrpair
