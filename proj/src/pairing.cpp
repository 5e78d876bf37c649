#include "arrpair/pairing.hpp"

#include <map>
#include <stdexcept>

#include "arrpair/errors.hpp"
#include "arrpair/linalg.hpp"

namespace arrpair {

namespace {

bool is_face_of(const SignVector& lower, const SignVector& upper) {
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] != Sign::Zero && lower[i] != upper[i]) return false;
  return true;
}

std::string describe(const QVector& point) {
  std::string out = "(";
  for (std::size_t j = 0; j < point.size(); ++j) out += (j ? "," : "") + to_string(point[j]);
  return out + ")";
}

void require_simple(const BoundedComplex& complex, const char* what) {
  for (const auto& v : complex.vertices) {
    if (v.incident.size() != complex.ambient_dim) {
      throw UnsupportedInput(std::string(what) + ": vertex " + describe(v.point) + " lies on " +
                             std::to_string(v.incident.size()) + " hyperplanes, the cycle map needs exactly " +
                             std::to_string(complex.ambient_dim));
    }
  }
}

long long to_int(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1) throw std::logic_error("expected an integer entry");
  return boost::multiprecision::numerator(q).convert_to<long long>();
}

}  // namespace

QMatrix to_qmatrix(const IntMatrix& M) {
  QMatrix Q(M.size(), M.empty() ? 0 : M.front().size());
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M[i].size(); ++j) Q(i, j) = M[i][j];
  return Q;
}

int vertex_orientation(const Arrangement& arr, const Vertex& v) {
  if (v.incident.size() != arr.ambient_dim())
    throw UnsupportedInput("vertex " + describe(v.point) + " is degenerate: orientation undefined");
  // det of the columns equals det of the rows
  return det_sign(arr.normals(v.incident));
}

long long phi(const BoundedComplex& complex, std::size_t i, std::size_t j) {
  const auto sigma = closure_intersection(complex, complex.regions.at(i), complex.regions.at(j));
  if (!sigma) return 0;
  const auto n = static_cast<long long>(sigma->vertices.size());
  return sigma->dim % 2 == 0 ? n : -n;
}

IntMatrix phi_matrix(const BoundedComplex& complex) {
  const std::size_t r = complex.regions.size();
  IntMatrix M(r, std::vector<long long>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) M[i][j] = M[j][i] = phi(complex, i, j);
  return M;
}

int psi_coefficient(const Arrangement& arr, const Region& region, const Vertex& v) {
  int c = vertex_orientation(arr, v);
  for (auto i : v.incident) c *= region.inward_sign(i);
  return c;
}

PsiChain psi(const Arrangement& arr, const BoundedComplex& complex, std::size_t region) {
  require_simple(complex, "psi");
  const Region& F = complex.regions.at(region);
  PsiChain out{region, Chain(arr.ambient_dim() - 1)};
  for (auto id : F.face.vertex_ids) {
    const Vertex& v = complex.vertices[id];
    out.chain.add(Simplex{v.incident}, psi_coefficient(arr, F, v));
  }
  return out;
}

bool is_cycle(const SimplicialComplex& K, const Chain& c) {
  for (const auto& [s, coeff] : c.terms())
    if (!K.contains(s)) throw PreconditionError("is_cycle: chain has a simplex outside the complex");
  return is_augmented_cycle(c);
}

IntMatrix gram_matrix(const Arrangement& arr, const BoundedComplex& complex) {
  require_simple(complex, "gram_matrix");
  const std::size_t r = complex.regions.size();
  std::vector<PsiChain> chains;
  for (std::size_t i = 0; i < r; ++i) chains.push_back(psi(arr, complex, i));
  IntMatrix G(r, std::vector<long long>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) G[i][j] = G[j][i] = to_int(inner_product(chains[i].chain, chains[j].chain));
  return G;
}

std::vector<BoundaryFacet> region_boundary_cycle(const Arrangement& arr, const BoundedComplex& complex,
                                                 std::size_t region) {
  require_simple(complex, "region_boundary_cycle");
  const Region& F = complex.regions.at(region);
  const std::size_t m = arr.ambient_dim();
  std::vector<BoundaryFacet> out;
  for (const auto& facet : complex.faces_by_dim[m - 1]) {
    if (!is_face_of(facet.signs, F.face.signs)) continue;
    const auto zeros = facet.zero_set();
    out.push_back({facet, zeros.front(), F.inward_sign(zeros.front())});
  }
  return out;
}

bool boundary_facets_pair_up(const BoundedComplex& complex, const std::vector<BoundaryFacet>& facets) {
  const std::size_t m = complex.ambient_dim;
  if (m == 1) return facets.size() == 2;
  std::map<SignVector, int> incidence;
  for (const auto& ridge : complex.faces_by_dim[m - 2])
    for (const auto& f : facets)
      if (is_face_of(ridge.signs, f.facet.signs)) ++incidence[ridge.signs];
  if (incidence.empty()) return false;
  for (const auto& [signs, count] : incidence)
    if (count != 2) return false;
  return true;
}

std::string_view to_string(TheoremVerdict verdict) {
  switch (verdict) {
    case TheoremVerdict::Verified: return "verified";
    case TheoremVerdict::HypothesesNotMet: return "hypotheses-not-met";
    case TheoremVerdict::Failed: return "failed";
  }
  return "failed";
}

TheoremVerdict theorem_verdict_from_string(std::string_view text) {
  for (auto v : {TheoremVerdict::Verified, TheoremVerdict::HypothesesNotMet, TheoremVerdict::Failed})
    if (to_string(v) == text) return v;
  throw ParseError("unknown theorem verdict \"" + std::string(text) + "\"");
}

VerificationReport verify(const Arrangement& arr, RegionOrder order) {
  const std::size_t m = arr.ambient_dim();
  const BoundedComplex bc = bounded_complex(arr, order);
  const std::size_t r = bc.regions.size();

  VerificationReport rep;
  rep.ambient_dim = m;
  rep.hyperplane_count = arr.size();
  rep.region_count = r;
  rep.is_simple = is_simple(bc);
  rep.is_coloop_free = is_coloop_free(arr);

  const SimplicialComplex N = independence_complex(arr);
  const auto ranks = reduced_homology_ranks(N);
  rep.homology_rank_top = m - 1 < ranks.size() ? ranks[m - 1] : 0;
  rep.rank_matches_r = rep.homology_rank_top == r;

  if (!rep.is_simple) rep.notes.emplace_back("arrangement is not simple: some vertex lies on more than m hyperplanes");
  if (!rep.is_coloop_free) rep.notes.emplace_back("normal matrix has a coloop");
  if (r == 0) {
    rep.notes.emplace_back("no bounded regions");
    rep.theorem_verdict = TheoremVerdict::HypothesesNotMet;
    return rep;
  }

  rep.phi = phi_matrix(bc);
  const QMatrix Phi = to_qmatrix(rep.phi);
  rep.phi_definiteness = definiteness(Phi);
  rep.definiteness = m % 2 == 0 ? rep.phi_definiteness : definiteness(-Phi);

  if (rep.is_simple) {
    std::vector<PsiChain> chains;
    for (std::size_t i = 0; i < r; ++i) chains.push_back(psi(arr, bc, i));
    rep.gram = gram_matrix(arr, bc);

    const long long sign = m % 2 == 0 ? 1 : -1;
    rep.identity_holds = true;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (rep.phi[i][j] != sign * (*rep.gram)[i][j]) rep.identity_holds = false;

    rep.psi_cycles = true;
    for (const auto& c : chains) rep.psi_cycles = rep.psi_cycles && is_cycle(N, c.chain);

    const auto& top = N.faces(m - 1);
    QMatrix coeffs(r, top.size());
    for (std::size_t i = 0; i < r; ++i)
      for (const auto& [s, c] : chains[i].chain.terms()) coeffs(i, N.index_of(s)) = c;
    rep.psi_rank = rank(coeffs);
    rep.psi_independent = rep.psi_rank == r;
  }

  if (!rep.is_simple || !rep.is_coloop_free) {
    rep.theorem_verdict = TheoremVerdict::HypothesesNotMet;
    return rep;
  }
  if (!rep.identity_holds) rep.notes.emplace_back("Phi differs from (-1)^m Gram");
  if (!rep.psi_cycles) rep.notes.emplace_back("a Psi chain has nonzero boundary");
  if (!rep.psi_independent) rep.notes.emplace_back("Psi chains are linearly dependent");
  if (!rep.rank_matches_r) rep.notes.emplace_back("top reduced homology rank differs from r");
  if (rep.definiteness.verdict != Definiteness::PositiveDefinite)
    rep.notes.emplace_back("(-1)^m Phi is not positive definite");
  const bool ok = rep.identity_holds && rep.psi_cycles && rep.psi_independent && rep.rank_matches_r &&
                  rep.definiteness.verdict == Definiteness::PositiveDefinite;
  rep.theorem_verdict = ok ? TheoremVerdict::Verified : TheoremVerdict::Failed;
  return rep;
}

}  // namespace arrpair
