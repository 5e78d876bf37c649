#include "arrpair/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "arrpair/detail/combinations.hpp"
#include "arrpair/errors.hpp"
#include "arrpair/linalg.hpp"
#include "arrpair/lp.hpp"

namespace arrpair {

Sign sign_of(const Rational& value) { return static_cast<Sign>(value.sign()); }

char to_char(Sign s) {
  switch (s) {
    case Sign::Negative: return '-';
    case Sign::Zero: return '0';
    case Sign::Positive: return '+';
  }
  return '?';
}

std::string to_string(const SignVector& signs) {
  std::string out;
  out.reserve(signs.size());
  for (auto s : signs) out.push_back(to_char(s));
  return out;
}

SignVector sign_vector_from_string(const std::string& text) {
  SignVector out;
  for (char c : text) {
    switch (c) {
      case '-': out.push_back(Sign::Negative); break;
      case '0': out.push_back(Sign::Zero); break;
      case '+': out.push_back(Sign::Positive); break;
      default: throw ParseError("bad sign symbol '" + std::string(1, c) + "'");
    }
  }
  return out;
}

Arrangement::Arrangement(std::size_t ambient_dim, std::vector<Hyperplane> hyperplanes)
    : ambient_dim_(ambient_dim), hyperplanes_(std::move(hyperplanes)) {
  if (ambient_dim_ == 0) throw PreconditionError("ambient dimension must be at least 1");
  if (hyperplanes_.empty()) throw PreconditionError("arrangement needs at least one hyperplane");
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    const auto& h = hyperplanes_[i];
    if (h.normal.size() != ambient_dim_)
      throw PreconditionError("normal at index " + std::to_string(i + 1) + " has length " +
                              std::to_string(h.normal.size()) + ", expected " + std::to_string(ambient_dim_));
    if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& x) { return x == 0; }))
      throw PreconditionError("zero normal at index " + std::to_string(i + 1));
  }
}

QMatrix Arrangement::normal_matrix() const {
  QMatrix B(size(), ambient_dim_);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < ambient_dim_; ++j) B(i, j) = hyperplanes_[i].normal[j];
  return B;
}

QMatrix Arrangement::normals(const std::vector<std::size_t>& indices) const {
  QMatrix B(indices.size(), ambient_dim_);
  for (std::size_t r = 0; r < indices.size(); ++r)
    for (std::size_t j = 0; j < ambient_dim_; ++j) B(r, j) = hyperplanes_.at(indices[r]).normal[j];
  return B;
}

SignVector Arrangement::sign_vector(const QVector& x) const {
  SignVector out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = sign_of(hyperplanes_[i].evaluate(x));
  return out;
}

std::vector<std::size_t> Face::zero_set() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (signs[i] == Sign::Zero) out.push_back(i);
  return out;
}

std::size_t BoundedComplex::face_count(std::size_t dim) const {
  return dim < faces_by_dim.size() ? faces_by_dim[dim].size() : 0;
}

long long BoundedComplex::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < faces_by_dim.size(); ++k) {
    const auto n = static_cast<long long>(faces_by_dim[k].size());
    chi += (k % 2 == 0) ? n : -n;
  }
  return chi;
}

std::vector<const Face*> BoundedComplex::gamma_faces() const {
  std::vector<const Face*> out;
  for (std::size_t k = 0; k + 1 < faces_by_dim.size(); ++k)
    for (const auto& f : faces_by_dim[k]) out.push_back(&f);
  return out;
}

std::vector<Vertex> BoundedComplex::vertices_of(const Face& face) const {
  std::vector<Vertex> out;
  out.reserve(face.vertex_ids.size());
  for (auto id : face.vertex_ids) out.push_back(vertices.at(id));
  return out;
}

namespace {

// Free variables are split as x = x+ - x-; the LP variables are
// (x+, x-, t) and t is the common slack of all strict constraints.
std::optional<QVector> feasible_prefix(const Arrangement& arr, const SignVector& signs) {
  const std::size_t m = arr.ambient_dim();
  const std::size_t t = 2 * m;
  std::vector<QVector> rows;
  QVector rhs;
  auto add_row = [&](const QVector& normal, int normal_sign, bool strict, const Rational& bound) {
    QVector row(2 * m + 1);
    for (std::size_t j = 0; j < m; ++j) {
      row[j] = normal_sign * normal[j];
      row[m + j] = -normal_sign * normal[j];
    }
    if (strict) row[t] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(bound);
  };
  for (std::size_t i = 0; i < signs.size(); ++i) {
    const Hyperplane& h = arr.hyperplane(i);
    switch (signs[i]) {
      case Sign::Positive:  // b.x + psi >= t
        add_row(h.normal, -1, true, h.offset);
        break;
      case Sign::Negative:  // b.x + psi <= -t
        add_row(h.normal, 1, true, -h.offset);
        break;
      case Sign::Zero:
        add_row(h.normal, 1, false, -h.offset);
        add_row(h.normal, -1, false, h.offset);
        break;
    }
  }
  QVector cap(2 * m + 1);
  cap[t] = 1;
  rows.push_back(cap);
  rhs.push_back(1);

  QVector objective(2 * m + 1);
  objective[t] = 1;
  const auto res = lp::maximize(QMatrix::from_rows(rows), rhs, objective);
  if (res.status != lp::Status::Optimal || res.value <= 0) return std::nullopt;
  QVector x(m);
  for (std::size_t j = 0; j < m; ++j) x[j] = res.solution[j] - res.solution[m + j];
  return x;
}

bool prefix_matches(const Arrangement& arr, const SignVector& signs, const QVector& x) {
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (sign_of(arr.hyperplane(i).evaluate(x)) != signs[i]) return false;
  return true;
}

// The recession cone {y : b_i.y = 0 on zeros, sign_i * b_i.y >= 0 otherwise}
// is pointed when the normals have full rank, so it is nonzero iff it holds
// an extreme ray. Extreme rays span the common kernel of m-1 independent
// normals: their sign vectors are the cocircuits, computed once.
class RecessionTest {
 public:
  explicit RecessionTest(const Arrangement& arr) : full_rank_(rank(arr.normal_matrix()) == arr.ambient_dim()) {
    if (!full_rank_) return;
    const std::size_t m = arr.ambient_dim();
    std::set<SignVector> found;
    auto add_ray = [&](const QVector& y) {
      SignVector tau(arr.size());
      for (std::size_t i = 0; i < arr.size(); ++i) tau[i] = sign_of(dot(arr.hyperplane(i).normal, y));
      SignVector neg = tau;
      for (auto& x : neg) x = static_cast<Sign>(-static_cast<int>(x));
      found.insert(std::move(tau));
      found.insert(std::move(neg));
    };
    if (m == 1) {
      add_ray(QVector{1});
    } else {
      detail::for_each_combination(arr.size(), m - 1, [&](const std::vector<std::size_t>& subset) {
        const auto kernel = nullspace_basis(arr.normals(subset));
        if (kernel.size() == 1) add_ray(kernel.front());
      });
    }
    cocircuits_.assign(found.begin(), found.end());
  }

  bool bounded(const SignVector& signs) const {
    if (!full_rank_) return false;
    for (const auto& tau : cocircuits_) {
      bool conforms = true;
      for (std::size_t i = 0; i < tau.size() && conforms; ++i)
        conforms = tau[i] == Sign::Zero || tau[i] == signs[i];
      if (conforms) return false;
    }
    return true;
  }

 private:
  bool full_rank_;
  std::vector<SignVector> cocircuits_;
};

std::size_t face_dimension(const Arrangement& arr, const SignVector& signs) {
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (signs[i] == Sign::Zero) zeros.push_back(i);
  return arr.ambient_dim() - rank(arr.normals(zeros));
}

// Vertex v lies in the closed polyhedron where each hyperplane i is allowed
// the signs {0, allowed[i]} (allowed[i] == Zero means equality).
bool satisfies_weak(const Vertex& v, const SignVector& allowed) {
  for (std::size_t i = 0; i < allowed.size(); ++i)
    if (v.signs[i] != Sign::Zero && v.signs[i] != allowed[i]) return false;
  return true;
}

bool lex_less(const SignVector& a, const SignVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](Sign x, Sign y) {
    return static_cast<int>(x) < static_cast<int>(y);
  });
}

struct FeasibleFace {
  SignVector signs;
  QVector sample;
};

// Directions of the flat cut out by the zero entries of `prefix`.
std::vector<QVector> flat_directions(const Arrangement& arr, const SignVector& prefix) {
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (prefix[i] == Sign::Zero) zeros.push_back(i);
  if (!zeros.empty()) return nullspace_basis(arr.normals(zeros));
  std::vector<QVector> basis;
  for (std::size_t j = 0; j < arr.ambient_dim(); ++j) {
    QVector e(arr.ambient_dim());
    e[j] = 1;
    basis.push_back(std::move(e));
  }
  return basis;
}

// base + eps * d for some eps > 0 small enough that every nonzero entry of
// `prefix` keeps its sign. d must lie in the flat of the prefix.
QVector nudge(const Arrangement& arr, const SignVector& prefix, const QVector& base, const QVector& d) {
  Rational eps = 1;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] == Sign::Zero) continue;
    const Rational value = arr.hyperplane(i).evaluate(base);
    const Rational slope = dot(arr.hyperplane(i).normal, d);
    if (slope.sign() * value.sign() < 0) eps = std::min(eps, Rational(-value / slope / 2));
  }
  QVector x = base;
  for (std::size_t j = 0; j < x.size(); ++j) x[j] += eps * d[j];
  return x;
}

// `witness` realizes `prefix`. A face is relatively open in its flat, so if
// the next hyperplane is not constant on the flat, the face meets it iff it
// has points on both sides; one LP (for the zero child) decides both.
void extend(const Arrangement& arr, SignVector& prefix, const QVector& witness, std::vector<FeasibleFace>& out) {
  const std::size_t k = prefix.size();
  if (k == arr.size()) {
    out.push_back({prefix, witness});
    return;
  }
  const Hyperplane& h = arr.hyperplane(k);
  std::optional<QVector> children[3];  // indexed by sign + 1
  auto slot = [&](Sign s) -> std::optional<QVector>& { return children[static_cast<int>(s) + 1]; };

  const Sign here = sign_of(h.evaluate(witness));
  slot(here) = witness;
  const auto directions = flat_directions(arr, prefix);
  const QVector* crossing = nullptr;
  for (const auto& d : directions)
    if (dot(h.normal, d) != 0) crossing = &d;
  if (crossing) {
    if (here == Sign::Zero) {
      QVector d = *crossing;
      const QVector a = nudge(arr, prefix, witness, d);
      for (auto& x : d) x = -x;
      const QVector b = nudge(arr, prefix, witness, d);
      slot(sign_of(h.evaluate(a))) = a;
      slot(sign_of(h.evaluate(b))) = b;
    } else {
      prefix.push_back(Sign::Zero);
      auto on = feasible_prefix(arr, prefix);
      prefix.pop_back();
      if (on) {
        QVector d = *on;
        for (std::size_t j = 0; j < d.size(); ++j) d[j] -= witness[j];
        slot(Sign::Zero) = *on;
        slot(here == Sign::Positive ? Sign::Negative : Sign::Positive) = nudge(arr, prefix, *on, d);
      }
    }
  }
  for (Sign s : {Sign::Negative, Sign::Zero, Sign::Positive}) {
    if (!slot(s)) continue;
    prefix.push_back(s);
    extend(arr, prefix, *slot(s), out);
    prefix.pop_back();
  }
}

BoundedComplex assemble(const Arrangement& arr, const std::vector<FeasibleFace>& feasible_faces, RegionOrder order) {
  const std::size_t m = arr.ambient_dim();
  BoundedComplex bc;
  bc.ambient_dim = m;
  bc.vertices = vertices(arr);
  bc.faces_by_dim.resize(m + 1);

  const RecessionTest recession(arr);
  for (const auto& ff : feasible_faces) {
    if (!recession.bounded(ff.signs)) continue;
    Face face;
    face.signs = ff.signs;
    face.dim = face_dimension(arr, ff.signs);
    face.sample = ff.sample;
    for (std::size_t v = 0; v < bc.vertices.size(); ++v)
      if (satisfies_weak(bc.vertices[v], ff.signs)) face.vertex_ids.push_back(v);
    bc.faces_by_dim[face.dim].push_back(std::move(face));
  }
  for (auto& faces : bc.faces_by_dim)
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) { return lex_less(a.signs, b.signs); });

  for (const auto& f : bc.faces_by_dim[m]) bc.regions.push_back(Region{f});
  if (order == RegionOrder::Input) {
    auto centroid = [&](const Region& r) {
      QVector c(m);
      for (auto id : r.face.vertex_ids)
        for (std::size_t j = 0; j < m; ++j) c[j] += bc.vertices[id].point[j];
      for (auto& x : c) x /= static_cast<long>(r.face.vertex_ids.size());
      return c;
    };
    std::stable_sort(bc.regions.begin(), bc.regions.end(),
                     [&](const Region& a, const Region& b) { return centroid(a) < centroid(b); });
  }
  return bc;
}

}  // namespace

std::optional<QVector> feasible(const Arrangement& arr, const SignVector& signs) {
  if (signs.size() > arr.size()) throw DimensionError("feasible: sign vector longer than arrangement");
  auto x = feasible_prefix(arr, signs);
  if (x && !prefix_matches(arr, signs, *x)) throw std::logic_error("feasible: LP witness has wrong signs");
  return x;
}

bool is_bounded(const Arrangement& arr, const SignVector& signs) {
  if (signs.size() != arr.size()) throw DimensionError("is_bounded: sign vector length differs from s");
  if (!feasible(arr, signs)) throw PreconditionError("is_bounded: sign vector " + to_string(signs) + " is infeasible");
  return RecessionTest(arr).bounded(signs);
}

std::vector<Vertex> vertices(const Arrangement& arr) {
  const std::size_t m = arr.ambient_dim();
  std::map<QVector, Vertex> found;
  detail::for_each_combination(arr.size(), m, [&](const std::vector<std::size_t>& subset) {
    const QMatrix N = arr.normals(subset);
    if (det_sign(N) == 0) return;
    QVector rhs(m);
    for (std::size_t r = 0; r < m; ++r) rhs[r] = -arr.hyperplane(subset[r]).offset;
    auto x = solve_affine(N, rhs);
    if (!x || found.count(*x)) return;
    Vertex v;
    v.point = *x;
    v.signs = arr.sign_vector(v.point);
    for (std::size_t i = 0; i < arr.size(); ++i)
      if (v.signs[i] == Sign::Zero) v.incident.push_back(i);
    found.emplace(v.point, std::move(v));
  });
  std::vector<Vertex> out;
  out.reserve(found.size());
  for (auto& [point, v] : found) out.push_back(std::move(v));
  return out;
}

BoundedComplex bounded_complex(const Arrangement& arr, RegionOrder order) {
  std::vector<FeasibleFace> faces;
  SignVector prefix;
  extend(arr, prefix, QVector(arr.ambient_dim()), faces);
  return assemble(arr, faces, order);
}

BoundedComplex bounded_complex_exhaustive(const Arrangement& arr, RegionOrder order) {
  std::vector<FeasibleFace> faces;
  std::size_t total = 1;
  for (std::size_t i = 0; i < arr.size(); ++i) total *= 3;
  SignVector signs(arr.size());
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = arr.size(); i-- > 0;) {
      signs[i] = static_cast<Sign>(static_cast<int>(c % 3) - 1);
      c /= 3;
    }
    if (auto x = feasible(arr, signs)) faces.push_back({signs, *x});
  }
  return assemble(arr, faces, order);
}

std::optional<ClosureIntersection> closure_intersection(const BoundedComplex& complex, const Region& a,
                                                        const Region& b) {
  const std::size_t s = a.face.signs.size();
  SignVector allowed(s);
  for (std::size_t i = 0; i < s; ++i) allowed[i] = a.face.signs[i] == b.face.signs[i] ? a.face.signs[i] : Sign::Zero;

  ClosureIntersection out;
  for (const auto& v : complex.vertices)
    if (satisfies_weak(v, allowed)) out.vertices.push_back(v);
  if (out.vertices.empty()) return std::nullopt;

  // The intersection is a bounded polytope, the hull of its vertices.
  std::vector<QVector> diffs;
  for (std::size_t k = 1; k < out.vertices.size(); ++k) {
    QVector d = out.vertices[k].point;
    for (std::size_t j = 0; j < d.size(); ++j) d[j] -= out.vertices[0].point[j];
    diffs.push_back(std::move(d));
  }
  out.dim = diffs.empty() ? 0 : rank(QMatrix::from_rows(diffs));
  return out;
}

bool is_simple(const Arrangement& arr) {
  const auto vs = vertices(arr);
  return std::all_of(vs.begin(), vs.end(), [&](const Vertex& v) { return v.incident.size() == arr.ambient_dim(); });
}

bool is_simple(const BoundedComplex& complex) {
  return std::all_of(complex.vertices.begin(), complex.vertices.end(),
                     [&](const Vertex& v) { return v.incident.size() == complex.ambient_dim; });
}

bool is_coloop_free(const Arrangement& arr) {
  const std::size_t full = rank(arr.normal_matrix());
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    rest.clear();
    for (std::size_t j = 0; j < arr.size(); ++j)
      if (j != i) rest.push_back(j);
    if (rank(arr.normals(rest)) != full) return false;
  }
  return true;
}

Arrangement gale_arrangement_from_lift(const QMatrix& A, const QVector& psi) {
  if (psi.size() != A.cols()) throw DimensionError("gale: lift length differs from the number of columns of A");
  if (rank(A) != A.rows())
    throw DegenerateInput("gale: A has rank " + std::to_string(rank(A)) + " < d = " + std::to_string(A.rows()));
  const auto kernel = nullspace_basis(A);
  if (kernel.empty()) throw DegenerateInput("gale: A has trivial kernel (n = d), no arrangement");
  const QMatrix B = QMatrix::from_columns(kernel);
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < B.rows(); ++i) hs.push_back({B.row(i), psi[i]});
  return Arrangement(B.cols(), std::move(hs));
}

Arrangement gale_arrangement(const QMatrix& A, const QVector& theta) {
  if (theta.size() != A.rows()) throw DimensionError("gale: theta length differs from the number of rows of A");
  if (rank(A) != A.rows())
    throw DegenerateInput("gale: A has rank " + std::to_string(rank(A)) + " < d = " + std::to_string(A.rows()));
  auto psi = solve_affine(A, theta);
  if (!psi) throw InconsistentSystem("gale: A psi = theta has no solution");
  return gale_arrangement_from_lift(A, *psi);
}

}  // namespace arrpair
