#include "arrpair/matroid_nerve.hpp"

#include <algorithm>
#include <set>

#include "arrpair/detail/combinations.hpp"
#include "arrpair/errors.hpp"
#include "arrpair/linalg.hpp"

namespace arrpair {

SimplicialComplex::SimplicialComplex(const std::vector<Simplex>& generators) {
  std::vector<std::set<Simplex>> layers;
  for (const auto& g : generators) {
    if (g.indices.empty()) throw PreconditionError("simplex must be nonempty");
    if (!std::is_sorted(g.indices.begin(), g.indices.end()) ||
        std::adjacent_find(g.indices.begin(), g.indices.end()) != g.indices.end())
      throw PreconditionError("simplex indices must be strictly increasing");
    const std::size_t n = g.indices.size();
    if (layers.size() < n) layers.resize(n);
    // every nonempty subset, by bitmask
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Simplex face;
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (std::size_t{1} << j)) face.indices.push_back(g.indices[j]);
      layers[face.indices.size() - 1].insert(std::move(face));
    }
  }
  for (auto& layer : layers) faces_.emplace_back(layer.begin(), layer.end());
}

const std::vector<Simplex>& SimplicialComplex::faces(std::size_t k) const {
  static const std::vector<Simplex> kEmpty;
  return k < faces_.size() ? faces_[k] : kEmpty;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& layer : faces_) out.push_back(layer.size());
  return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.indices.empty()) return false;
  const auto& layer = faces(s.dim());
  return std::binary_search(layer.begin(), layer.end(), s);
}

std::size_t SimplicialComplex::index_of(const Simplex& s) const {
  if (s.indices.empty()) throw PreconditionError("index_of: empty simplex");
  const auto& layer = faces(s.dim());
  auto it = std::lower_bound(layer.begin(), layer.end(), s);
  if (it == layer.end() || *it != s) throw PreconditionError("simplex not in complex");
  return static_cast<std::size_t>(it - layer.begin());
}

std::vector<Simplex> SimplicialComplex::all_faces() const {
  std::vector<Simplex> out;
  for (const auto& layer : faces_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

Rational Chain::coefficient(const Simplex& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Chain::add(const Simplex& s, const Rational& c) {
  if (s.indices.size() != degree_ + 1) throw DimensionError("chain: simplex has the wrong dimension");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational inner_product(const Chain& a, const Chain& b) {
  if (a.degree() != b.degree()) return 0;
  Rational sum = 0;
  for (const auto& [s, c] : a.terms()) sum += c * b.coefficient(s);
  return sum;
}

Chain boundary(const Chain& c) {
  if (c.degree() == 0) throw PreconditionError("boundary: use augmentation for 0-chains");
  Chain out(c.degree() - 1);
  for (const auto& [s, coeff] : c.terms()) {
    for (std::size_t j = 0; j < s.indices.size(); ++j) {
      Simplex face;
      face.indices.reserve(s.indices.size() - 1);
      for (std::size_t t = 0; t < s.indices.size(); ++t)
        if (t != j) face.indices.push_back(s.indices[t]);
      out.add(face, j % 2 == 0 ? coeff : Rational(-coeff));
    }
  }
  return out;
}

Rational augmentation(const Chain& c) {
  if (c.degree() != 0) throw PreconditionError("augmentation: chain is not of degree 0");
  Rational sum = 0;
  for (const auto& [s, coeff] : c.terms()) sum += coeff;
  return sum;
}

bool is_augmented_cycle(const Chain& c) {
  return c.degree() == 0 ? augmentation(c) == 0 : boundary(c).is_zero();
}

bool independent(const Arrangement& arr, const std::vector<std::size_t>& subset) {
  for (auto i : subset)
    if (i >= arr.size()) throw PreconditionError("independent: index out of range");
  return rank(arr.normals(subset)) == subset.size();
}

namespace {

template <typename Pred>
SimplicialComplex complex_from_predicate(const Arrangement& arr, std::size_t max_size, Pred&& keep) {
  std::vector<Simplex> faces;
  for (std::size_t k = 1; k <= std::min(max_size, arr.size()); ++k) {
    detail::for_each_combination(arr.size(), k, [&](const std::vector<std::size_t>& subset) {
      if (keep(subset)) faces.push_back(Simplex{subset});
    });
  }
  return SimplicialComplex(faces);
}

}  // namespace

SimplicialComplex independence_complex(const Arrangement& arr) {
  return complex_from_predicate(arr, arr.ambient_dim(),
                                [&](const std::vector<std::size_t>& s) { return independent(arr, s); });
}

SimplicialComplex nerve_complex(const Arrangement& arr) {
  return complex_from_predicate(arr, arr.size(), [&](const std::vector<std::size_t>& s) {
    QVector rhs(s.size());
    for (std::size_t r = 0; r < s.size(); ++r) rhs[r] = -arr.hyperplane(s[r]).offset;
    return solve_affine(arr.normals(s), rhs).has_value();
  });
}

ComplexDifference compare_complexes(const SimplicialComplex& first, const SimplicialComplex& second) {
  ComplexDifference d;
  for (const auto& s : first.all_faces())
    if (!second.contains(s)) d.only_in_first.push_back(s);
  for (const auto& s : second.all_faces())
    if (!first.contains(s)) d.only_in_second.push_back(s);
  return d;
}

QMatrix boundary_matrix(const SimplicialComplex& K, int k) {
  if (k < 0 || k > K.top_dim())
    throw PreconditionError("boundary_matrix: degree " + std::to_string(k) + " outside 0.." +
                            std::to_string(K.top_dim()));
  const auto& cols = K.faces(static_cast<std::size_t>(k));
  if (k == 0) {
    QMatrix D(1, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) D(0, c) = 1;
    return D;
  }
  const auto& rows = K.faces(static_cast<std::size_t>(k - 1));
  QMatrix D(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& idx = cols[c].indices;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      Simplex face;
      for (std::size_t t = 0; t < idx.size(); ++t)
        if (t != j) face.indices.push_back(idx[t]);
      D(K.index_of(face), c) = j % 2 == 0 ? 1 : -1;
    }
  }
  return D;
}

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& K) {
  const int top = K.top_dim();
  std::vector<std::size_t> ranks_d(static_cast<std::size_t>(top + 2), 0);  // rank of d_k, k = 0..top+1
  for (int k = 0; k <= top; ++k) ranks_d[static_cast<std::size_t>(k)] = rank(boundary_matrix(K, k));
  std::vector<std::size_t> out;
  for (int k = 0; k <= top; ++k) {
    const std::size_t fk = K.faces(static_cast<std::size_t>(k)).size();
    out.push_back(fk - ranks_d[static_cast<std::size_t>(k)] - ranks_d[static_cast<std::size_t>(k + 1)]);
  }
  return out;
}

}  // namespace arrpair
