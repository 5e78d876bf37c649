#pragma once

#include <random>

#include "arrpair/arrangement.hpp"

namespace arrpair::testing {

inline Hyperplane hp(std::initializer_list<long> normal, long offset) {
  QVector n;
  for (long x : normal) n.emplace_back(x);
  return {n, Rational(offset)};
}

/// x = 0, y = 0, x + y = 1.
inline Arrangement tri() { return Arrangement(2, {hp({1, 0}, 0), hp({0, 1}, 0), hp({1, 1}, -1)}); }

/// Points 0, 1, 2 on a line.
inline Arrangement pts3() { return Arrangement(1, {hp({1}, 0), hp({1}, -1), hp({1}, -2)}); }

/// y = 1, y = -1, y = x, y = -x, x = 0.
inline Arrangement fig1() {
  return Arrangement(2, {hp({0, 1}, -1), hp({0, 1}, 1), hp({-1, 1}, 0), hp({1, 1}, 0), hp({1, 0}, 0)});
}

/// Integer normals and offsets drawn uniformly from [lo, hi]; zero normals
/// are redrawn.
inline Arrangement random_arrangement(std::mt19937_64& rng, std::size_t m, std::size_t s, long lo = -5, long hi = 5) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<Hyperplane> hs;
  while (hs.size() < s) {
    Hyperplane h;
    bool nonzero = false;
    for (std::size_t j = 0; j < m; ++j) {
      h.normal.emplace_back(dist(rng));
      nonzero = nonzero || h.normal.back() != 0;
    }
    h.offset = dist(rng);
    if (nonzero) hs.push_back(std::move(h));
  }
  return Arrangement(m, std::move(hs));
}

inline std::vector<std::size_t> idx(std::initializer_list<std::size_t> one_based) {
  std::vector<std::size_t> out;
  for (auto i : one_based) out.push_back(i - 1);
  return out;
}

}  // namespace arrpair::testing
