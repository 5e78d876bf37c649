#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "arrpair/errors.hpp"
#include "arrpair/linalg.hpp"
#include "arrpair/pairing.hpp"
#include "fixtures.hpp"

using namespace arrpair;
using namespace arrpair::testing;

namespace {

Simplex S(std::initializer_list<std::size_t> one_based) { return Simplex{idx(one_based)}; }

const IntMatrix kFig1Phi{{3, -2, 1, 1}, {-2, 3, 1, 1}, {1, 1, 3, -2}, {1, 1, -2, 3}};

Arrangement random_simple(std::mt19937_64& rng, std::size_t m, std::size_t s) {
  for (;;) {
    auto arr = random_arrangement(rng, m, s);
    if (is_simple(arr) && is_coloop_free(arr) && !bounded_complex(arr).regions.empty()) return arr;
  }
}

}  // namespace

TEST_CASE("phi examples") {
  const auto t = bounded_complex(tri());
  CHECK(phi(t, 0, 0) == 3);
  const auto p = bounded_complex(pts3());
  CHECK(phi(p, 0, 1) == 1);
  CHECK(phi(p, 0, 0) == -2);
  // regions[2] and regions[3] share an edge; regions[2] and regions[1] only the origin
  const auto f = bounded_complex(fig1());
  CHECK(phi(f, 2, 3) == -2);
  CHECK(phi(f, 2, 1) == 1);
  CHECK_THROWS_AS(phi(f, 0, 4), std::out_of_range);
}

TEST_CASE("phi matrices of the fixtures") {
  CHECK(phi_matrix(bounded_complex(tri())) == IntMatrix{{3}});
  CHECK(phi_matrix(bounded_complex(pts3())) == IntMatrix{{-2, 1}, {1, -2}});
  CHECK(phi_matrix(bounded_complex(fig1())) == kFig1Phi);
}

TEST_CASE("vertex orientation") {
  const auto bc = bounded_complex(tri());
  // vertices sorted: (0,0), (0,1), (1,0)
  CHECK(vertex_orientation(tri(), bc.vertices[0]) == 1);
  CHECK(vertex_orientation(tri(), bc.vertices[1]) == 1);
  CHECK(vertex_orientation(tri(), bc.vertices[2]) == -1);
  const auto f = bounded_complex(fig1());
  CHECK_THROWS_AS(vertex_orientation(fig1(), f.vertices[3]), UnsupportedInput);
}

TEST_CASE("psi chains") {
  const auto p = bounded_complex(pts3());
  const auto c0 = psi(pts3(), p, 0).chain;
  CHECK(c0.degree() == 0);
  CHECK(c0.coefficient(S({1})) == 1);
  CHECK(c0.coefficient(S({2})) == -1);
  CHECK(c0.terms().size() == 2);
  const auto c1 = psi(pts3(), p, 1).chain;
  CHECK(c1.coefficient(S({2})) == 1);
  CHECK(c1.coefficient(S({3})) == -1);

  const auto t = bounded_complex(tri());
  const auto ct = psi(tri(), t, 0).chain;
  CHECK(ct.coefficient(S({1, 2})) == 1);
  CHECK(ct.coefficient(S({1, 3})) == -1);
  CHECK(ct.coefficient(S({2, 3})) == 1);

  CHECK_THROWS_AS(psi(fig1(), bounded_complex(fig1()), 0), UnsupportedInput);
}

TEST_CASE("is_cycle") {
  const auto K = independence_complex(tri());
  CHECK(is_cycle(K, psi(tri(), bounded_complex(tri()), 0).chain));
  Chain edge(1);
  edge.add(S({1, 2}), 1);
  CHECK_FALSE(is_cycle(K, edge));
  CHECK(is_cycle(K, Chain(1)));
  Chain outside(1);
  outside.add(S({1, 4}), 1);
  CHECK_THROWS_AS(is_cycle(K, outside), PreconditionError);
}

TEST_CASE("gram matrices") {
  CHECK(gram_matrix(tri(), bounded_complex(tri())) == IntMatrix{{3}});
  CHECK(gram_matrix(pts3(), bounded_complex(pts3())) == IntMatrix{{2, -1}, {-1, 2}});
  const Arrangement four(1, {hp({1}, 0), hp({1}, -1), hp({1}, -2), hp({1}, -3)});
  CHECK(gram_matrix(four, bounded_complex(four))[0][2] == 0);
  CHECK_THROWS_AS(gram_matrix(fig1(), bounded_complex(fig1())), UnsupportedInput);
}

TEST_CASE("region boundary cycles") {
  const auto t = bounded_complex(tri());
  const auto facets = region_boundary_cycle(tri(), t, 0);
  REQUIRE(facets.size() == 3);
  std::vector<int> signs(3);
  for (const auto& f : facets) signs[f.hyperplane] = f.sign;
  CHECK(signs == std::vector<int>{1, 1, -1});
  CHECK(boundary_facets_pair_up(t, facets));

  const auto p = bounded_complex(pts3());
  const auto ends = region_boundary_cycle(pts3(), p, 0);
  REQUIRE(ends.size() == 2);
  CHECK(ends[0].hyperplane == 0);
  CHECK(ends[0].sign == 1);
  CHECK(ends[1].hyperplane == 1);
  CHECK(ends[1].sign == -1);
  CHECK(boundary_facets_pair_up(p, ends));

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t m = 2 + trial % 2;
    const auto arr = random_simple(rng, m, m + 2);
    const auto bc = bounded_complex(arr);
    for (std::size_t i = 0; i < bc.regions.size(); ++i) {
      const auto fs = region_boundary_cycle(arr, bc, i);
      CHECK(fs.size() >= m + 1);
      CHECK(boundary_facets_pair_up(bc, fs));
    }
  }
  CHECK_THROWS_AS(region_boundary_cycle(fig1(), bounded_complex(fig1()), 0), UnsupportedInput);
}

TEST_CASE("verify on the fixtures") {
  const auto t = verify(tri());
  CHECK(t.theorem_verdict == TheoremVerdict::Verified);
  CHECK(t.definiteness.verdict == Definiteness::PositiveDefinite);
  CHECK(t.homology_rank_top == 1);

  const auto p = verify(pts3());
  CHECK(p.theorem_verdict == TheoremVerdict::Verified);
  CHECK(p.definiteness.verdict == Definiteness::PositiveDefinite);
  CHECK(p.phi_definiteness.verdict == Definiteness::NegativeDefinite);

  const auto f = verify(fig1());
  CHECK(f.theorem_verdict == TheoremVerdict::HypothesesNotMet);
  CHECK_FALSE(f.gram);
  CHECK(f.phi == kFig1Phi);
  CHECK(f.definiteness.verdict == Definiteness::Indefinite);
  REQUIRE(f.definiteness.negative_witness);
  CHECK(*f.definiteness.negative_witness == QVector{1, 1, -1, -1});
  CHECK(*f.definiteness.negative_value == -4);

  const auto none = verify(Arrangement(2, {hp({1, 0}, 0), hp({0, 1}, 0)}));
  CHECK(none.region_count == 0);
  CHECK(none.theorem_verdict == TheoremVerdict::HypothesesNotMet);
}

TEST_CASE("property: pairing laws on random simple arrangements") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t m = 1 + trial % 3;
    const auto arr = random_simple(rng, m, m + 2 + trial % 2);
    const auto bc = bounded_complex(arr);
    const auto P = phi_matrix(bc);
    const auto G = gram_matrix(arr, bc);
    const long long sign = m % 2 == 0 ? 1 : -1;
    const std::size_t r = bc.regions.size();
    for (std::size_t i = 0; i < r; ++i) {
      CHECK(P[i][i] == sign * static_cast<long long>(bc.regions[i].face.vertex_ids.size()));
      for (std::size_t j = 0; j < r; ++j) {
        CHECK(P[i][j] == P[j][i]);
        CHECK(P[i][j] == sign * G[i][j]);
        const auto sigma = closure_intersection(bc, bc.regions[i], bc.regions[j]);
        if (!sigma) continue;
        const int expected = (m - sigma->dim) % 2 == 0 ? 1 : -1;
        for (const auto& v : sigma->vertices)
          CHECK(psi_coefficient(arr, bc.regions[i], v) * psi_coefficient(arr, bc.regions[j], v) == expected);
      }
    }
    CHECK(verify(arr).theorem_verdict == TheoremVerdict::Verified);
  }
}

TEST_CASE("property: rescaling a hyperplane and translating leave Phi unchanged") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 6; ++trial) {
    const auto arr = random_arrangement(rng, 2, 5);
    const auto base = phi_matrix(bounded_complex(arr));
    auto hs = arr.hyperplanes();
    for (auto& x : hs[trial % 5].normal) x *= Rational(7, 3);
    hs[trial % 5].offset *= Rational(7, 3);
    const QVector c{Rational(1, 2), Rational(-5, 7)};
    for (auto& h : hs) h.offset -= dot(h.normal, c);
    CHECK(phi_matrix(bounded_complex(Arrangement(2, hs))) == base);
  }
}
