#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "arrpair/definiteness.hpp"
#include "arrpair/errors.hpp"
#include "arrpair/linalg.hpp"
#include "arrpair/lp.hpp"
#include "oracles.hpp"

using namespace arrpair;

namespace {

QMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<QVector> out;
  for (auto r : rows) {
    QVector v;
    for (long x : r) v.emplace_back(x);
    out.push_back(std::move(v));
  }
  return QMatrix::from_rows(out);
}

QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  QMatrix M(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) M(i, j) = Rational(d(rng), std::uniform_int_distribution<long>(1, 3)(rng));
  return M;
}

QMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  QMatrix S(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) S(i, j) = S(j, i) = d(rng);
  return S;
}

}  // namespace

TEST_CASE("rational strings parse and print canonically") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(Rational(0)) == "0");
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "+3", " 1", "1.5", "1/-2", "--1", "a"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(QMatrix::identity(2)) == 2);
  // TRI's normals as columns
  CHECK(rank(mat({{1, 0, 1}, {0, 1, 1}})) == 2);
  CHECK(rank(QMatrix(3, 4)) == 0);
  CHECK(rank(mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 2);
  CHECK(rank(QMatrix::from_rows({{Rational(1, 2), Rational(1, 3)}, {Rational(3), Rational(2)}})) == 1);
}

TEST_CASE("det_sign examples") {
  CHECK(det_sign(QMatrix::identity(3)) == 1);
  CHECK(det_sign(QMatrix::from_columns({{0, 1}, {1, 1}})) == -1);
  CHECK(det_sign(QMatrix::from_columns({{1, 2, 3}, {1, 2, 3}, {0, 1, 5}})) == 0);
  CHECK_THROWS_AS(det_sign(QMatrix(2, 3)), DimensionError);
}

TEST_CASE("solve_affine examples") {
  // TRI: H1 and H2 meet at the origin
  auto x = solve_affine(mat({{1, 0}, {0, 1}}), {0, 0});
  REQUIRE(x);
  CHECK(*x == QVector{0, 0});
  // FIG1: y = x and y = -x
  x = solve_affine(mat({{-1, 1}, {1, 1}}), {0, 0});
  REQUIRE(x);
  CHECK(*x == QVector{0, 0});
  CHECK_FALSE(solve_affine(mat({{1}, {1}}), {0, 1}));
  CHECK_THROWS_AS(solve_affine(mat({{1, 0}}), {0, 1}), DimensionError);
}

TEST_CASE("nullspace basis is primitive and annihilated") {
  const QMatrix A = mat({{1, 1, 1}});
  const auto basis = nullspace_basis(A);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == QVector{-1, 1, 0});
  CHECK(basis[1] == QVector{-1, 0, 1});
  const QMatrix B = QMatrix::from_rows({{Rational(1, 2), Rational(1, 3), Rational(0)}});
  for (const auto& v : nullspace_basis(B)) {
    CHECK((B * v) == QVector{0});
    for (const auto& x : v) CHECK(boost::multiprecision::denominator(x) == 1);
  }
}

TEST_CASE("definiteness examples") {
  auto pd = definiteness(mat({{2, -1}, {-1, 2}}));
  CHECK(pd.verdict == Definiteness::PositiveDefinite);
  CHECK(pd.leading_minors == std::vector<Rational>{2, 3});

  auto nd = definiteness(mat({{-2, 1}, {1, -2}}));
  CHECK(nd.verdict == Definiteness::NegativeDefinite);
  CHECK(nd.leading_minors == std::vector<Rational>{-2, 3});

  // FIG1's pairing matrix
  auto ind = definiteness(mat({{3, -2, 1, 1}, {-2, 3, 1, 1}, {1, 1, 3, -2}, {1, 1, -2, 3}}));
  CHECK(ind.verdict == Definiteness::Indefinite);
  REQUIRE(ind.negative_witness);
  CHECK(*ind.negative_witness == QVector{1, 1, -1, -1});
  CHECK(*ind.negative_value == -4);

  CHECK(definiteness(mat({{1, 0}, {0, 0}})).verdict == Definiteness::Degenerate);
  CHECK(definiteness(mat({{0, 0}, {0, -1}})).verdict == Definiteness::Degenerate);
  CHECK(definiteness(mat({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}})).verdict == Definiteness::Degenerate);
  // minors (1, 0, -1): the zero leading minor alone does not decide
  CHECK(definiteness(mat({{1, 1, 0}, {1, 1, 1}, {0, 1, 1}})).verdict == Definiteness::Indefinite);
  CHECK(definiteness(mat({{0, 1}, {1, 0}})).verdict == Definiteness::Indefinite);
  CHECK_THROWS_AS(definiteness(mat({{1, 2}, {0, 1}})), PreconditionError);
}

TEST_CASE("property: det_sign and rank agree with exhaustive minors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    // small range so singular matrices are common
    QMatrix M = random_matrix(rng, n, n, -2, 2);
    const Rational det = oracle::leibniz_det(M);
    CHECK(det_sign(M) == det.sign());
    CHECK(determinant(M) == det);
    CHECK((det_sign(M) == 0) == (rank(M) < n));
    QMatrix R = random_matrix(rng, 1 + trial % 3, 1 + (trial / 3) % 4, -1, 1);
    CHECK(rank(R) == oracle::minor_rank(R));
  }
}

TEST_CASE("property: solve_affine solutions satisfy the system") {
  std::mt19937_64 rng(12);
  int solved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    QMatrix M = random_matrix(rng, 1 + trial % 4, 1 + (trial / 4) % 4, -2, 2);
    QVector rhs(M.rows());
    for (auto& x : rhs) x = std::uniform_int_distribution<long>(-3, 3)(rng);
    const auto x = solve_affine(M, rhs);
    if (x) {
      ++solved;
      CHECK(M * *x == rhs);
    } else {
      // inconsistent: rank of the augmented matrix is larger
      QMatrix aug(M.rows(), M.cols() + 1);
      for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) aug(i, j) = M(i, j);
        aug(i, M.cols()) = rhs[i];
      }
      CHECK(oracle::minor_rank(aug) > oracle::minor_rank(M));
    }
  }
  CHECK(solved > 50);
}

TEST_CASE("property: definiteness agrees with brute-force quadratic form values") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + trial % 2;
    QMatrix S = random_symmetric(rng, n, -3, 3);
    if (trial % 3 == 0) {
      // make positive definite candidates common: S^T S + I
      S = S.transpose() * S;
      for (std::size_t i = 0; i < n; ++i) S(i, i) += trial % 2;
    }
    const auto cert = definiteness(S);
    const auto values = oracle::small_vector_values(S);
    bool seen_neg = false, seen_pos = false, seen_zero = false;
    for (const auto& [v, q] : values) {
      seen_neg = seen_neg || q < 0;
      seen_pos = seen_pos || q > 0;
      seen_zero = seen_zero || q == 0;
    }
    INFO("trial " << trial);
    switch (cert.verdict) {
      case Definiteness::PositiveDefinite: CHECK((!seen_neg && !seen_zero)); break;
      case Definiteness::NegativeDefinite: CHECK((!seen_pos && !seen_zero)); break;
      case Definiteness::Indefinite:
        REQUIRE(cert.negative_witness);
        REQUIRE(cert.positive_witness);
        CHECK(quadratic_form(S, *cert.negative_witness) < 0);
        CHECK(quadratic_form(S, *cert.positive_witness) > 0);
        break;
      case Definiteness::Degenerate:
        CHECK(determinant(S) == 0);
        CHECK_FALSE((seen_neg && seen_pos));
        break;
    }
    if (seen_neg && seen_pos) CHECK(cert.verdict == Definiteness::Indefinite);
    // determinism
    CHECK(definiteness(S) == cert);
  }
}

TEST_CASE("simplex: optimum, infeasibility, unboundedness") {
  // max x + y  s.t. x + 2y <= 4, 3x + y <= 6
  auto res = lp::maximize(mat({{1, 2}, {3, 1}}), {4, 6}, {1, 1});
  REQUIRE(res.status == lp::Status::Optimal);
  CHECK(res.value == Rational(14, 5));
  CHECK(res.solution == QVector{Rational(8, 5), Rational(6, 5)});

  // x >= 2 and x <= 1
  CHECK(lp::maximize(mat({{-1}, {1}}), {-2, 1}, {1}).status == lp::Status::Infeasible);
  // max x with only x >= 1
  CHECK(lp::maximize(mat({{-1}}), {-1}, {1}).status == lp::Status::Unbounded);
  // equality via two inequalities with negative rhs: x = 3
  res = lp::maximize(mat({{1}, {-1}}), {3, -3}, {-1});
  REQUIRE(res.status == lp::Status::Optimal);
  CHECK(res.solution == QVector{3});
}

TEST_CASE("simplex: Beale's cycling example terminates under Bland's rule") {
  const QMatrix A = QMatrix::from_rows({
      {Rational(1, 4), Rational(-8), Rational(-1), Rational(9)},
      {Rational(1, 2), Rational(-12), Rational(-1, 2), Rational(3)},
      {Rational(0), Rational(0), Rational(1), Rational(0)},
  });
  const auto res = lp::maximize(A, {0, 0, 1}, {Rational(3, 4), Rational(-20), Rational(1, 2), Rational(-6)});
  REQUIRE(res.status == lp::Status::Optimal);
  CHECK(res.value == Rational(5, 4));
}
