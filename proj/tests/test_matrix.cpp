#include "support.hpp"

#include "braidrep/errors.hpp"
#include "braidrep/matrix.hpp"

using namespace braidrep;
using braidrep::test::cofactor_det;
using braidrep::test::random_matrix;

namespace {
const LaurentPoly t = LaurentPoly::t();
Matrix<LaurentPoly> sigma_block() { return {{0, t}, {1, 0}}; }
}  // namespace

TEST_CASE("matrix: products") {
  CHECK(sigma_block() * sigma_block() == Matrix<LaurentPoly>{{t, 0}, {0, t}});
  Sampler rng(21);
  const auto m = random_matrix(rng, 3, 3);
  CHECK(Matrix<Rational>::identity(3) * m == m);
  CHECK(m * Matrix<Rational>::identity(3) == m);
  CHECK_THROWS_AS(random_matrix(rng, 2, 3) * random_matrix(rng, 2, 3), ShapeMismatch);
  for (int k = 0; k < 50; ++k) {
    const LaurentPoly a = rng.laurent(), c = rng.laurent();
    const Matrix<LaurentPoly> tau{{a, c * t}, {c, a}};
    CHECK(sigma_block() * tau == tau * sigma_block());
  }
  for (int k = 0; k < 50; ++k) {
    const auto a = random_matrix(rng, 3, 4), b = random_matrix(rng, 4, 2), c = random_matrix(rng, 2, 3);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("matrix: determinants") {
  Sampler rng(22);
  const LaurentPoly a = LaurentPoly::parse("1+t"), c = LaurentPoly(2);
  CHECK(mat_det(Matrix<LaurentPoly>{{a, c * t}, {c, a}}) == a * a - t * c * c);
  CHECK(mat_det(Matrix<LaurentPoly>::identity(4)) == LaurentPoly(1));
  CHECK(mat_det(sigma_block()) == -t);
  CHECK_THROWS_AS(mat_det(Matrix<Rational>(2, 3)), NotSquare);

  for (int k = 0; k < 60; ++k) {
    const auto x = random_matrix(rng, 4, 4), y = random_matrix(rng, 4, 4);
    REQUIRE(mat_det(x * y) == mat_det(x) * mat_det(y));
    REQUIRE(mat_det(x) == cofactor_det(x));
  }
  for (int k = 0; k < 30; ++k) {
    Matrix<LaurentPoly> x(3, 3), y(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        x(i, j) = rng.laurent(2, 2, 3);
        y(i, j) = rng.laurent(2, 2, 3);
      }
    REQUIRE(mat_det(x * y) == mat_det(x) * mat_det(y));
    REQUIRE(mat_det(x) == cofactor_det(x));
  }
}

TEST_CASE("matrix: inverses") {
  const auto inv = mat_inverse(sigma_block());
  CHECK(inv == Matrix<LaurentPoly>{{0, 1}, {LaurentPoly::t(-1), 0}});
  CHECK(inv * sigma_block() == Matrix<LaurentPoly>::identity(2));
  CHECK(mat_inverse(Matrix<LaurentPoly>::identity(3)) == Matrix<LaurentPoly>::identity(3));
  CHECK_THROWS_AS(mat_inverse(Matrix<LaurentPoly>{{1, t}, {1, 1}}), NotUnitDeterminant);
  CHECK_THROWS_AS(mat_inverse(Matrix<Rational>{{1, 2}, {2, 4}}), NotInvertible);

  Sampler rng(23);
  for (int k = 0; k < 50; ++k) {
    const auto x = random_matrix(rng, 4, 4);
    if (sgn(mat_det(x)) == 0) continue;
    const auto xi = mat_inverse(x);
    REQUIRE(x * xi == Matrix<Rational>::identity(4));
    REQUIRE(xi * x == Matrix<Rational>::identity(4));
  }
}

TEST_CASE("matrix: rank and nullspace") {
  const RationalFunction tt(LaurentPoly::t());
  CHECK(mat_rank(Matrix<RationalFunction>{{0, tt}, {1, 0}}) == 2);
  CHECK(mat_rank(Matrix<Rational>(3, 3)) == 0);
  CHECK(mat_rank(Matrix<Rational>{{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}}) == 2);
  CHECK(mat_nullspace(Matrix<Rational>::identity(3)).dimension() == 0);
  CHECK(mat_nullspace(Matrix<Rational>(3, 3)).dimension() == 3);

  Sampler rng(24);
  for (int k = 0; k < 100; ++k) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 5)), cols = static_cast<std::size_t>(rng.uniform(1, 6));
    auto x = random_matrix(rng, rows, cols, 2);
    if (k % 3 == 0 && rows > 1)
      for (std::size_t j = 0; j < cols; ++j) x(rows - 1, j) = x(0, j) * 2;
    const auto ns = mat_nullspace(x);
    REQUIRE(mat_rank(x) + ns.dimension() == cols);
    for (const auto& v : ns.basis)
      for (const auto& e : mat_apply(x, v)) REQUIRE(sgn(e) == 0);
    if (ns.dimension() > 0) REQUIRE(mat_rank(ns.as_columns()) == ns.dimension());
  }
}

TEST_CASE("matrix: block embedding") {
  CHECK(block_embed(sigma_block(), 1, 2) == sigma_block());
  const Matrix<LaurentPoly> expect{{1, 0, 0, 0}, {0, 0, t, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
  CHECK(block_embed(sigma_block(), 2, 4) == expect);
  CHECK_THROWS_AS(block_embed(sigma_block(), 0, 4), IndexOutOfRange);
  CHECK_THROWS_AS(block_embed(sigma_block(), 4, 4), IndexOutOfRange);

  Sampler rng(25);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(4, 7));
    const auto i = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n) - 3));
    const auto j = static_cast<std::size_t>(rng.uniform(static_cast<long>(i) + 2, static_cast<long>(n) - 1));
    const auto b = random_matrix(rng, 2, 2), c = random_matrix(rng, 2, 2);
    const auto x = block_embed(b, i, n), y = block_embed(c, j, n);
    REQUIRE(x * y == y * x);
  }
}
