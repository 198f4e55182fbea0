#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "waringlab/forms.hpp"
#include "waringlab/linalg.hpp"
#include "waringlab/rng.hpp"

using namespace waringlab;

namespace {

RatMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, long bound) {
  RatMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Rat(rng.uniform_int(-bound, bound), rng.uniform_int(1, 4));
  return m;
}

RatMatrix identity(Eigen::Index n) {
  RatMatrix m(n, n);
  m.setConstant(Rat(0));
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Rat(1);
  return m;
}

// Cube vectors of points [1 : t : t^2] on the conic x0 x2 = x1^2.
RatMatrix conic_cube_matrix(const std::vector<long>& ts) {
  RatMatrix m(monomial_count(2, 3), static_cast<Eigen::Index>(ts.size()));
  for (std::size_t j = 0; j < ts.size(); ++j) {
    RatVector v(3);
    v(0) = Rat(1);
    v(1) = Rat(ts[j]);
    v(2) = Rat(ts[j] * ts[j]);
    m.col(static_cast<Eigen::Index>(j)) = power(LinVec(v), 3).coefficient_vector();
  }
  return m;
}

}  // namespace

TEST_CASE("rat parsing and canonical form") {
  CHECK(Rat::parse("2/4").str() == "1/2");
  CHECK(Rat::parse("-6/3").str() == "-2");
  CHECK(Rat::parse("0/7").str() == "0");
  CHECK(Rat::parse("5").str() == "5");
  CHECK(Rat::parse("7/-2").str() == "-7/2");
  CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK(Rat(3, -6).str() == "-1/2");
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("rank of small matrices") {
  CHECK(rank(identity(3)) == 3);

  RatMatrix prop(2, 2);
  prop << Rat(1), Rat(2), Rat(2), Rat(4);
  CHECK(rank(prop) == 1);

  RatMatrix zero(3, 4);
  zero.setConstant(Rat(0));
  CHECK(rank(zero) == 0);
}

TEST_CASE("rank of the conic cube matrix is 7 = 8 - kernel dimension") {
  const RatMatrix m = conic_cube_matrix({-3, -2, -1, 0, 1, 2, 3, 4});
  REQUIRE(m.rows() == 10);
  REQUIRE(m.cols() == 8);
  const RatMatrix k = kernel_basis(m);
  CHECK(k.cols() == 1);
  CHECK(rank(m) == 8 - k.cols());
  CHECK(rank(m) == 7);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(identity(4)).cols() == 0);

  RatMatrix row(1, 2);
  row << Rat(1), Rat(1);
  const RatMatrix k = kernel_basis(row);
  REQUIRE(k.cols() == 1);
  // Proportional to (1, -1).
  CHECK(k(0, 0) == -k(1, 0));
  CHECK(!k(0, 0).is_zero());
}

TEST_CASE("kernel of cubes of 5 distinct points on the line has full support") {
  std::vector<long> ts = {0, 1, 2, 3, -1};
  RatMatrix m(4, 5);
  for (std::size_t j = 0; j < ts.size(); ++j) {
    RatVector v(2);
    v(0) = Rat(1);
    v(1) = Rat(ts[j]);
    m.col(static_cast<Eigen::Index>(j)) = power(LinVec(v), 3).coefficient_vector();
  }
  const RatMatrix k = kernel_basis(m);
  REQUIRE(k.cols() == 1);
  for (Eigen::Index i = 0; i < 5; ++i) CHECK(!k(i, 0).is_zero());
}

TEST_CASE("solve_linear") {
  RatVector b(3);
  b << Rat(1, 2), Rat(-3), Rat(7, 5);
  const auto x = solve_linear(identity(3), b);
  REQUIRE(x.has_value());
  CHECK(exact_equal(*x, b));

  RatMatrix row(1, 2);
  row << Rat(1), Rat(1);
  RatVector zero(1);
  zero << Rat(0);
  const auto y = solve_linear(row, zero);
  REQUIRE(y.has_value());
  CHECK((row * *y)(0) == Rat(0));

  // Inconsistent system.
  RatMatrix tall(2, 1);
  tall << Rat(1), Rat(1);
  RatVector rhs(2);
  rhs << Rat(1), Rat(2);
  CHECK(!solve_linear(tall, rhs).has_value());
}

TEST_CASE("solve_linear recovers combine coefficients on the orbit normal form") {
  const int n = 3, r = 3;
  std::vector<LinVec> pts;
  for (int i = 0; i <= n; ++i) {
    RatVector e(n + 1);
    e.setConstant(Rat(0));
    e(i) = Rat(1);
    pts.emplace_back(std::move(e));
  }
  RatVector s(n + 1);
  s.setConstant(Rat(0));
  for (int i = 0; i < r; ++i) s(i) = Rat(1);
  pts.emplace_back(std::move(s));

  const std::vector<Rat> coeffs = {Rat(2), Rat(-1), Rat(1, 3), Rat(5), Rat(7, 2)};
  const Form f = combine(pts, coeffs, 3);

  RatMatrix cubes(monomial_count(n, 3), static_cast<Eigen::Index>(pts.size()));
  for (std::size_t j = 0; j < pts.size(); ++j)
    cubes.col(static_cast<Eigen::Index>(j)) = power(pts[j], 3).coefficient_vector();

  const auto x = solve_linear(cubes, f.coefficient_vector());
  REQUIRE(x.has_value());
  for (std::size_t j = 0; j < coeffs.size(); ++j) CHECK((*x)(static_cast<Eigen::Index>(j)) == coeffs[j]);
}

TEST_CASE("elimination invariants on random matrices") {
  Rng rng(20240517);
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index rows = rng.uniform_int(1, 8);
    const Eigen::Index cols = rng.uniform_int(1, 8);
    const RatMatrix m = random_matrix(rng, rows, cols, 6);

    CHECK(rank(m) == rank(RatMatrix(m.transpose())));

    const RatMatrix k = kernel_basis(m);
    CHECK(rank(m) + k.cols() == cols);
    if (k.cols() > 0) {
      const RatMatrix prod = m * k;
      for (Eigen::Index i = 0; i < prod.rows(); ++i)
        for (Eigen::Index j = 0; j < prod.cols(); ++j) CHECK(prod(i, j).is_zero());
    }

    RatVector b(rows);
    for (Eigen::Index i = 0; i < rows; ++i) b(i) = Rat(rng.uniform_int(-6, 6));
    RatMatrix aug(rows, cols + 1);
    aug.leftCols(cols) = m;
    aug.col(cols) = b;
    const auto x = solve_linear(m, b);
    CHECK(x.has_value() == (rank(aug) == rank(m)));
    if (x) {
      const RatVector residual = m * *x - b;
      for (Eigen::Index i = 0; i < rows; ++i) CHECK(residual(i).is_zero());
    }
  }
}

TEST_CASE("inverse") {
  Rng rng(7);
  int tested = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = rng.uniform_int(1, 6);
    RatMatrix m = random_matrix(rng, n, n, 5);
    if (!is_invertible(m)) continue;
    const RatMatrix inv = inverse(m);
    CHECK(exact_equal(RatMatrix(m * inv), identity(n)));
    ++tested;
  }
  CHECK(tested > 10);
  RatMatrix sing(2, 2);
  sing << Rat(1), Rat(2), Rat(2), Rat(4);
  CHECK_THROWS_AS(inverse(sing), std::domain_error);
}
