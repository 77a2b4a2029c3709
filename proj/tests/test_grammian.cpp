#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "gsigma/error.hpp"
#include "gsigma/grammian.hpp"

using namespace gsigma;

namespace {

const BiPoly sigma = BiPoly::sigma();

Integer fact(int k) {
  Integer r = 1;
  for (int j = 2; j <= k; ++j) r *= j;
  return r;
}

// prod_{k<i} (n-1)! k!/(n-1-k)! sigma^(n-1-2k); the exponent sum is i(n-i).
BiPoly product_oracle(int n, int i) {
  Rational c = 1;
  for (int k = 0; k < i; ++k) c *= Rational(fact(n - 1) * fact(k)) / Rational(fact(n - 1 - k));
  return c * sigma.pow(i * (n - i));
}

}  // namespace

TEST_CASE("small determinants by hand") {
  CHECK(m_det(5, 0).value == 1);
  for (int n = 2; n <= 7; ++n) CHECK(m_det(n, 1).value == sigma.pow(n - 1));
  CHECK(m_det(3, 2).value == 2 * sigma * sigma);
  CHECK(m_det(2, 2).value == 1);  // sigma * (1/sigma)
}

TEST_CASE("determinant product identity against closed-form products") {
  for (int n = 2; n <= 8; ++n) {
    for (int i = 0; i <= n; ++i) {
      CAPTURE(n);
      CAPTURE(i);
      CHECK(mdet_table(n)[i] == product_oracle(n, i));
    }
    CHECK(verify_product_identity(n).all_passed());
    CHECK(verify_product_identity(n).entries.size() == static_cast<std::size_t>(n));
  }
  // n = 6, i = 3: 1 * 5 * 40 sigma^(5+3+1)
  CHECK(m_det(6, 3).value == 200 * sigma.pow(9));
}

TEST_CASE("log-Laplacian of M_i is i(n-i)/sigma^2") {
  CHECK(laplace_log_mdet(6, 3) == 9);
  CHECK(laplace_log_mdet(4, 1) == 3);
  for (int n = 2; n <= 8; ++n) {
    CHECK(laplace_log_mdet(n, n) == 0);
    CHECK(m_det(n, n).value.is_constant());
    for (int i = 0; i <= n; ++i) CHECK(laplace_log_mdet(n, i) == i * (n - i));
  }
}

TEST_CASE("order out of range") {
  CHECK_THROWS_AS(m_det(4, 5), Error);
  CHECK_THROWS_AS(m_det(4, -1), Error);
  CHECK_THROWS_AS(laplace_log_mdet(4, 5), Error);
}

TEST_CASE("2x2 determinant by hand") {
  Matrix<BiPoly> m(2, 2);
  m(0, 0) = BiPoly::x_plus();
  m(0, 1) = 2;
  m(1, 0) = BiPoly::x_minus();
  m(1, 1) = sigma;
  const BiPoly want = BiPoly::x_plus() * sigma - 2 * BiPoly::x_minus();
  CHECK(determinant_cofactor(m) == want);
  CHECK(determinant_bareiss(m) == want);
}

TEST_CASE("property: Bareiss agrees with cofactor expansion") {
  std::mt19937 rng(testgen::kSeed + 10);
  for (int size = 1; size <= 5; ++size)
    for (int trial = 0; trial < 12; ++trial) {
      Matrix<BiPoly> m(size, size);
      for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) m(a, b) = testgen::random_poly(rng, 2, 3);
      if (trial % 4 == 0 && size > 1) m(size - 1, 0) = BiPoly();  // exercise pivoting
      CAPTURE(size);
      CHECK(determinant_bareiss(m) == determinant_cofactor(m));
      CHECK(determinant(m) == determinant_cofactor(m));
    }
}

TEST_CASE("property: singular matrices have zero determinant") {
  std::mt19937 rng(testgen::kSeed + 11);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix<BiPoly> m(4, 4);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) m(a, b) = testgen::random_poly(rng, 2, 3);
    const BiPoly k = testgen::random_poly(rng, 2, 2);
    for (int b = 0; b < 4; ++b) m(3, b) = k * m(1, b);
    CHECK(determinant_bareiss(m).is_zero());
  }
}
