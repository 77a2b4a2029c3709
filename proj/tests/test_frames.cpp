#include <doctest.h>

#include "gsigma/error.hpp"
#include "gsigma/frames.hpp"

using namespace gsigma;

namespace {

const BiPoly xp = BiPoly::x_plus();
const BiPoly xm = BiPoly::x_minus();
const BiPoly t = BiPoly::t();
const BiPoly sigma = BiPoly::sigma();

Integer fact(int k) {
  Integer r = 1;
  for (int j = 2; j <= k; ++j) r *= j;
  return r;
}

// (n-1)! i! / (n-1-i)! sigma^(n-1-2i), built without the library's helpers.
CircleSection norm_oracle(int n, int i) {
  const Rational c = Rational(fact(n - 1) * fact(i)) / Rational(fact(n - 1 - i));
  const int e = n - 1 - 2 * i;
  BiPoly s(1);
  for (int k = 0; k < std::abs(e); ++k) s *= sigma;
  return e >= 0 ? CircleSection(s * c) : CircleSection(BiPoly(c), static_cast<unsigned>(-e));
}

}  // namespace

TEST_CASE("veronese curve components and weights") {
  const SqrtVector f2 = veronese(2);
  CHECK(f2.weights() == std::vector<Integer>{1, 1});
  CHECK(f2.comp(0) == CircleSection(1));
  CHECK(f2.comp(1) == CircleSection(xp));

  const SqrtVector f3 = veronese(3);
  CHECK(f3.weights() == std::vector<Integer>{1, 2, 1});
  CHECK(f3.comp(2) == CircleSection(xp * xp));
  CHECK(veronese(7).weights()[3] == 20);
}

TEST_CASE("inner products of the veronese curve") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(norm_squared(veronese(n)) == CircleSection(sigma.pow(n - 1)));
  }
  const SqrtVector f3 = veronese(3);
  CHECK(inner(f3, partial(f3, Direction::Plus)) == CircleSection(2 * xm * sigma));
  CHECK(inner(partial(f3, Direction::Plus), f3) == CircleSection(2 * xp * sigma));
}

TEST_CASE("P_+ of the CP^1 curve by hand") {
  const SqrtVector p = pplus(veronese(2));
  CHECK(p.comp(0) == CircleSection(-xm, 1));
  CHECK(p.comp(1) == CircleSection(1, 1));
}

TEST_CASE("P_+ removes the seed direction") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const SqrtVector f = veronese(n);
    const SqrtVector p = pplus(f);
    CHECK(inner(p, f).is_zero());
    CHECK(norm_squared(p) == CircleSection::sigma_power(n - 3, n - 1));
  }
}

TEST_CASE("tower norms match the closed form") {
  const TowerCache t3 = build_tower(3);
  REQUIRE(t3.normsq.size() == 3);
  CHECK(t3.normsq[0] == CircleSection(sigma * sigma));
  CHECK(t3.normsq[1] == CircleSection(2));
  CHECK(t3.normsq[2] == CircleSection(4, 2));  // 2! 2! / 0! sigma^-2
  CHECK(build_tower(5).normsq[2] == CircleSection(24));

  for (int n = 2; n <= 10; ++n)
    for (int i = 0; i < n; ++i) {
      CAPTURE(n);
      CAPTURE(i);
      CHECK(tower(n)->normsq[i] == norm_oracle(n, i));
      const SectionPower cf = tower_norm_closed_form(n, i);
      CHECK(CircleSection::sigma_power(cf.exponent, cf.coeff) == norm_oracle(n, i));
    }
}

TEST_CASE("property: tower levels are mutually orthogonal") {
  for (int n = 2; n <= 8; ++n) {
    const auto tw = tower(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        CAPTURE(n);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(inner(tw->levels[i], tw->levels[j]).is_zero());
      }
    // the level after the antiholomorphic end vanishes
    CHECK(pplus(tw->levels[n - 1]).is_zero());
  }
}

TEST_CASE("tower cache is shared") {
  CHECK(tower(6).get() == tower(6).get());
  CHECK(tower(6)->n == 6);
}

TEST_CASE("gram matrices of plain derivatives") {
  for (int n = 2; n <= 6; ++n) {
    const auto g = gram(n, 1);
    REQUIRE(g.rows() == 1);
    CHECK(g(0, 0) == CircleSection(sigma.pow(n - 1)));
  }
  const auto g = gram(3, 2);
  CHECK(g(0, 0) == CircleSection(sigma * sigma));
  CHECK(g(0, 1) == CircleSection(2 * xm * sigma));
  CHECK(g(1, 0) == CircleSection(2 * xp * sigma));
  CHECK(g(1, 1) == CircleSection(2 * (1 + 2 * t)));
}

TEST_CASE("frame errors") {
  CHECK_THROWS_AS(veronese(17), Error);
  try {
    veronese(20, 16);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionBound);
  }
  CHECK_NOTHROW(veronese(20, 20));
  try {
    pplus(SqrtVector({1, 1}, {CircleSection(), CircleSection()}));
    FAIL("expected ZeroVector");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVector);
  }
  try {
    inner(veronese(2), veronese(3));
    FAIL("expected IncompatibleVectors");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompatibleVectors);
  }
}
