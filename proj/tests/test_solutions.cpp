#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <json.hpp>

#include "generators.hpp"
#include "gsigma/error.hpp"
#include "gsigma/solutions.hpp"
#include "reference_matrices.hpp"

using namespace gsigma;

namespace {

constexpr double kResidualTol = 1e-10;
constexpr double kActionRelTol = 1e-6;

SolutionMatrix z_of(int n, const char* combo, PhaseConvention phase = PhaseConvention::Natural) {
  return build_Z(ProjectorCombo::parse(n, combo), phase);
}

}  // namespace

TEST_CASE("CP^1 column") {
  const SolutionMatrix z = z_of(2, "0");
  REQUIRE(z.n == 2);
  REQUIRE(z.m == 1);
  for (int r = 0; r < 2; ++r) {
    CHECK(z.entries(r, 0).radicand == 1);
    CHECK(z.entries(r, 0).coeff == 1);
    CHECK(z.entries(r, 0).halfdexp == make_rational(1, 2));
  }
  CHECK(z.entries(1, 0).poly == BiPoly::x_plus());
}

TEST_CASE("reference G(2,6) matrices") {
  const SolutionMatrix z02 = z_of(6, "0,2");
  const SolutionMatrix z03 = z_of(6, "0,3");
  CHECK(reference::matches_up_to_column_sign(z02, reference::z02()));
  CHECK(reference::matches_up_to_column_sign(z03, reference::z03()));
  // the other matrix is not a match
  CHECK_FALSE(reference::matches_up_to_column_sign(z02, reference::z03()));

  // the natural phase already agrees with the reference signs
  const ZEntry& e = z03.entries(0, 1);
  CHECK(e.coeff * e.poly == -1 * BiPoly::x_minus().pow(3));
  CHECK(z03.column_phase == std::vector<int>{1, 1});
}

TEST_CASE("positive-leading phase flips columns") {
  const SolutionMatrix z = z_of(6, "0,3", PhaseConvention::PositiveLeading);
  CHECK(z.column_phase == std::vector<int>{1, -1});
  CHECK(sgn(z.entries(0, 1).coeff) > 0);
  CHECK(reference::matches_up_to_column_sign(z, reference::z03()));
  CHECK(check_unitary(z).passed());
}

TEST_CASE("exact unitarity") {
  const auto rep = check_unitary(z_of(6, "0,2"));
  CHECK(rep.pairs.size() == 3);
  CHECK(rep.passed());
  CHECK_FALSE(rep.first_failure());

  for (int n = 2; n <= 8; ++n)
    for (int m = 1; m < n; ++m) CHECK(check_unitary(build_Z(ProjectorCombo(n, (1U << m) - 1))).passed());

  SolutionMatrix bad = z_of(6, "0,2");
  bad.entries(0, 1).coeff = -bad.entries(0, 1).coeff;
  const auto fail = check_unitary(bad);
  CHECK_FALSE(fail.passed());
  REQUIRE(fail.first_failure());
  CHECK(*fail.first_failure() == std::pair<int, int>{0, 1});
}

TEST_CASE("sample points") {
  const auto pts = sample_points(20, 0);
  REQUIRE(pts.size() == 20);
  for (const auto& p : pts) CHECK(std::abs(p.x_plus) <= kDefaultSampleRadius);
  const auto again = sample_points(20, 0);
  for (std::size_t k = 0; k < pts.size(); ++k) CHECK(pts[k].x_plus == again[k].x_plus);
  CHECK(sample_points(5, 1)[0].x_plus == pts[1].x_plus);
}

TEST_CASE("Euler-Lagrange residual") {
  const auto pts = sample_points(20, 0);
  CHECK(el_residual(z_of(6, "0,2"), pts) < kResidualTol);
  CHECK(el_residual(z_of(6, "0,3"), pts) < kResidualTol);
  CHECK(el_residual(z_of(4, "0,1"), {NumericPoint{0.0}}) < 1e-12);

  SolutionMatrix bad = z_of(6, "0,2");
  bad.entries(2, 1).coeff *= 3;
  CHECK(el_residual(bad, pts) > 1e-6);
}

TEST_CASE("Lagrangian density") {
  const SolutionMatrix z02 = z_of(6, "0,2");
  CHECK(numeric_density(z02, 0.0) == doctest::Approx(11.0).epsilon(1e-12));
  CHECK(numeric_density(z_of(4, "0,1"), 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(numeric_density(z02, {1e3, 0}) < 1e-9);
  CHECK(exact_density(z02) == CircleSection(11, 2));

  const auto rep = density_of_Z(z02, sample_points(20, 0));
  CHECK(rep.numeric.size() == 20);
  CHECK(rep.max_rel_deviation < kResidualTol);
}

TEST_CASE("exact Lagrangian of orthogonal columns") {
  const auto tw = tower(5);
  CHECK(exact_lagrangian({tw->levels[1]}) == CircleSection(5, 2));  // r_1(1,5) = 10
  CHECK(exact_lagrangian({tw->levels[0], tw->levels[2]}) == density(ProjectorCombo::parse(5, "0,2")));
  CHECK_THROWS_AS(exact_lagrangian({tw->levels[0], tw->levels[0]}), Error);
}

TEST_CASE("direct sums") {
  struct Case {
    int k, i, l, j;
    long r;
  };
  for (const Case c : {Case{2, 0, 2, 0, 2}, Case{3, 1, 3, 1, 8}, Case{2, 0, 3, 0, 3}, Case{2, 0, 3, 1, 5}}) {
    CAPTURE(c.r);
    const auto cert = verify_direct_sum(c.k, c.i, c.l, c.j);
    CHECK(cert.expected_r == c.r);
    CHECK(cert.certified.r == c.r);
    CHECK(cert.additive);
    CHECK(cert.passed());

    const SolutionMatrix z = direct_sum(c.k, c.i, c.l, c.j);
    CHECK(z.n == c.k + c.l);
    CHECK(z.m == 2);
    CHECK(check_unitary(z).passed());
    CHECK(el_residual(z, sample_points(10, 0)) < kResidualTol);
    // block structure
    for (int r = c.k; r < z.n; ++r) CHECK(z.entries(r, 0).is_zero());
    for (int r = 0; r < c.k; ++r) CHECK(z.entries(r, 1).is_zero());
  }
  CHECK_THROWS_AS(direct_sum(1, 0, 2, 0), Error);
  CHECK_THROWS_AS(direct_sum(2, 2, 2, 0), Error);
}

TEST_CASE("action integral equals 2 pi r") {
  struct Case {
    SolutionMatrix z;
    long r;
  };
  const std::vector<Case> cases = {
      {z_of(2, "0"), 1}, {direct_sum(2, 0, 2, 0), 2}, {z_of(4, "0,1"), 4}, {z_of(6, "0,2"), 22}};
  for (const auto& c : cases) {
    CAPTURE(c.r);
    const double want = 2 * std::numbers::pi * c.r;
    CHECK(std::abs(action_integral(c.z) - want) <= kActionRelTol * want);
  }
}

TEST_CASE("latex and json forms") {
  const std::string l02 = to_latex(z_of(6, "0,2"));
  CHECK(l02.find("\\sqrt{10}x_-^2") != std::string::npos);
  CHECK(l02.find("(1+|x|^2)^{5/2}") != std::string::npos);
  CHECK(to_latex(z_of(6, "0,3")).find("-\\sqrt{10}x_-^3") != std::string::npos);

  const auto j = nlohmann::json::parse(to_json(z_of(2, "0")));
  CHECK(j["n"] == 2);
  CHECK(j["prefactor_halfdexp"] == "1/2");
  for (const auto& row : j["entries"])
    for (const auto& e : row) {
      CHECK(e["radicand"] == 1);
      CHECK(e["halfdexp"] == "1/2");
    }
  CHECK_FALSE(j.contains("checks"));

  SolutionChecks checks;
  checks.unitary = true;
  checks.points = 20;
  const auto jc = nlohmann::json::parse(to_json(z_of(2, "0"), checks));
  CHECK(jc["checks"]["points"] == 20);
}

TEST_CASE("property: random combos give genuine solutions") {
  std::mt19937 rng(testgen::kSeed + 30);
  const auto pts = sample_points(8, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    const std::uint32_t bits = std::uniform_int_distribution<std::uint32_t>(1, (1U << n) - 2)(rng);
    const ProjectorCombo c(n, bits);
    CAPTURE(c.mask_string());
    const SolutionMatrix z = build_Z(c);
    CHECK(check_unitary(z).passed());
    CHECK(el_residual(z, pts) < kResidualTol);
    CHECK(density_of_Z(z, pts).max_rel_deviation < kResidualTol);
    const double r = static_cast<double>(extract_r(c).r);
    CHECK(numeric_density(z, 0.0) == doctest::Approx(r / 2).epsilon(1e-12));
  }
}
