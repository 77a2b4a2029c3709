#include <doctest.h>

#include <json.hpp>

#include "gsigma/error.hpp"
#include "gsigma/selftest.hpp"

using namespace gsigma;

TEST_CASE("full selftest passes") {
  const SelftestReport rep = run_selftest();
  CHECK(rep.suites.size() == 9);
  CHECK(rep.passed());
  CHECK_FALSE(rep.first_failure());
  for (const auto& s : rep.suites) {
    CAPTURE(s.name);
    CHECK(s.passed);
    CHECK_FALSE(s.skipped);
    CHECK(s.failure.empty());
  }
  const std::string text = to_text(rep);
  CHECK(text.find("PASS  determinant product identity") != std::string::npos);
  CHECK(text.find("selftest: all suites passed") != std::string::npos);
}

TEST_CASE("reduced selftest") {
  const SelftestReport rep = run_selftest({.max_n = 4});
  CHECK(rep.passed());
  for (const auto& s : rep.suites) CHECK_FALSE(s.skipped);
  // below n = 4 there is no golden table left to compare
  bool golden_skipped = false;
  for (const auto& s : run_selftest({.max_n = 3}).suites) golden_skipped |= s.name == "golden tables" && s.skipped;
  CHECK(golden_skipped);
  CHECK(to_text(rep) == to_text(run_selftest({.max_n = 4})));
  CHECK_THROWS_AS(run_selftest({.max_n = 1}), Error);
}

TEST_CASE("injected fault is named") {
  const SelftestReport rep = run_selftest({.max_n = 4, .corrupt_product_identity = true});
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.first_failure());
  CHECK(*rep.first_failure() ==
        "determinant product identity: determinant product identity fails for M_2 at n = 3");
  CHECK(to_text(rep).find("selftest: FAILED") != std::string::npos);

  const auto j = nlohmann::json::parse(to_json(rep));
  CHECK(j["passed"] == false);
  CHECK(j["suites"][1]["name"] == "determinant product identity");
  CHECK(j["suites"][1]["passed"] == false);
}
