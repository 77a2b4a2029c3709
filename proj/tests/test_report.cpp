#include <doctest.h>

#include <json.hpp>

#include "gsigma/error.hpp"
#include "gsigma/report.hpp"

using namespace gsigma;

namespace {

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

RunConfig with_format(Format f) {
  RunConfig cfg;
  cfg.format = f;
  return cfg;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("formats") {
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(format_name(Format::Latex) == "latex");
  CHECK(code_of([] { parse_format("xml"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("config validation") {
  RunConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  cfg.tolerance = 0;
  CHECK_THROWS_AS(validate(cfg), Error);
  cfg = {};
  cfg.num_points = 0;
  CHECK_THROWS_AS(validate(cfg), Error);
  cfg = {};
  cfg.max_n = 1;
  CHECK_THROWS_AS(validate(cfg), Error);
}

TEST_CASE("verify") {
  const VerifyReport v = verify_combo(6, "101000");
  CHECK(v.passed());
  CHECK(v.extracted.r == 22);
  CHECK(v.certified.curvature == make_rational(2, 11));
  CHECK(verify_combo(5, "10101").extracted.r == 20);
  CHECK(verify_combo(4, "1100").extracted.r == 4);

  const Rendered text = render_verify(6, "101000", {});
  CHECK(text.passed);
  CHECK(ends_with(text.text, "r=22 K=2/11 PASS\n"));
  const Rendered csv = render_verify(6, "0,2", with_format(Format::Csv));
  CHECK(contains(csv.text, "mask,label,extract_r,closed_form_r,certificate_r,curvature,passed\n"));
  CHECK(nlohmann::json::parse(render_verify(6, "0,2", with_format(Format::Json)).text)["extract_r"] == 22);
  CHECK(code_of([] { render_verify(6, "0,2", with_format(Format::Latex)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("table rendering") {
  CHECK(contains(render_table(2, 6, with_format(Format::Csv)).text, "\nr_13,30,false\n"));
  const std::string t36 = render_table(3, 6, with_format(Format::Csv)).text;
  CHECK(std::count(t36.begin(), t36.end(), '\n') == 11);
  CHECK(contains(t36, "r_024,35"));
  CHECK(render_table(2, 6, {}).text == render_table(2, 6, {}).text);
}

TEST_CASE("solution rendering") {
  const Rendered l = render_solution(6, "0,2", with_format(Format::Latex));
  CHECK(l.passed);
  CHECK(contains(l.text, "\\sqrt{10}x_-^2"));
  const Rendered t = render_solution(6, "0,3", {});
  CHECK(t.passed);
  CHECK(contains(t.text, "unitary (exact Z^dagger Z = I): PASS"));
  CHECK(contains(t.text, "euler-lagrange residual: PASS"));
  const auto j = nlohmann::json::parse(render_solution(2, "0", with_format(Format::Json)).text);
  CHECK(j["checks"]["unitary"] == true);
  CHECK(code_of([] { render_solution(2, "0", with_format(Format::Csv)); }) == ErrorCode::InvalidArgument);

  RunConfig tight;
  tight.tolerance = 1e-30;  // nothing numeric can meet this
  CHECK_FALSE(render_solution(6, "0,2", tight).passed);
}

TEST_CASE("sum rendering") {
  const Rendered s = render_sum(2, 0, 2, 0, {});
  CHECK(s.passed);
  CHECK(ends_with(s.text, "r=2 PASS\n"));
  const SumReport rep = solve_sum(2, 0, 3, 1, {});
  CHECK(rep.certificate.certified.r == 5);
  CHECK(rep.passed(1e-10));
}

TEST_CASE("coincidence, bound and count rendering") {
  CHECK(contains(render_coincidences(2, 7, {}).text, "22"));
  const Rendered b = render_bounds(3, 7, {});
  CHECK(b.passed);
  CHECK(contains(b.text, "56"));
  CHECK(code_of([] { render_bounds(3, 4, {}); }) == ErrorCode::BoundInapplicable);
  const Rendered c = render_counts(3, {});
  CHECK(c.passed);
  CHECK(contains(c.text, "found (completion pairing): 9"));
  CHECK(code_of([] { render_counts(0, {}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("selftest rendering keeps timings apart") {
  RunConfig cfg;
  cfg.max_n = 5;
  std::string timings;
  const Rendered r = render_selftest(cfg, &timings);
  CHECK(r.passed);
  CHECK_FALSE(timings.empty());
  CHECK(r.text == render_selftest(cfg).text);
}
