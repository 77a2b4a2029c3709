#pragma once

#include <string>
#include <string_view>

#include "gsigma/classify.hpp"
#include "gsigma/selftest.hpp"
#include "gsigma/solutions.hpp"

namespace gsigma {

enum class Format { Text, Json, Csv, Latex };

Format parse_format(std::string_view name);
std::string_view format_name(Format f);

/// Shared knobs for every command.
struct RunConfig {
  int max_n = kDefaultMaxDimension;
  double tolerance = 1e-10;
  int num_points = 20;
  unsigned seed = 0;
  Format format = Format::Text;
  PhaseConvention phase = PhaseConvention::Natural;
};

void validate(const RunConfig& cfg);

/// Rendered command output together with the outcome of its checks.
struct Rendered {
  std::string text;
  bool passed = true;
};

struct VerifyReport {
  ProjectorCombo combo;
  RValue extracted;
  RValue closed_form;
  RValue certified;
  bool passed() const { return extracted == closed_form && certified == extracted; }
};

VerifyReport verify_combo(int n, std::string_view combo, int max_n = kDefaultMaxDimension);

struct SolutionReport {
  SolutionMatrix z;
  UnitaryReport unitary;
  double el_residual = 0;
  DensityReport density;
  bool passed(double tolerance) const;
};

SolutionReport solve(int n, std::string_view combo, const RunConfig& cfg);

struct SumReport {
  DirectSumCertificate certificate;
  SolutionReport solution;
  double action = 0;
  double action_expected = 0;
  bool passed(double tolerance) const;
};

SumReport solve_sum(int k, int i, int l, int j, const RunConfig& cfg);

Rendered render_table(int m, int n, const RunConfig& cfg);
Rendered render_verify(int n, std::string_view combo, const RunConfig& cfg);
Rendered render_solution(int n, std::string_view combo, const RunConfig& cfg);
Rendered render_sum(int k, int i, int l, int j, const RunConfig& cfg);
Rendered render_coincidences(int m, int n, const RunConfig& cfg);
Rendered render_bounds(int m, int n, const RunConfig& cfg);
Rendered render_counts(int m, const RunConfig& cfg);
/// timings receives one "name seconds" line per suite; it is kept out of the
/// main output so that output stays byte-identical between runs.
Rendered render_selftest(const RunConfig& cfg, std::string* timings = nullptr);

}  // namespace gsigma
