#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsigma/frames.hpp"

namespace gsigma {

struct SelftestOptions {
  int max_n = kDefaultMaxDimension;
  /// Negative control: corrupts one M_i before the product identity is compared.
  bool corrupt_product_identity = false;
};

struct SuiteResult {
  std::string name;
  std::string scope;  // e.g. "n <= 12"
  bool passed = false;
  bool skipped = false;
  double seconds = 0;
  std::string failure;  // first failing identity, empty on pass
};

struct SelftestReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
  std::optional<std::string> first_failure() const;
};

SelftestReport run_selftest(const SelftestOptions& options = {});

/// Deterministic summary (timings excluded).
std::string to_text(const SelftestReport& report);
std::string to_json(const SelftestReport& report);

}  // namespace gsigma
