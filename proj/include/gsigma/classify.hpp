#pragma once

#include <string>
#include <vector>

#include "gsigma/curvature.hpp"

namespace gsigma {

/// Which relations identify two combos of the same model.
enum class Equivalence {
  /// Conjugation (level reversal); in self-dual models G(m,2m) the
  /// completion pairing alpha <-> 1 - alpha instead. This is the
  /// identification used for the standard tables and counts.
  Standard,
  /// Every composition of reversal and (for G(m,2m)) complement.
  Full,
};

struct ComboOrbit {
  ProjectorCombo canonical;
  std::vector<ProjectorCombo> members;  // sorted, includes canonical
  RValue r;
  bool holomorphic = false;
};

/// All C(n,m) combos of G(m,n), grouped into orbits. The curvature integer is
/// extracted symbolically for every member and must agree across the orbit.
std::vector<ComboOrbit> enumerate(int m, int n, int max_n = kDefaultMaxDimension,
                                  Equivalence eq = Equivalence::Standard);

struct RTableRow {
  std::string label;
  long r = 0;
  bool holomorphic = false;
  ProjectorCombo canonical;
  std::vector<ProjectorCombo> members;
};

struct RTable {
  int m = 0;
  int n = 0;
  std::vector<RTableRow> rows;
};

/// Rows ordered by number of consecutive runs, then by level indices.
RTable table(int m, int n, int max_n = kDefaultMaxDimension);

struct Coincidence {
  long r = 0;
  std::vector<std::string> labels;
};

/// Distinct orbits sharing a curvature integer, ascending in r.
std::vector<Coincidence> coincidences(int m, int n, int max_n = kDefaultMaxDimension);

struct BoundReport {
  int m = 0;
  int n = 0;
  bool applicable = false;
  long bound = 0;
  long max_r = 0;
  std::vector<std::string> achieved_by;
  std::string pattern_label;  // the alternating pattern predicted to attain the bound
  bool passed = false;
  std::string note;
};

BoundReport verify_bounds(int m, int n, int max_n = kDefaultMaxDimension);

struct CountReport {
  int m = 0;
  long expected_nonholomorphic = 0;  // C(2m,m)/2 - 1
  long nonholomorphic = 0;
  long full_group_nonholomorphic = 0;
  bool passed = false;
};

/// Non-holomorphic orbit count of G(m,2m) against C(2m,m)/2 - 1.
CountReport count_check(int m, int max_n = kDefaultMaxDimension);

std::string to_csv(const RTable& t);
std::string to_json(const RTable& t);
std::string to_text(const RTable& t);

}  // namespace gsigma
