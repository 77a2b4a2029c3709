#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gsigma/curvature.hpp"

namespace gsigma {

/// coeff * sqrt(radicand) * poly / sigma^halfdexp, halfdexp in (1/2)Z.
///
/// poly is primitive with integer coefficients and a positive lowest term;
/// the sign and rational scale live in coeff.
struct ZEntry {
  Rational coeff;
  Integer radicand = 1;
  BiPoly poly;
  Rational halfdexp;
  bool is_zero() const { return poly.is_zero() || sgn(coeff) == 0; }
};

/// Block-diagonal G(2,k+l) solution from level i of f(k) and level j of f(l).
struct DirectSumSpec {
  int k = 0;
  int i = 0;
  int l = 0;
  int j = 0;
  friend bool operator==(const DirectSumSpec&, const DirectSumSpec&) = default;
};

using Provenance = std::variant<DirectSumSpec, ProjectorCombo>;

enum class PhaseConvention {
  /// Columns are P_+^i f / |P_+^i f| exactly as constructed.
  Natural,
  /// Each column is flipped so its first nonzero entry has positive coefficient.
  PositiveLeading,
};

/// Normalized n x m solution Z with Z^dagger Z = I.
struct SolutionMatrix {
  int n = 0;
  int m = 0;
  Matrix<ZEntry> entries;
  Provenance source;
  std::vector<int> column_phase;  // +1 or -1 applied on top of the construction
};

SolutionMatrix build_Z(const ProjectorCombo& combo, PhaseConvention phase = PhaseConvention::Natural,
                       int max_n = kDefaultMaxDimension);

SolutionMatrix direct_sum(int k, int i, int l, int j, PhaseConvention phase = PhaseConvention::Natural,
                          int max_n = kDefaultMaxDimension);

struct UnitaryPair {
  int j = 0;
  int k = 0;
  bool passed = false;
};

struct UnitaryReport {
  std::vector<UnitaryPair> pairs;  // j <= k, row-major
  bool passed() const;
  /// First failing (j, k) pair, if any.
  std::optional<std::pair<int, int>> first_failure() const;
};

/// Exact check of Z^dagger Z = I. Products of square roots are grouped by
/// their squarefree part, which are linearly independent over Q(x_+, x_-).
UnitaryReport check_unitary(const SolutionMatrix& z);

struct NumericPoint {
  std::complex<double> x_plus;
};

inline constexpr double kDefaultSampleRadius = 3.0;

/// Deterministic Halton(2,3) points in the disc |x_+| <= radius, starting at
/// sequence index seed + 1.
std::vector<NumericPoint> sample_points(std::size_t count, unsigned seed, double radius = kDefaultSampleRadius);

/// max |D_+ D_- Z + Z (D_- Z)^dagger D_- Z| over all points and entries, with
/// every derivative taken symbolically before evaluation.
double el_residual(const SolutionMatrix& z, const std::vector<NumericPoint>& points);

/// 1/2 Tr[(D_+Z)^dagger D_+Z + (D_-Z)^dagger D_-Z] at one point.
double numeric_density(const SolutionMatrix& z, std::complex<double> x_plus);

/// Exact density of the construction Z came from.
CircleSection exact_density(const SolutionMatrix& z, int max_n = kDefaultMaxDimension);

struct DensityReport {
  std::vector<double> numeric;
  std::vector<double> exact;
  double max_abs_deviation = 0;
  double max_rel_deviation = 0;
};

DensityReport density_of_Z(const SolutionMatrix& z, const std::vector<NumericPoint>& points,
                           int max_n = kDefaultMaxDimension);

/// Exact 1/2 Tr[(D_+Z)^dagger D_+Z + (D_-Z)^dagger D_-Z] for Z whose columns
/// are v_c / |v_c| with mutually orthogonal v_c.
CircleSection exact_lagrangian(const std::vector<SqrtVector>& columns);

struct DirectSumCertificate {
  DirectSumSpec spec;
  long expected_r = 0;  // r_i(1,k) + r_j(1,l)
  RValue certified;     // from the exact density of the block matrix
  bool additive = false;
  bool passed() const { return additive && certified.r == expected_r; }
};

DirectSumCertificate verify_direct_sum(int k, int i, int l, int j, int max_n = kDefaultMaxDimension);

/// 4 * integral of the numeric density over the plane (adaptive Gauss-Kronrod
/// in polar coordinates).
double action_integral(const SolutionMatrix& z, double tolerance = 1e-10);

/// Outcome of the checks run on a solution, attached to the JSON form.
struct SolutionChecks {
  bool unitary = false;
  double el_residual = 0;
  double density_deviation = 0;
  std::size_t points = 0;
  unsigned seed = 0;
  double tolerance = 0;
};

std::string to_latex(const SolutionMatrix& z);
std::string to_json(const SolutionMatrix& z, const std::optional<SolutionChecks>& checks = std::nullopt);

}  // namespace gsigma
