#pragma once

#include <vector>

#include "gsigma/frames.hpp"

namespace gsigma {

/// Gram determinant M_i of the first i plain x_+-derivatives of f(n).
struct MDet {
  int n = 0;
  int i = 0;
  BiPoly value;
};

BiPoly determinant_cofactor(const Matrix<BiPoly>& m);
/// Fraction-free elimination; every division is exact in the polynomial ring.
BiPoly determinant_bareiss(Matrix<BiPoly> m);
/// Cofactor expansion up to 4x4, Bareiss beyond.
BiPoly determinant(const Matrix<BiPoly>& m);

MDet m_det(int n, int i, int max_n = kDefaultMaxDimension);

/// M_0 .. M_n for one n, memoized and shareable across threads.
const std::vector<BiPoly>& mdet_table(int n, int max_n = kDefaultMaxDimension);

struct ProductIdentityEntry {
  int i = 0;
  bool passed = false;
};

struct ProductIdentityReport {
  int n = 0;
  std::vector<ProductIdentityEntry> entries;
  bool all_passed() const;
};

/// Compares M_i against prod_{k<i} |P_+^k f|^2 for 1 <= i <= n.
ProductIdentityReport verify_product_identity(int n, int max_n = kDefaultMaxDimension);

/// d_+d_- ln M_i == i(n-i) / sigma^2, verified exactly; returns i(n-i).
Rational laplace_log_mdet(int n, int i, int max_n = kDefaultMaxDimension);

}  // namespace gsigma
