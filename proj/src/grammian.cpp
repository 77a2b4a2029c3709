#include "gsigma/grammian.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "gsigma/error.hpp"

namespace gsigma {

BiPoly determinant_cofactor(const Matrix<BiPoly>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return BiPoly(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  BiPoly det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m(0, col).is_zero()) continue;
    Matrix<BiPoly> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != col) minor(i - 1, jj++) = m(i, j);
    BiPoly term = m(0, col) * determinant_cofactor(minor);
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

BiPoly determinant_bareiss(Matrix<BiPoly> m) {
  const std::size_t n = m.rows();
  if (n == 0) return BiPoly(1);
  BiPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return {};
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto q = divide_exact(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
        if (!q) throw Error(ErrorCode::Internal, "Bareiss step left the polynomial ring");
        m(i, j) = std::move(*q);
      }
      m(i, k) = BiPoly{};
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

BiPoly determinant(const Matrix<BiPoly>& m) {
  if (m.rows() <= 4) return determinant_cofactor(m);
  return determinant_bareiss(m);
}

MDet m_det(int n, int i, int max_n) {
  check_dimension(n, max_n);
  if (i < 0 || i > n) throw Error(ErrorCode::InvalidArgument, "determinant order out of range");
  const Matrix<CircleSection> g = gram(n, i, max_n);
  Matrix<BiPoly> polys(i, i);
  for (int a = 0; a < i; ++a)
    for (int b = 0; b < i; ++b) {
      if (!g(a, b).is_polynomial()) throw Error(ErrorCode::Internal, "Gram entry is not a polynomial");
      polys(a, b) = g(a, b).num();
    }
  return {n, i, determinant(polys)};
}

const std::vector<BiPoly>& mdet_table(int n, int max_n) {
  check_dimension(n, max_n);
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<BiPoly>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<std::vector<BiPoly>>();
  for (int i = 0; i <= n; ++i) table->push_back(m_det(n, i, max_n).value);
  std::lock_guard lock(mutex);
  return *cache.emplace(n, std::move(table)).first->second;
}

bool ProductIdentityReport::all_passed() const {
  for (const auto& e : entries)
    if (!e.passed) return false;
  return !entries.empty();
}

ProductIdentityReport verify_product_identity(int n, int max_n) {
  const auto tw = tower(n, max_n);
  ProductIdentityReport report{n, {}};
  CircleSection product(1);
  for (int i = 1; i <= n; ++i) {
    product *= tw->normsq[i - 1];
    const CircleSection lhs(m_det(n, i, max_n).value);
    report.entries.push_back({i, lhs == product});
  }
  return report;
}

Rational laplace_log_mdet(int n, int i, int max_n) {
  if (i < 0 || i > n) throw Error(ErrorCode::InvalidArgument, "determinant order out of range");
  const BiPoly& mi = mdet_table(n, max_n).at(i);
  const LogLaplacian ll = laplace_log(mi);
  const Rational expected(i * (n - i));
  // num / den == expected / sigma^2
  if (ll.num * BiPoly::sigma().pow(2) != ll.den * expected)
    throw Error(ErrorCode::Internal, "log-Laplacian identity violated for M_" + std::to_string(i) +
                                         " at n = " + std::to_string(n));
  return expected;
}

}  // namespace gsigma
