#pragma once

// Reference forms of the G(2,6) solutions Z_02 and Z_03, typed in entry by entry. Every entry is
// sqrt(radicand) * poly / (1+|x|^2)^(5/2).

#include <vector>

#include "gsigma/solutions.hpp"

namespace gsigma::reference {

struct Entry {
  long radicand;
  BiPoly poly;
};

using Columns = std::vector<std::vector<Entry>>;  // [column][row]

inline Columns z02() {
  const BiPoly p = BiPoly::x_plus(), m = BiPoly::x_minus(), t = BiPoly::t();
  return {
      {{1, 1}, {5, p}, {10, p.pow(2)}, {10, p.pow(3)}, {5, p.pow(4)}, {1, p.pow(5)}},
      {{10, m.pow(2)},
       {2, m * (-2 + 3 * t)},
       {1, 1 + 3 * t.pow(2) - 6 * t},
       {1, p * (3 + t.pow(2) - 6 * t)},
       {2, p.pow(2) * (3 - 2 * t)},
       {10, p.pow(3)}},
  };
}

inline Columns z03() {
  const BiPoly p = BiPoly::x_plus(), m = BiPoly::x_minus(), t = BiPoly::t();
  return {
      {{1, 1}, {5, p}, {10, p.pow(2)}, {10, p.pow(3)}, {5, p.pow(4)}, {1, p.pow(5)}},
      {{10, -1 * m.pow(3)},
       {2, m.pow(2) * (3 - 2 * t)},
       {1, -1 * m * (3 + t.pow(2) - 6 * t)},
       {1, 1 + 3 * t.pow(2) - 6 * t},
       {2, p * (2 - 3 * t)},
       {10, p.pow(2)}},
  };
}

/// True when every column of z equals the reference column times +1 or -1.
inline bool matches_up_to_column_sign(const SolutionMatrix& z, const Columns& ref) {
  if (z.m != static_cast<int>(ref.size())) return false;
  const Rational half_dexp = make_rational(5, 2);
  for (int c = 0; c < z.m; ++c) {
    if (static_cast<int>(ref[c].size()) != z.n) return false;
    int sign = 0;
    for (int r = 0; r < z.n; ++r) {
      const ZEntry& e = z.entries(r, c);
      const Entry& want = ref[c][r];
      if (e.halfdexp != half_dexp || e.radicand != want.radicand) return false;
      const BiPoly got = e.coeff * e.poly;
      if (sign == 0) sign = got == want.poly ? 1 : got == -want.poly ? -1 : 0;
      if (sign == 0 || got != sign * want.poly) return false;
    }
  }
  return true;
}

}  // namespace gsigma::reference
