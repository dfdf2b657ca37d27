#pragma once

#include <initializer_list>
#include <vector>

#include "topvert/pseries.hpp"
#include "topvert/qseries.hpp"

namespace topvert::testing {

inline HalfExp hx(double v) { return HalfExp::from_twice(static_cast<std::int64_t>(v * 2)); }

/// Integer-exponent series c0 + c1 p + ... starting at p^lo.
inline PSeries series(std::initializer_list<long> coeffs, long lo = 0,
                      HalfExp top = HalfExp::unbounded()) {
  std::vector<std::pair<HalfExp, Rational>> t;
  long e = lo;
  for (long c : coeffs) t.emplace_back(HalfExp::from_int(e++), Rational(c));
  return PSeries::from_terms(t, top);
}

inline std::vector<long> int_coeffs(const PSeries& s, long from, long to) {
  std::vector<long> out;
  for (long e = from; e <= to; ++e) out.push_back(s.coeff(HalfExp::from_int(e)).get_num().get_si());
  return out;
}

/// Plane partitions of n counted row by row; each row is a partition lying
/// under the previous one.
inline long count_plane_partitions(int n) {
  auto rec = [](auto&& self, const std::vector<int>& cap, int remaining) -> long {
    // Count fillings of later rows below `cap` using at most `remaining` cells.
    long total = 1;  // stop here
    std::vector<int> row;
    auto rows = [&](auto&& rself, std::size_t i, int left, int maxv) -> void {
      if (i >= cap.size()) return;
      for (int v = 1; v <= std::min(cap[i], std::min(maxv, left)); ++v) {
        row.push_back(v);
        total += self(self, row, left - v);
        rself(rself, i + 1, left - v, v);
        row.pop_back();
      }
    };
    rows(rows, 0, remaining, remaining);
    return total;
  };
  // Generating function coefficient: count those with exactly n cells by
  // differencing cumulative counts.
  auto cumulative = [&](int m) {
    std::vector<int> cap(static_cast<std::size_t>(m), m);
    return rec(rec, cap, m);
  };
  return n == 0 ? 1 : cumulative(n) - cumulative(n - 1);
}

}  // namespace topvert::testing
