#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "topvert/pseries.hpp"

namespace topvert {

/// Power series in q truncated after q^order, with PSeries coefficients.
class QSeries {
 public:
  QSeries() : QSeries(0) {}
  /// All coefficients set to `fill` (the exact zero by default).
  explicit QSeries(int order, const PSeries& fill = PSeries());

  static QSeries constant(const PSeries& c, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const PSeries& operator[](int d) const { return c_.at(static_cast<std::size_t>(d)); }
  PSeries& operator[](int d) { return c_.at(static_cast<std::size_t>(d)); }

  /// The smallest window top among the coefficients.
  HalfExp min_top() const;
  /// Truncates every coefficient; throws WindowError if one is too short.
  QSeries truncated(HalfExp top) const;
  QSeries scaled(const PSeries& c) const;
  /// Multiplies by q^k, dropping what falls past the order.
  QSeries q_shifted(int k) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);

 private:
  std::vector<PSeries> c_;
};

/// Inverse as a q-series. `want` bounds the top used when inverting an exact
/// constant term; each later coefficient gets whatever top the recurrence
/// supports.
QSeries qs_invert(const QSeries& a, std::optional<HalfExp> want = std::nullopt);

/// All coefficients of exponents <= hi that differ, over every q-power.
std::vector<CoeffMismatch> compare(const QSeries& a, const QSeries& b, HalfExp lo, HalfExp hi);

/// A q-series times the symbolic prefactor q^offset, offset rational.
struct ShiftedQSeries {
  Rational offset;
  QSeries series;
};

ShiftedQSeries operator*(const ShiftedQSeries& a, const ShiftedQSeries& b);
ShiftedQSeries qs_invert(const ShiftedQSeries& a, std::optional<HalfExp> want = std::nullopt);

/// Calls `build` with growing internal tops until every coefficient of the
/// result is known up to `top`, then truncates to it.
QSeries build_to_top(const std::function<QSeries(HalfExp)>& build, HalfExp top);
PSeries build_to_top(const std::function<PSeries(HalfExp)>& build, HalfExp top);

/// Multiplies the series produced by `factors`, asking each for just enough
/// precision that the product is known up to `top`.
PSeries product_to_top(const std::vector<std::function<PSeries(HalfExp)>>& factors, HalfExp top);

}  // namespace topvert
