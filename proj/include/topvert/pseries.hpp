#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "topvert/errors.hpp"
#include "topvert/half_exp.hpp"
#include "topvert/rational.hpp"

namespace topvert {

/// Laurent series in p^(1/2) with rational coefficients, bounded below and
/// known exactly up to an inclusive window top. An unbounded top means the
/// stored terms are the whole series (a Laurent polynomial).
///
/// Storage is dense in half-steps starting at the lowest nonzero term.
class PSeries {
 public:
  /// The exact zero series.
  PSeries() = default;

  static PSeries zero(HalfExp top) {
    PSeries s;
    s.top_ = top;
    return s;
  }
  static PSeries monomial(const Rational& c, HalfExp e,
                          HalfExp top = HalfExp::unbounded());
  static PSeries constant(const Rational& c) { return monomial(c, HalfExp{}); }
  /// Terms above `top` are dropped; repeated exponents accumulate.
  static PSeries from_terms(const std::vector<std::pair<HalfExp, Rational>>& terms,
                            HalfExp top = HalfExp::unbounded());

  HalfExp top() const { return top_; }
  bool is_exact() const { return top_.is_unbounded(); }
  /// True when no nonzero coefficient is known (the series vanishes on its window).
  bool is_zero() const { return c_.empty(); }

  /// First nonzero exponent. A series that vanishes on its window reports
  /// top + 1/2, which is a valid lower bound for its true valuation.
  HalfExp valuation() const;
  /// Highest stored nonzero exponent; throws on a zero series.
  HalfExp degree() const;

  /// Throws WindowError above the window top.
  Rational coeff(HalfExp e) const;
  std::vector<std::pair<HalfExp, Rational>> terms() const;

  /// Restricts the window; asking for a larger window than known throws.
  PSeries truncated(HalfExp top) const;
  /// Same as truncated() but silently keeps the current top if it is lower.
  PSeries clipped(HalfExp top) const;
  PSeries shifted(HalfExp e) const;
  PSeries scaled(const Rational& c) const;
  /// p d/dp, applied termwise.
  PSeries p_derivative() const;
  /// Substitutes p -> 1/p. Only defined for exact series.
  PSeries reflected() const;
  /// Declares a windowed result to be a complete Laurent polynomial. Callers
  /// use this only where a degree bound below the window top is known.
  PSeries promoted_to_exact() const;

  /// Multiplicative inverse. For an exact non-monomial input the result top
  /// must be supplied; otherwise the top follows from the relative precision
  /// and `want` can only lower it.
  PSeries inverse(std::optional<HalfExp> want = std::nullopt) const;

  PSeries& operator+=(const PSeries& o);
  PSeries& operator-=(const PSeries& o);
  /// this += c * p^shift * o, in place.
  void add_scaled_shifted(const PSeries& o, const Rational& c, HalfExp shift);

  friend PSeries operator+(PSeries a, const PSeries& b) { return a += b; }
  friend PSeries operator-(PSeries a, const PSeries& b) { return a -= b; }
  friend PSeries operator-(const PSeries& a) { return a.scaled(Rational(-1)); }
  friend PSeries operator*(const PSeries& a, const PSeries& b);
  /// The product, computed only up to `cap`.
  friend PSeries multiply(const PSeries& a, const PSeries& b, HalfExp cap);
  friend PSeries operator*(const PSeries& a, const Rational& c) { return a.scaled(c); }
  friend PSeries operator*(const Rational& c, const PSeries& a) { return a.scaled(c); }

  /// Agreement on the common part of both windows.
  friend bool operator==(const PSeries& a, const PSeries& b);
  /// Exact equality including the window.
  bool identical(const PSeries& o) const;

 private:
  void normalize();
  std::int64_t hi_twice() const { return lo_ + static_cast<std::int64_t>(c_.size()) - 1; }
  const Rational* find(std::int64_t twice) const;

  std::int64_t lo_ = 0;
  std::vector<Rational> c_;
  HalfExp top_ = HalfExp::unbounded();
};

struct CoeffMismatch {
  int q = 0;
  HalfExp p;
  Rational lhs;
  Rational rhs;
};

/// Coefficients of exponents <= hi that differ. Everything below the window
/// is compared as well, since both series are exact there; `lo` only matters
/// as the lowest exponent guaranteed to be examined. Throws WindowError when
/// either series is not known up to `hi`.
std::vector<CoeffMismatch> compare(const PSeries& a, const PSeries& b, HalfExp lo, HalfExp hi,
                                   int q = 0);

PSeries multiply(const PSeries& a, const PSeries& b, HalfExp cap);
PSeries pow(const PSeries& base, unsigned exponent);

}  // namespace topvert
