#pragma once

#include <map>
#include <string>

#include "topvert/pseries.hpp"

namespace topvert {

/// An exact rational function of p^(1/2): a Laurent polynomial over a
/// product of factors (1 - p^i), i >= 1. Expansion is always ascending,
/// 1/(1 - p^i) = sum_k p^(ik).
class RationalLaurent {
 public:
  RationalLaurent() = default;
  RationalLaurent(const Rational& c);  // NOLINT(google-explicit-constructor)
  /// `numerator` must be exact. `denominator` maps i to the multiplicity of (1 - p^i).
  explicit RationalLaurent(PSeries numerator, std::map<int, int> denominator = {});

  static RationalLaurent monomial(const Rational& c, HalfExp e);
  /// c p^e / (1 - p^i)
  static RationalLaurent geometric(const Rational& c, HalfExp e, int i);
  /// 1 / (1 - p^(-i)) rewritten as -p^i / (1 - p^i).
  static RationalLaurent inverse_negative_factor(int i);

  const PSeries& numerator() const { return num_; }
  const std::map<int, int>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// The valuation of the ascending expansion.
  HalfExp valuation() const { return num_.valuation(); }

  PSeries expand(HalfExp top) const;
  /// Cancels every factor (1 - p^i) that divides the numerator.
  RationalLaurent reduced() const;
  /// p -> 1/p, rewritten over positive factors again.
  RationalLaurent reflected() const;
  RationalLaurent scaled(const Rational& c) const;
  RationalLaurent shifted(HalfExp e) const;

  RationalLaurent& operator+=(const RationalLaurent& o);
  RationalLaurent& operator-=(const RationalLaurent& o);
  RationalLaurent& operator*=(const RationalLaurent& o);
  friend RationalLaurent operator+(RationalLaurent a, const RationalLaurent& b) { return a += b; }
  friend RationalLaurent operator-(RationalLaurent a, const RationalLaurent& b) { return a -= b; }
  friend RationalLaurent operator*(RationalLaurent a, const RationalLaurent& b) { return a *= b; }
  friend RationalLaurent operator-(const RationalLaurent& a) { return a.scaled(Rational(-1)); }

  /// Decided by cross-multiplication; no expansion involved.
  friend bool operator==(const RationalLaurent& a, const RationalLaurent& b);

  std::string to_string() const;

 private:
  PSeries num_;
  std::map<int, int> den_;
};

/// (1 - p^i)^k as an exact polynomial.
PSeries one_minus_power(int i, int k);

RationalLaurent pow(const RationalLaurent& base, int exponent);

}  // namespace topvert
