#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "topvert/qseries.hpp"
#include "topvert/rational_laurent.hpp"

namespace topvert {

/// The factor (1 - coeff * p^p_exp * q^q_exp)^exponent.
struct EulerFactor {
  HalfExp p_exp;
  int q_exp = 0;
  long exponent = 1;
  Rational coeff = 1;
};

/// Produces the factors whose p-exponent can matter below `max_p`. Infinite
/// families (MacMahon and relatives) are expressed this way.
using FactorSource = std::function<std::vector<EulerFactor>(HalfExp max_p)>;

/// Truncated expansion of a product of Euler factors, every q-coefficient
/// known up to `top`. Factors that cannot reach the window are skipped.
QSeries euler_product(const FactorSource& source, int order, HalfExp top);
QSeries euler_product(std::span<const EulerFactor> factors, int order, HalfExp top);

/// M(p) = prod_m (1 - p^m)^(-m)
PSeries macmahon(HalfExp top);
/// Factors of prod_{d=1..order} M(p, c q^d)^power.
FactorSource macmahon_q_family(int order, long power = 1, Rational coeff = 1);
/// Factors of prod_{d=1..order} (1 - q^d)^power.
std::vector<EulerFactor> q_pochhammer_factors(int order, long power);
/// prod_{d=1..order} (1 - p q^d)^power (1 - p^-1 q^d)^power
std::vector<EulerFactor> p_pair_factors(int order, long power);

/// Theta(p, q) = (p^1/2 - p^-1/2) prod_m (1 - p q^m)(1 - p^-1 q^m)/(1 - q^m)^2.
/// Every q-coefficient is a Laurent polynomial, returned exactly. The window
/// top must be at least order + 1/2.
QSeries theta_series(int order, HalfExp top);

/// eta(q) = q^(1/24) prod_m (1 - q^m) with the prefactor kept symbolic.
ShiftedQSeries eta_series(int order);

/// D = p^1/2 - p^-1/2 raised to an integer power, as a rational form.
RationalLaurent half_difference_power(int exponent);

/// Exact coefficients of a series in q and a formal parameter a.
using AQPolynomial = std::map<int, std::vector<Rational>>;

struct TripleProductReport {
  int order = 0;
  int radius = 0;
  AQPolynomial product;  // prod_m (1 - q^m/a)(1 - q^(m-1) a)(1 - q^m)
  AQPolynomial sum;      // sum_n q^C(n,2) (-a)^n
  std::map<int, bool> agrees;  // per power of a in [-radius, radius]
  bool pass() const;
};

TripleProductReport jacobi_triple_product_a(int order, int radius);

/// sigma(d) = sum of the divisors of d, for d = 0..order (sigma(0) = 0).
std::vector<long> divisor_sigma(int order);

}  // namespace topvert
