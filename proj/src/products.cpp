#include "topvert/products.hpp"

#include <algorithm>
#include <stdexcept>

namespace topvert {

namespace {

// Generalized binomial coefficient C(e, k).
Rational binomial(long e, long k) {
  Rational r(1);
  for (long i = 0; i < k; ++i) r = r * Rational(e - i) / Rational(i + 1);
  return r;
}

// Extra precision needed because factors with negative p-exponent push
// coefficients of q^d below p^0.
HalfExp headroom(std::span<const EulerFactor> factors, int order) {
  Rational rate(0);
  std::int64_t fixed = 0;
  for (const auto& f : factors) {
    if (f.p_exp.twice() >= 0 || f.q_exp > order) continue;
    if (f.q_exp == 0) {
      if (f.exponent < 0) throw std::invalid_argument("factor with negative p-power cannot be expanded");
      fixed += -f.p_exp.twice() * f.exponent;
    } else {
      rate = std::max(rate, Rational(-f.p_exp.twice(), f.q_exp));
    }
  }
  Rational total = rate * order;
  mpz_class ceil_twice;
  mpz_cdiv_q(ceil_twice.get_mpz_t(), total.get_num_mpz_t(), total.get_den_mpz_t());
  return HalfExp::from_twice(ceil_twice.get_si() + fixed);
}

void apply_factor(QSeries& acc, const EulerFactor& f, HalfExp internal_top) {
  const int order = acc.order();
  if (f.q_exp > order || f.exponent == 0 || sgn(f.coeff) == 0) return;
  const HalfExp a = f.p_exp;
  const int b = f.q_exp;
  if (b == 0 && a.twice() == 0) {
    const Rational base = 1 - f.coeff;
    if (sgn(base) == 0) {
      if (f.exponent < 0) throw std::invalid_argument("non-unit factor");
      for (int d = 0; d <= order; ++d) acc[d] = PSeries::zero(acc[d].top());
      return;
    }
    Rational scale(1);
    for (long i = 0; i < std::labs(f.exponent); ++i) scale *= base;
    if (f.exponent < 0) scale = 1 / scale;
    for (int d = 0; d <= order; ++d) acc[d] = acc[d].scaled(scale);
    return;
  }
  if (a.twice() > 0 && a > internal_top) return;

  std::vector<Rational> t{Rational(1)};
  for (long k = 1;; ++k) {
    if (b > 0 && static_cast<long>(b) * k > order) break;
    if (a.twice() > 0 && (k * a) > internal_top) break;
    if (f.exponent >= 0 && k > f.exponent) break;
    Rational c = binomial(f.exponent, k);
    for (long i = 0; i < k; ++i) c *= -f.coeff;
    t.push_back(c);
  }
  const long kmax = static_cast<long>(t.size()) - 1;
  if (kmax == 0) return;
  if (b > 0) {
    for (int d = order; d >= 0; --d)
      for (long k = 1; k <= kmax && d - b * k >= 0; ++k)
        acc[d].add_scaled_shifted(acc[static_cast<int>(d - b * k)], t[static_cast<std::size_t>(k)], k * a);
  } else {
    for (int d = 0; d <= order; ++d) {
      const PSeries old = acc[d];
      for (long k = 1; k <= kmax; ++k) acc[d].add_scaled_shifted(old, t[static_cast<std::size_t>(k)], k * a);
    }
  }
}

QSeries expand_factors(std::span<const EulerFactor> factors, int order, HalfExp internal_top) {
  QSeries acc(order, PSeries::zero(internal_top));
  acc[0] = PSeries::monomial(Rational(1), HalfExp{}, internal_top);
  for (const auto& f : factors) apply_factor(acc, f, internal_top);
  return acc;
}

}  // namespace

QSeries euler_product(const FactorSource& source, int order, HalfExp top) {
  const std::vector<EulerFactor> probe = source(top);
  const HalfExp internal = top + headroom(probe, order);
  const std::vector<EulerFactor> factors = source(internal);
  return expand_factors(factors, order, internal).truncated(top);
}

QSeries euler_product(std::span<const EulerFactor> factors, int order, HalfExp top) {
  const HalfExp internal = top + headroom(factors, order);
  return expand_factors(factors, order, internal).truncated(top);
}

PSeries macmahon(HalfExp top) {
  FactorSource source = [](HalfExp max_p) {
    std::vector<EulerFactor> f;
    for (long m = 1; m <= max_p.floor(); ++m) f.push_back({HalfExp::from_int(m), 0, -m});
    return f;
  };
  return euler_product(source, 0, top)[0];
}

FactorSource macmahon_q_family(int order, long power, Rational coeff) {
  return [order, power, coeff](HalfExp max_p) {
    std::vector<EulerFactor> f;
    for (int d = 1; d <= order; ++d)
      for (long m = 1; m <= max_p.floor(); ++m) f.push_back({HalfExp::from_int(m), d, -m * power, coeff});
    return f;
  };
}

std::vector<EulerFactor> q_pochhammer_factors(int order, long power) {
  std::vector<EulerFactor> f;
  for (int d = 1; d <= order; ++d) f.push_back({HalfExp{}, d, power});
  return f;
}

std::vector<EulerFactor> p_pair_factors(int order, long power) {
  std::vector<EulerFactor> f;
  for (int d = 1; d <= order; ++d) {
    f.push_back({HalfExp::from_int(1), d, power});
    f.push_back({HalfExp::from_int(-1), d, power});
  }
  return f;
}

QSeries theta_series(int order, HalfExp top) {
  if (top < HalfExp::from_twice(2 * order + 1))
    throw WindowError("theta series needs window top >= order + 1/2");
  std::vector<EulerFactor> f = p_pair_factors(order, 1);
  const auto poch = q_pochhammer_factors(order, -2);
  f.insert(f.end(), poch.begin(), poch.end());
  // The q^d coefficient of the product spans p^-d .. p^d, so a window top of
  // `order` already holds every term.
  QSeries body = euler_product(f, order, HalfExp::from_int(order));
  const PSeries d = half_difference_power(1).numerator();
  QSeries out(order);
  for (int k = 0; k <= order; ++k) out[k] = body[k].promoted_to_exact() * d;
  return out;
}

ShiftedQSeries eta_series(int order) {
  const auto f = q_pochhammer_factors(order, 1);
  return {Rational(1, 24), euler_product(f, order, HalfExp::unbounded())};
}

RationalLaurent half_difference_power(int exponent) {
  if (exponent >= 0) {
    const PSeries d = PSeries::from_terms(
        {{HalfExp::half(), Rational(1)}, {-HalfExp::half(), Rational(-1)}});
    return RationalLaurent(pow(d, static_cast<unsigned>(exponent)));
  }
  const int n = -exponent;
  return RationalLaurent(PSeries::monomial(Rational(n % 2 == 0 ? 1 : -1), HalfExp::from_twice(n)),
                         {{1, n}});
}

bool TripleProductReport::pass() const {
  return std::all_of(agrees.begin(), agrees.end(), [](const auto& kv) { return kv.second; });
}

TripleProductReport jacobi_triple_product_a(int order, int radius) {
  TripleProductReport rep;
  rep.order = order;
  rep.radius = radius;
  const auto blank = std::vector<Rational>(static_cast<std::size_t>(order) + 1);

  AQPolynomial prod;
  prod[0] = blank;
  prod[0][0] = 1;
  auto times = [&](int q_shift, int a_shift) {
    AQPolynomial next = prod;
    for (const auto& [a, coeffs] : prod) {
      auto& dst = next.try_emplace(a + a_shift, blank).first->second;
      for (int j = 0; j + q_shift <= order; ++j)
        dst[static_cast<std::size_t>(j + q_shift)] -= coeffs[static_cast<std::size_t>(j)];
    }
    prod = std::move(next);
  };
  for (int m = 1; m <= order; ++m) times(m, -1);
  for (int m = 1; m <= order + 1; ++m) times(m - 1, 1);
  for (int m = 1; m <= order; ++m) times(m, 0);
  std::erase_if(prod, [](const auto& kv) {
    return std::all_of(kv.second.begin(), kv.second.end(), [](const Rational& c) { return sgn(c) == 0; });
  });
  rep.product = prod;

  for (int n = -order - 2; n <= order + 2; ++n) {
    const long c = static_cast<long>(n) * (n - 1) / 2;
    if (c > order) continue;
    auto& dst = rep.sum.try_emplace(n, blank).first->second;
    dst[static_cast<std::size_t>(c)] += (n % 2 == 0) ? 1 : -1;
  }

  for (int n = -radius; n <= radius; ++n) {
    auto p = rep.product.find(n);
    auto s = rep.sum.find(n);
    const auto& pv = p == rep.product.end() ? blank : p->second;
    const auto& sv = s == rep.sum.end() ? blank : s->second;
    rep.agrees[n] = (pv == sv);
  }
  return rep;
}

std::vector<long> divisor_sigma(int order) {
  std::vector<long> s(static_cast<std::size_t>(order) + 1, 0);
  for (int k = 1; k <= order; ++k)
    for (int d = k; d <= order; d += k) s[static_cast<std::size_t>(d)] += k;
  return s;
}

}  // namespace topvert
