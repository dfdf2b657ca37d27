#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "topvert/products.hpp"

using namespace topvert;
using topvert::testing::hx;
using topvert::testing::int_coeffs;
using topvert::testing::series;

TEST_CASE("half exponents") {
  CHECK(hx(1.5).twice() == 3);
  CHECK(hx(-0.5).floor() == -1);
  CHECK(hx(-0.5).ceil() == 0);
  CHECK(hx(2).to_string() == "2");
  CHECK(hx(-1.5).to_string() == "-3/2");
  CHECK((HalfExp::unbounded() + hx(-100)).is_unbounded());
}

TEST_CASE("ring operations on p-series") {
  const PSeries one_plus = series({1, 1});
  const PSeries one_minus = series({1, -1});
  CHECK((one_plus * one_minus).identical(series({1, 0, -1})));

  const PSeries a = PSeries::monomial(1, hx(-0.5));
  const PSeries b = PSeries::monomial(1, hx(0.5));
  CHECK((a * b).identical(PSeries::constant(1)));

  const PSeries m = macmahon(hx(6));
  CHECK(int_coeffs(m * one_minus, 0, 6) == std::vector<long>{1, 0, 2, 3, 7, 11, 24});
  CHECK((m * one_minus).top() == hx(6));
}

TEST_CASE("windows shrink by the other factor's valuation") {
  const PSeries w = series({1, 1, 1}, 0, hx(2));
  const PSeries x = PSeries::monomial(1, hx(-3));
  CHECK((w * x).top() == hx(-1));
  CHECK((w + series({5}, 0, hx(1))).top() == hx(1));
  CHECK_THROWS_AS(w.truncated(hx(3)), WindowError);
  CHECK_THROWS_AS(w.coeff(hx(2.5)), WindowError);
}

TEST_CASE("inversion") {
  const PSeries g = series({1, -1}).inverse(hx(5));
  CHECK(int_coeffs(g, 0, 5) == std::vector<long>{1, 1, 1, 1, 1, 1});
  CHECK(PSeries::monomial(1, hx(0.5)).inverse().identical(PSeries::monomial(1, hx(-0.5))));
  const PSeries mi = macmahon(hx(4)).inverse();
  CHECK(mi.top() == hx(4));
  CHECK(int_coeffs(mi, 0, 4) == std::vector<long>{1, -1, -2, -1, 0});
  CHECK_THROWS_AS(PSeries().inverse(), NotInvertible);
  CHECK_THROWS_AS(PSeries::zero(hx(3)).inverse(), NotInvertible);
  // A shifted series gives the negated valuation and a reduced top.
  const PSeries s = series({2, 1}, -1, hx(3));
  const PSeries si = s.inverse();
  CHECK(si.valuation() == hx(1));
  CHECK(si.top() == hx(5));
  CHECK((s * si) == PSeries::constant(1));
}

TEST_CASE("q-series ring") {
  const int n = 6;
  QSeries one_minus_q(n);
  one_minus_q[0] = PSeries::constant(1);
  one_minus_q[1] = PSeries::constant(-1);
  const QSeries prod = one_minus_q * qs_invert(one_minus_q);
  CHECK(compare(prod, QSeries::constant(PSeries::constant(1), n), hx(0), hx(0)).empty());

  const auto poch = q_pochhammer_factors(5, 1);
  const QSeries inv = qs_invert(euler_product(poch, 5, HalfExp::unbounded()));
  CHECK(inv[5].identical(PSeries::constant(7)));

  CHECK_THROWS(QSeries(3) * QSeries(4));
}

TEST_CASE("theta times its inverse") {
  const int n = 4;
  const QSeries th = theta_series(n, hx(4.5));
  const QSeries r = build_to_top([&](HalfExp t) { return th * qs_invert(th, t); }, hx(6));
  CHECK(compare(r, QSeries::constant(PSeries::constant(1), n), hx(-6), hx(6)).empty());
}

TEST_CASE("euler products") {
  const PSeries m = macmahon(hx(6));
  CHECK(int_coeffs(m, 0, 6) == std::vector<long>{1, 1, 3, 6, 13, 24, 48});
  for (int k = 0; k <= 6; ++k)
    CHECK(m.coeff(HalfExp::from_int(k)) == topvert::testing::count_plane_partitions(k));

  const auto poch = q_pochhammer_factors(4, -1);
  CHECK(euler_product(poch, 4, HalfExp::unbounded())[4].identical(PSeries::constant(5)));

  const QSeries mpq = euler_product(macmahon_q_family(1), 1, hx(8));
  for (int m2 = 1; m2 <= 8; ++m2) CHECK(mpq[1].coeff(HalfExp::from_int(m2)) == m2);
  CHECK(mpq[1].coeff(hx(0)) == 0);

  const EulerFactor bad{HalfExp{}, 0, -1};
  CHECK_THROWS_WITH(euler_product(std::span(&bad, 1), 2, hx(3)), "non-unit factor");
}

TEST_CASE("euler products are window stable") {
  std::vector<EulerFactor> f = p_pair_factors(4, -1);
  const auto m = macmahon_q_family(4)(hx(20));
  f.insert(f.end(), m.begin(), m.end());
  const QSeries small = euler_product(f, 4, hx(5));
  const QSeries big = euler_product(f, 4, hx(9));
  CHECK(compare(small, big.truncated(hx(5)), hx(-5), hx(5)).empty());
  CHECK(small[4].valuation() == hx(-4));
}

TEST_CASE("theta series") {
  const int n = 5;
  const QSeries th = theta_series(n, hx(5.5));
  CHECK(th[0].identical(PSeries::from_terms({{hx(0.5), Rational(1)}, {hx(-0.5), Rational(-1)}})));
  for (int d = 0; d <= n; ++d) CHECK(th[d].reflected().identical(-th[d]));
  CHECK_THROWS_AS(theta_series(n, hx(5)), WindowError);

  // prod (1-q^m)^3 * Theta against the theta sum; the q^(1/8) offsets of
  // eta^3 and of the sum side match, so only integral parts are compared.
  const QSeries cube = euler_product(q_pochhammer_factors(n, 3), n, HalfExp::unbounded());
  const QSeries lhs = cube * th;
  QSeries rhs(n);
  for (int k = -n - 1; k <= n; ++k) {
    const int q = k * (k + 1) / 2;
    if (q > n) continue;
    rhs[q] += PSeries::monomial(k % 2 == 0 ? 1 : -1, HalfExp::from_twice(2 * k + 1));
  }
  CHECK(compare(lhs, rhs, hx(-10), hx(10)).empty());

  const ShiftedQSeries eta = eta_series(n);
  CHECK(eta.offset == Rational(1, 24));
  CHECK(eta.series[1].identical(PSeries::constant(-1)));
}

TEST_CASE("rational forms") {
  const RationalLaurent g = RationalLaurent::geometric(1, hx(0.5), 1);
  const PSeries e = g.expand(hx(4.5));
  for (int t = 1; t <= 9; t += 2) CHECK(e.coeff(HalfExp::from_twice(t)) == 1);
  CHECK(e.coeff(hx(1)) == 0);

  // 1/((1-p)(1-1/p)) = -p/(1-p)^2
  const RationalLaurent lhs =
      RationalLaurent(PSeries::constant(1), {{1, 1}}) * RationalLaurent::inverse_negative_factor(1);
  const RationalLaurent rhs(PSeries::monomial(-1, hx(1)), {{1, 2}});
  CHECK(lhs == rhs);

  const RationalLaurent q(one_minus_power(2, 1), {{1, 1}});
  CHECK(q == RationalLaurent(series({1, 1})));
  CHECK(q.reduced().denominator().empty());
  CHECK(q.reduced().numerator().identical(series({1, 1})));
  CHECK_FALSE(q == RationalLaurent(series({1, 2})));

  const RationalLaurent d = half_difference_power(1);
  CHECK(pow(d, -1) == half_difference_power(-1));
  CHECK(pow(d, -2) == half_difference_power(-2));
  CHECK(d.reflected() == -d);
}

TEST_CASE("rational expansion equals numerator times inverted denominator") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), expo(-4, 4), fac(1, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::pair<HalfExp, Rational>> t;
    for (int k = 0; k < 3; ++k) t.emplace_back(HalfExp::from_twice(expo(rng)), Rational(coef(rng)));
    const PSeries num = PSeries::from_terms(t);
    std::map<int, int> den{{fac(rng), 1}, {fac(rng), 1}};
    const RationalLaurent r(num, den);
    const HalfExp top = hx(6);
    PSeries denom = PSeries::constant(1);
    for (const auto& [i, k] : den) denom = denom * one_minus_power(i, k);
    const PSeries ref = (num * denom.inverse(hx(12))).truncated(top);
    CHECK(r.expand(top) == ref);
    CHECK(r.expand(top).top() == top);
  }
}

TEST_CASE("ring axioms on random windowed series") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4), lo(-3, 3), len(1, 6), top(3, 8);
  auto random_series = [&] {
    std::vector<std::pair<HalfExp, Rational>> t;
    const int start = lo(rng);
    for (int k = 0, n = len(rng); k < n; ++k)
      t.emplace_back(HalfExp::from_twice(start + k), Rational(coef(rng), 1 + (k % 2)));
    return PSeries::from_terms(t, HalfExp::from_int(top(rng)));
  };
  for (int trial = 0; trial < 50; ++trial) {
    const PSeries a = random_series(), b = random_series(), c = random_series();
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * (b + c)) == (a * b + a * c));
    CHECK((a + b) == (b + a));
    CHECK((a * b).top() == (b * a).top());
  }
}

TEST_CASE("triple product graded by a") {
  const auto rep = jacobi_triple_product_a(10, 5);
  CHECK(rep.pass());
  const auto& a0 = rep.product.at(0);
  CHECK(a0[0] == 1);
  for (std::size_t k = 1; k < a0.size(); ++k) CHECK(a0[k] == 0);
  CHECK(rep.product.at(1)[0] == -1);
  CHECK(rep.product.at(2)[1] == 1);
  CHECK(rep.product.at(2)[0] == 0);
}

TEST_CASE("divisor sums") {
  CHECK(divisor_sigma(6) == std::vector<long>{0, 1, 3, 4, 7, 6, 12});
}
