#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "topvert/dt.hpp"
#include "topvert/products.hpp"
#include "topvert/rational_laurent.hpp"

using namespace topvert;
using topvert::testing::hx;
using topvert::testing::int_coeffs;

namespace {

std::string text(const Report& r) {
  std::ostringstream out;
  write_report(out, r, OutputFormat::text);
  return out.str();
}

}  // namespace

TEST_CASE("case parsing and genus rules") {
  using K = DtCase::Kind;
  CHECK(DtCase::parse_kind("BpF") == K::BpF);
  CHECK(DtCase::parse_kind("N") == K::Nfib);
  CHECK_THROWS_AS(DtCase::parse_kind("X"), std::invalid_argument);
  CHECK_THROWS_AS(DtCase::make(K::BF), std::invalid_argument);
  CHECK_THROWS_AS(DtCase::make(K::F, 1), std::invalid_argument);
  CHECK_THROWS_AS(DtCase::make(K::BN, -1), std::invalid_argument);
  CHECK(DtCase::make(K::BN, 2).genus == 2);
}

TEST_CASE("fiber series counts partitions") {
  const QSeries f = dt_series(DtCase::make(DtCase::Kind::F), 6, hx(3));
  const std::vector<long> expected{1, 1, 2, 3, 5, 7, 11};
  for (int d = 0; d <= 6; ++d) CHECK(int_coeffs(f[d], -2, 3) == std::vector<long>{0, 0, expected[d], 0, 0, 0});
}

TEST_CASE("genus one section over the fiber") {
  // M(p)^-1 prod (1-q^d)/((1-p q^d)(1-q^d/p)); q^0 is 1/M(p).
  const QSeries bf = dt_series(DtCase::make(DtCase::Kind::BF, 1), 2, hx(4));
  CHECK(int_coeffs(bf[0], 0, 4) == int_coeffs(macmahon(hx(4)).inverse(hx(4)), 0, 4));
  CHECK(int_coeffs(bf[0], 0, 4) == std::vector<long>{1, -1, -2, -1, 0});
  // q^1 of prod(...) is p + 1/p - 1; times 1/M(p).
  const PSeries q1 = (PSeries::from_terms({{hx(-1), 1}, {hx(0), -1}, {hx(1), 1}}) * macmahon(hx(6)).inverse(hx(6))).truncated(hx(4));
  CHECK(compare(bf[1], q1, hx(-2), hx(4)).empty());
}

TEST_CASE("genus zero prefactor expands ascending") {
  // (p^1/2 - p^-1/2)^-2 = p/(1-p)^2
  const PSeries d = half_difference_power(-2).expand(hx(5));
  CHECK(int_coeffs(d, 0, 4) == std::vector<long>{0, 1, 2, 3, 4});
  const QSeries bf = dt_series(DtCase::make(DtCase::Kind::BF, 0), 1, hx(4));
  // M(p) p/(1-p)^2 at q^0.
  const PSeries expected = (macmahon(hx(5)) * d.truncated(hx(5))).truncated(hx(4));
  CHECK(compare(bf[0], expected, hx(-2), hx(4)).empty());
}

TEST_CASE("Jacobi-form pieces") {
  const QSeries wp = wp_series(3, hx(3));
  CHECK(wp[0].coeff(hx(0)) == Rational(1, 12));
  CHECK(int_coeffs(wp[0], 1, 3) == std::vector<long>{1, 2, 3});
  // q^2: 1(p - 2 + 1/p) + 2(p^2 - 2 + p^-2)
  CHECK(int_coeffs(wp[2], -2, 2) == std::vector<long>{2, 1, -6, 1, 2});
  const QSeries g2 = g2_series(3);
  CHECK(g2_series(4)[4].coeff(hx(0)) == 7);
  CHECK(g2[0].coeff(hx(0)) == Rational(-1, 24));
  CHECK(g2[1].coeff(hx(0)) == 1);
  const QSeries sum = wp + g2 + g2 + QSeries::constant(PSeries::constant(1), 3).truncated(hx(3));
  CHECK(sum[0].coeff(hx(0)) == 1);
}

TEST_CASE("quotient identities") {
  for (int g : {0, 1, 2}) {
    const Report r = dt_quotient_checks(3, hx(-6), hx(6), g);
    INFO(text(r));
    CHECK(r.pass());
  }
}

TEST_CASE("series agree with the vertex-sum products") {
  const Report r = dt_consistency_checks(4, hx(-8), hx(8));
  INFO(text(r));
  CHECK(r.pass());
}
