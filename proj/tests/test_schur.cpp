#include <doctest.h>

#include "helpers.hpp"
#include "topvert/partitions.hpp"
#include "topvert/products.hpp"
#include "topvert/schur.hpp"

using namespace topvert;
using topvert::testing::hx;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Sum over semistandard fillings of lambda/eta with entries 1..m, each entry
// i contributing the monomial for variable i.
PSeries tableau_sum(const Partition& lambda, const Partition& eta, const VarList& vars, int m, HalfExp top) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = eta[static_cast<std::size_t>(r)]; c < lambda[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
  std::map<std::pair<int, int>, int> fill;
  std::vector<std::pair<HalfExp, Rational>> terms;
  auto rec = [&](auto&& self, std::size_t t, HalfExp e, Rational c) -> void {
    if (t == cells.size()) {
      terms.emplace_back(e, c);
      return;
    }
    const auto [r, col] = cells[t];
    int lo = 1;
    if (auto it = fill.find({r, col - 1}); it != fill.end()) lo = std::max(lo, it->second);
    if (auto it = fill.find({r - 1, col}); it != fill.end()) lo = std::max(lo, it->second + 1);
    for (int v = lo; v <= m; ++v) {
      fill[{r, col}] = v;
      self(self, t + 1, e + vars.exponent(v), c * vars.scale_coeff);
    }
    fill.erase({r, col});
  };
  rec(rec, 0, HalfExp{}, Rational(1));
  return PSeries::from_terms(terms).clipped(top);
}

}  // namespace

TEST_CASE("principal complete homogeneous values") {
  const auto h = complete_homogeneous_exact(VarList::principal(), 2);
  CHECK(h[0] == RationalLaurent(Rational(1)));
  CHECK(h[1] == RationalLaurent::geometric(1, hx(0.5), 1));
  CHECK(h[2] == RationalLaurent(PSeries::monomial(1, hx(1)), {{1, 1}, {2, 1}}));

  const auto w = complete_homogeneous_window(VarList::principal(), 2, 6);
  CHECK(w[1] == h[1].expand(hx(6)));
  CHECK(w[1].top() == hx(6));
  CHECK(w[2] == h[2].expand(w[2].top()));
  CHECK_THROWS(complete_homogeneous_window(VarList{P({1}), 1, {}, -1}, 2, 3));
}

TEST_CASE("windowed skew Schur against tableaux") {
  const HalfExp top = hx(7);
  const std::vector<std::tuple<Partition, Partition, Partition>> cases{
      {P({2, 1}), {}, {}},
      {P({2, 2}), P({1}), {}},
      {P({3, 1}), P({1}), P({2})},
      {P({2, 1, 1}), {}, P({1, 1})},
      {P({1}), {}, P({3, 1})},
  };
  for (const auto& [lambda, eta, nu] : cases) {
    const VarList vars{nu, 1, {}, +1};
    HalfExp emin = vars.exponent(1);
    for (int i = 2; i <= std::max(nu.length(), 1); ++i) emin = min(emin, vars.exponent(i));
    // Enough variables that any monomial using one more exceeds top.
    int m = std::max(nu.length(), 1);
    while (vars.exponent(m + 1) + (lambda.size() - eta.size() - 1) * emin <= top) ++m;
    const PSeries oracle = tableau_sum(lambda, eta, vars, m, top);
    const PSeries w = skew_schur_window(lambda, eta, vars, top);
    CHECK(w.top() == top);
    CHECK(w == oracle);
    CHECK(skew_schur_exact(lambda, eta, vars).expand(top) == w);
  }
  CHECK(skew_schur_window(P({1}), P({2}), VarList::principal(), top).is_zero());
}

TEST_CASE("exact skew Schur with a scale and descending lists") {
  const VarList scaled{P({2, 1}), Rational(3, 2), hx(1.5), +1};
  const RationalLaurent e = skew_schur_exact(P({2, 1}), P({1}), scaled);
  const HalfExp top = hx(9);
  CHECK(e.expand(top) == skew_schur_window(P({2, 1}), P({1}), scaled, top));

  // p^(nu+rho) equals the reflection of p^(-nu-rho).
  const Partition nu = P({2});
  for (const auto& [lambda, eta] : std::vector<std::pair<Partition, Partition>>{
           {P({1}), {}}, {P({2, 1}), {}}, {P({2, 1}), P({1})}, {P({3}), P({1})}}) {
    const RationalLaurent down = skew_schur_exact(lambda, eta, VarList{nu, 1, {}, -1});
    const RationalLaurent up = skew_schur_exact(lambda, eta, VarList{nu, 1, {}, +1});
    CHECK(down == up.reflected());
  }
}

TEST_CASE("conjugation relation") {
  const auto parts = partitions_up_to(3);
  for (const auto& lambda : parts)
    for (const auto& eta : parts) {
      if (!lambda.contains(eta)) continue;
      for (const auto& nu : partitions_up_to(2)) CHECK(conjugation_relation_check(lambda, eta, nu));
    }
}

TEST_CASE("skew Schur formula against box counting") {
  for (const auto& legs : leg_triples_up_to(3)) {
    const long base = minimal_config(legs).base_volume;
    const HalfExp top = HalfExp::from_int(base + 5);
    const PSeries boxes = vertex_box_counting(legs, top);
    const PSeries orv = vertex_orv(legs, top);
    CAPTURE(legs.to_string());
    CHECK(orv.top() >= top);
    CHECK(orv.truncated(top) == boxes);
  }
}

TEST_CASE("variable count stability") {
  const LegTriple legs{P({2, 1}), P({1}), P({2})};
  const HalfExp top = hx(4);
  const PSeries a = vertex_orv(legs, top);
  const PSeries b = vertex_orv(legs, top, {3});
  CHECK(a.identical(b));
  int used_a = 0, used_b = 0;
  skew_schur_window(P({2, 1}), {}, VarList{P({1}), 1, {}, +1}, top, {}, &used_a);
  skew_schur_window(P({2, 1}), {}, VarList{P({1}), 1, {}, +1}, top, {2}, &used_b);
  CHECK(used_b == used_a + 2);
}

TEST_CASE("one- and two-box ratios") {
  const Partition box = Partition::box();
  CHECK(ratio_two_box({}) == RationalLaurent(Rational(1)) +
                                 RationalLaurent(PSeries::monomial(1, hx(1)), {{1, 2}}));
  for (const auto& lambda : partitions_up_to(4)) {
    CAPTURE(lambda.to_string());
    CHECK(descending_sum(lambda) == -ratio_box(lambda.conjugate()));
    const HalfExp top = HalfExp::from_int(lambda.size() + 4);
    const PSeries empty = vertex_orv(lambda, {}, {}, top + HalfExp::from_int(lambda[0] + lambda.length() + 2));
    const PSeries one = vertex_orv(lambda, box, {}, top);
    const PSeries two = vertex_orv(lambda, box, box, top);
    const PSeries via_one = (ratio_box(lambda).expand(top + hx(1)) * empty).shifted(hx(-0.5));
    const PSeries via_two = (ratio_two_box(lambda).expand(top + hx(1)) * empty).shifted(hx(-1));
    CHECK(via_one.top() >= top);
    CHECK(via_two.top() >= top);
    CHECK(via_one.truncated(top) == one);
    CHECK(via_two.truncated(top) == two);
  }
}
