#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "topvert/fock.hpp"
#include "topvert/products.hpp"
#include "topvert/schur.hpp"

using namespace topvert;
using topvert::testing::hx;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
MayaState vs(const Partition& p) { return MayaState::from_partition(p); }
FockVector basis(const Partition& p) { return FockVector::basis(vs(p), RationalLaurent(Rational(1))); }
const RationalLaurent one(Rational(1));

std::vector<MayaState> states_up_to(int n) {
  std::vector<MayaState> out;
  for (const auto& p : partitions_up_to(n)) out.push_back(vs(p));
  return out;
}

bool same(const FockVector& a, const FockVector& b) {
  const FockVector d = a - b;
  for (const auto& [s, c] : d.terms())
    if (!(c == RationalLaurent())) return false;
  return true;
}

}  // namespace

TEST_CASE("Maya states of partitions") {
  CHECK(vs({}) == MayaState());
  CHECK(vs(P({1})) == MayaState({1}, {-1}));
  CHECK(vs(P({1, 1})) == MayaState({1}, {-3}));
  CHECK(vs(P({2, 1})) == MayaState({3}, {-3}));
  for (const auto& p : partitions_up_to(8)) {
    const MayaState s = vs(p);
    CHECK(s.charge() == 0);
    CHECK(s.energy() == p.size());
    CHECK(s.to_partition() == p);
  }
  CHECK_THROWS(MayaState({1}, {}).to_partition());
  CHECK_THROWS(MayaState({2}, {}));
  CHECK_THROWS(MayaState({-1}, {}));
}

TEST_CASE("wedge signs") {
  // psi_{1/2} psi*_{-1/2} v_0 = v_(1) with sign +1.
  const FockVector v = apply_psi(1, apply_psi_star(-1, basis({})));
  CHECK(same(v, basis(P({1}))));
  CHECK(same(apply_psi(1, apply_psi_star(1, basis(P({1})))), basis(P({1}))));
  // v_(1,1) = 1/2 ^ -1/2 ^ -5/2 ...; removing -1/2 passes one vector.
  const FockVector w = apply_psi_star(-1, basis(P({1, 1})));
  REQUIRE(w.size() == 1);
  CHECK(w.terms().begin()->second == RationalLaurent(Rational(-1)));
  CHECK(apply_psi(1, basis(P({1}))).empty());
  CHECK(apply_psi_star(1, basis({})).empty());
}

TEST_CASE("canonical anticommutation") {
  for (const auto& s : states_up_to(6)) {
    const FockVector v = FockVector::basis(s, one);
    for (int j = -13; j <= 13; j += 2)
      for (int k = -13; k <= 13; k += 2) {
        const FockVector a = apply_psi(j, apply_psi_star(k, v)) + apply_psi_star(k, apply_psi(j, v));
        CHECK(same(a, j == k ? v : FockVector()));
        CHECK(same(apply_psi(j, apply_psi(k, v)) + apply_psi(k, apply_psi(j, v)), FockVector()));
        CHECK(same(apply_psi_star(j, apply_psi_star(k, v)) + apply_psi_star(k, apply_psi_star(j, v)),
                   FockVector()));
      }
  }
}

TEST_CASE("bosons") {
  CHECK(same(apply_alpha(1, basis(P({1}))), basis({})));
  CHECK(same(apply_alpha(-1, basis({})), basis(P({1}))));
  const FockVector vac = basis({});
  CHECK(same(apply_alpha(1, apply_alpha(-1, vac)) - apply_alpha(-1, apply_alpha(1, vac)), vac));
  // [alpha_m, alpha_n] = m delta_{m+n}
  for (const auto& s : states_up_to(4)) {
    const FockVector v = FockVector::basis(s, one);
    for (int m = -3; m <= 3; ++m)
      for (int n = -3; n <= 3; ++n) {
        if (m == 0 || n == 0) continue;
        const FockVector c = apply_alpha(m, apply_alpha(n, v)) - apply_alpha(n, apply_alpha(m, v));
        CHECK(same(c, m + n == 0 ? v.scaled(m) : FockVector()));
      }
  }
  // alpha_n adjoint to alpha_-n
  const auto states = states_up_to(5);
  for (const auto& a : states)
    for (const auto& b : states)
      for (int n = 1; n <= 3; ++n) {
        const FockVector u = FockVector::basis(a, one), w = FockVector::basis(b, one);
        CHECK(inner(apply_alpha(n, u), w) == inner(u, apply_alpha(-n, w)));
      }
}

TEST_CASE("power sums") {
  const auto p1 = power_sum(VarList::principal(), 1);
  CHECK(p1 == RationalLaurent::geometric(1, hx(0.5), 1));
  // Against direct summation of the windowed variables.
  const VarList vars{P({2, 1}), Rational(2), hx(0.5), +1};
  const PSeries direct = [&] {
    std::vector<std::pair<HalfExp, Rational>> t;
    for (int i = 1; i <= 40; ++i) t.emplace_back(2 * vars.exponent(i), 4);
    return PSeries::from_terms(t, hx(20));
  }();
  CHECK(power_sum(vars, 2).expand(hx(20)) == direct);
  // Descending lists are the reflections.
  const VarList down{P({2, 1}), 1, {}, -1};
  CHECK(power_sum(down, 3) == power_sum(VarList{P({2, 1}), 1, {}, +1}, 3).reflected());
}

TEST_CASE("Gamma matrix coefficients are skew Schur functions") {
  const VarList x = VarList::principal();
  const auto parts = partitions_up_to(5);
  for (const auto& mu : parts) {
    const FockVector down = apply_gamma(GammaSign::minus, x, basis(mu), 10);
    const FockVector up = apply_gamma(GammaSign::plus, x, basis(mu), 0);
    for (const auto& lambda : parts) {
      CAPTURE(lambda.to_string());
      CAPTURE(mu.to_string());
      CHECK(down.coefficient(vs(lambda)) == skew_schur_exact(lambda, mu, x));
      CHECK(up.coefficient(vs(lambda)) == skew_schur_exact(mu, lambda, x));
    }
  }
  CHECK(same(apply_gamma(GammaSign::plus, x, basis({}), 0), basis({})));
  CHECK_THROWS(apply_gamma(GammaSign::minus, x, basis(P({2})), 2));
}

TEST_CASE("Gamma adjointness") {
  const VarList x{{}, Rational(2, 3), {}, +1};
  const auto states = states_up_to(6);
  std::map<MayaState, FockVector> down, up;
  for (const auto& s : states) {
    down[s] = apply_gamma(GammaSign::minus, x, FockVector::basis(s, one), 12);
    up[s] = apply_gamma(GammaSign::plus, x, FockVector::basis(s, one), 0);
  }
  for (const auto& a : states)
    for (const auto& b : states) CHECK(down[a].coefficient(b) == up[b].coefficient(a));
}

TEST_CASE("windowed Gamma_- agrees with the exact one") {
  const VarList x = VarList::principal();
  const HalfExp top = hx(6);
  const WindowedFockVector w = apply_gamma_minus_window(x, vs(P({1})), {top});
  const FockVector exact = apply_gamma(GammaSign::minus, x, basis(P({1})), 2 * 14);
  for (const auto& [s, c] : exact.terms()) {
    const long d = s.energy() - 1;
    const HalfExp t = top - d * hx(0.5);
    if (t < HalfExp{}) continue;
    CAPTURE(s.to_string());
    const PSeries got = w.find(s) ? *w.find(s) : PSeries::zero(t);
    CHECK(got.top() >= t);
    CHECK(got == c.expand(t));
  }
  CHECK_THROWS(apply_gamma_minus_window(VarList{P({3}), 1, {}, +1}, vs({}), {top}));
}

TEST_CASE("E operators") {
  CHECK(e0_eigenvalue(MayaState()) == RationalLaurent::geometric(-1, hx(0.5), 1));
  for (const auto& lambda : partitions_up_to(6)) {
    const RationalLaurent e = e0_eigenvalue(vs(lambda));
    CHECK(e == descending_sum(lambda));
    CHECK(e == -ratio_box(lambda.conjugate()));
    const FockVector v = basis(lambda);
    CHECK(same(apply_E(0, v), FockVector::basis(vs(lambda), e)));
    for (int r = -3; r <= 3; ++r) {
      if (r == 0) continue;
      const FockVector moved = apply_E(r, v);
      for (const auto& [s, c] : moved.terms()) CHECK(s.energy() == lambda.size() - r);
    }
  }
  // E(a, p) = psi(a^-1 p^1/2) psi*(a^-1 p^-1/2)
  for (const auto& s : states_up_to(5)) {
    const FockVector v = FockVector::basis(s, one);
    const auto a = apply_E_a(v, 3);
    const auto b = apply_psi_pair_generating(v, 3, 2 * (5 + 3) + 5);
    for (int r = -3; r <= 3; ++r) CHECK(same(a.at(r), b.at(r)));
  }
}

TEST_CASE("q^H with a numerical q") {
  const VarList x = VarList::principal();
  for (const Rational q : {Rational(2), Rational(3)}) {
    VarList qx = x, qinv = x;
    qx.scale_coeff = q;
    qinv.scale_coeff = 1 / q;
    for (const auto& mu : partitions_up_to(4)) {
      const FockVector v = basis(mu);
      // Gamma_-(x) q^H = q^H Gamma_-(x/q), Gamma_+(x) q^H = q^H Gamma_+(q x)
      CHECK(same(apply_gamma(GammaSign::minus, x, apply_q_energy(q, v), 8),
                 apply_q_energy(q, apply_gamma(GammaSign::minus, qinv, v, 8))));
      CHECK(same(apply_gamma(GammaSign::plus, x, apply_q_energy(q, v), 8),
                 apply_q_energy(q, apply_gamma(GammaSign::plus, qx, v, 8))));
    }
  }
}
