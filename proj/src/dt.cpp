#include "topvert/dt.hpp"

#include <cstdlib>
#include <stdexcept>

#include "topvert/identities.hpp"
#include "topvert/partitions.hpp"
#include "topvert/products.hpp"
#include "topvert/rational_laurent.hpp"

namespace topvert {

DtCase DtCase::make(Kind kind, std::optional<int> genus) {
  if (needs_genus(kind) != genus.has_value())
    throw std::invalid_argument(needs_genus(kind) ? "this case needs a genus" : "this case takes no genus");
  if (genus && *genus < 0) throw std::invalid_argument("genus must be nonnegative");
  return {kind, genus.value_or(0)};
}

DtCase::Kind DtCase::parse_kind(const std::string& name) {
  if (name == "F") return Kind::F;
  if (name == "BF") return Kind::BF;
  if (name == "N" || name == "Nfib") return Kind::Nfib;
  if (name == "BN") return Kind::BN;
  if (name == "BpF") return Kind::BpF;
  throw std::invalid_argument("unknown case '" + name + "'");
}

std::string DtCase::name() const {
  switch (kind) {
    case Kind::F: return "F";
    case Kind::BF: return "BF";
    case Kind::Nfib: return "N";
    case Kind::BN: return "BN";
    case Kind::BpF: return "BpF";
  }
  return "?";
}

namespace {

PSeries macmahon_power(int k, HalfExp top) {
  const PSeries m = k >= 0 ? macmahon(top) : macmahon(top).inverse(top);
  PSeries out = PSeries::constant(1);
  for (int i = 0; i < std::abs(k); ++i) out = out * m;
  return out.truncated(top);
}

// M(p)^m (p^1/2 - p^-1/2)^d
PSeries prefactor(int m, int d, HalfExp top) {
  return build_to_top(
      [&](HalfExp t) {
        const HalfExp wide = t + HalfExp::from_int(std::abs(d));
        return macmahon_power(m, wide) * half_difference_power(d).expand(wide);
      },
      top);
}

std::vector<EulerFactor> concat(std::vector<EulerFactor> a, const std::vector<EulerFactor>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

QSeries body(DtCase::Kind kind, int order, HalfExp top) {
  using K = DtCase::Kind;
  switch (kind) {
    case K::F:
      return euler_product(q_pochhammer_factors(order, -1), order, top);
    case K::BF:
      return euler_product(concat(q_pochhammer_factors(order, 1), p_pair_factors(order, -1)), order, top);
    case K::Nfib:
    case K::BN: {
      const auto fixed = kind == K::Nfib ? q_pochhammer_factors(order, -1) : p_pair_factors(order, -1);
      const FactorSource family = macmahon_q_family(order);
      const FactorSource source = [&](HalfExp max_p) { return concat(family(max_p), fixed); };
      return euler_product(source, order, top);
    }
    case K::BpF:
      return euler_product(q_pochhammer_factors(order, -1), order, top) * two_box_braces(order, top);
  }
  throw std::logic_error("unknown case");
}

std::pair<int, int> prefactor_exponents(const DtCase& c) {
  const int g = c.genus;
  switch (c.kind) {
    case DtCase::Kind::F: return {0, 0};
    case DtCase::Kind::BF: return {1 - 2 * g, 2 * g - 2};
    case DtCase::Kind::Nfib: return {1, 0};
    case DtCase::Kind::BN: return {2 - 2 * g, 2 * g - 2};
    case DtCase::Kind::BpF: return {-2 * g, 2 * g};
  }
  throw std::logic_error("unknown case");
}

QSeries times(const PSeries& c, const QSeries& s) { return s.scaled(c); }

}  // namespace

QSeries dt_series(const DtCase& c, int order, HalfExp top) {
  if (order < 0) throw std::invalid_argument("negative q-order");
  const auto [m, d] = prefactor_exponents(c);
  return build_to_top(
      [&](HalfExp t) {
        const HalfExp wide = t + HalfExp::from_int(order + std::abs(d));
        return times(prefactor(m, d, wide), body(c.kind, order, wide));
      },
      top);
}

QSeries wp_series(int order, HalfExp top) {
  QSeries out(order, PSeries::zero(top));
  out[0] = (RationalLaurent(Rational(1, 12)) + RationalLaurent(PSeries::monomial(1, HalfExp::from_int(1)), {{1, 2}}))
               .expand(top);
  for (int d = 1; d <= order; ++d) {
    std::vector<std::pair<HalfExp, Rational>> t;
    for (int k = 1; k <= d; ++k) {
      if (d % k != 0) continue;
      t.emplace_back(HalfExp::from_int(k), k);
      t.emplace_back(HalfExp{}, -2 * k);
      t.emplace_back(HalfExp::from_int(-k), k);
    }
    out[d] = PSeries::from_terms(t, top);
  }
  return out;
}

QSeries g2_series(int order) {
  const auto sigma = divisor_sigma(order);
  QSeries out(order);
  out[0] = PSeries::constant(Rational(-1, 24));
  for (int d = 1; d <= order; ++d) out[d] = PSeries::constant(sigma[static_cast<std::size_t>(d)]);
  return out;
}

PSeries macmahon_over_d_power(int k, HalfExp top) { return prefactor(k, -k, top); }

Report dt_quotient_checks(int order, HalfExp lo, HalfExp hi, int genus) {
  Report rep;
  rep.check = "dt-quotients";
  rep.param("qorder", static_cast<long>(order)).param("pmin", lo).param("pmax", hi).param("genus", static_cast<long>(genus));
  using K = DtCase::Kind;
  const HalfExp margin = HalfExp::from_int(order + 2);
  auto quotient = [&](K num, K den) {
    return build_to_top(
        [&](HalfExp t) {
          const QSeries n = dt_series(DtCase::make(num, genus), order, t + margin);
          const QSeries d = dt_series(DtCase::make(den), order, t + margin);
          return n * qs_invert(d, t + margin);
        },
        hi);
  };
  const int k = 1 - 2 * genus;

  const QSeries first = build_to_top(
      [&](HalfExp t) { return times(macmahon_over_d_power(k, t + margin), theta_inverse(order, t + margin)); }, hi);
  rep.parts.push_back(compare_report("B+F over F", quotient(K::BF, K::F), first, lo, hi));

  // q^(1/24) / eta: the offsets cancel.
  const ShiftedQSeries q24{Rational(1, 24), QSeries::constant(PSeries::constant(1), order)};
  const ShiftedQSeries scalar = q24 * qs_invert(eta_series(order));
  Report second = compare_report(
      "B+N over N", quotient(K::BN, K::Nfib),
      build_to_top(
          [&](HalfExp t) {
            return times(macmahon_over_d_power(k, t + margin), theta_inverse(order, t + margin) * scalar.series);
          },
          hi),
      lo, hi);
  second.expect(scalar.offset == 0, "q-offset of q^(1/24)/eta is " + to_string(scalar.offset));
  rep.parts.push_back(std::move(second));

  const QSeries braces = wp_series(order, hi + margin) + g2_series(order) + g2_series(order) +
                         QSeries::constant(PSeries::constant(1), order);
  const QSeries third =
      build_to_top([&](HalfExp t) { return times(macmahon_over_d_power(-2 * genus, t + margin), braces); }, hi);
  rep.parts.push_back(compare_report("B'+F over F", quotient(K::BpF, K::F), third, lo, hi));
  return rep;
}

Report dt_consistency_checks(int order, HalfExp lo, HalfExp hi) {
  Report rep;
  rep.check = "dt-consistency";
  rep.param("qorder", static_cast<long>(order)).param("pmin", lo).param("pmax", hi);
  using K = DtCase::Kind;

  QSeries counts(order);
  for (int d = 0; d <= order; ++d) counts[d] = PSeries::constant(static_cast<long>(partitions_of(d).size()));
  rep.parts.push_back(compare_report("F = partition counts", dt_series(DtCase::make(K::F), order, hi), counts, lo, hi));
  rep.parts.push_back(compare_report("N = two-leg product", dt_series(DtCase::make(K::Nfib), order, hi),
                                     identity_rhs(2, order, hi), lo, hi));
  rep.parts.push_back(compare_report("B'+F at genus 0 = four-leg product", dt_series(DtCase::make(K::BpF, 0), order, hi),
                                     identity_rhs(4, order, hi), lo, hi));
  // M(p)/(1-p) times the genus-1 series gives the one-box and five-term products.
  const HalfExp wide = hi + HalfExp::from_int(order + 2);
  const PSeries lift = macmahon(wide) * RationalLaurent(PSeries::constant(1), {{1, 1}}).expand(wide);
  rep.parts.push_back(compare_report("B+F at genus 1 = one-box product",
                                     times(lift, dt_series(DtCase::make(K::BF, 1), order, wide)).truncated(hi),
                                     identity_rhs(3, order, hi), lo, hi));
  rep.parts.push_back(compare_report("B+N at genus 1 = five-term product",
                                     times(lift, dt_series(DtCase::make(K::BN, 1), order, wide)).truncated(hi),
                                     identity_rhs(5, order, hi), lo, hi));
  return rep;
}

}  // namespace topvert
