#include "topvert/identities.hpp"

#include <stdexcept>

#include "topvert/parallel.hpp"
#include "topvert/partitions.hpp"
#include "topvert/products.hpp"
#include "topvert/schur.hpp"

namespace topvert {

namespace {

const Partition kBox = Partition::box();

std::vector<EulerFactor> concat(std::vector<EulerFactor> a, const std::vector<EulerFactor>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

FactorSource with_fixed(FactorSource family, std::vector<EulerFactor> fixed) {
  return [family = std::move(family), fixed = std::move(fixed)](HalfExp max_p) {
    return concat(family(max_p), fixed);
  };
}

FactorSource macmahon_factors() {
  return [](HalfExp max_p) {
    std::vector<EulerFactor> f;
    for (long m = 1; m <= max_p.floor(); ++m) f.push_back({HalfExp::from_int(m), 0, -m});
    return f;
  };
}

FactorSource both(FactorSource a, FactorSource b) {
  return [a = std::move(a), b = std::move(b)](HalfExp max_p) { return concat(a(max_p), b(max_p)); };
}

// Evaluates term(lambda) for every |lambda| <= order and files it under q^|lambda|.
QSeries partition_sum(int order, HalfExp top, int jobs, const std::function<PSeries(const Partition&)>& term) {
  const auto parts = partitions_up_to(order);
  std::vector<PSeries> values(parts.size());
  parallel_for(parts.size(), jobs, [&](std::size_t i) { values[i] = term(parts[i]).truncated(top); });
  QSeries out(order, PSeries::zero(top));
  for (std::size_t i = 0; i < parts.size(); ++i) out[parts[i].size()] += values[i];
  return out;
}

HalfExp valuation_of(const std::function<PSeries(HalfExp)>& f) {
  for (long t = 0;; t += 4) {
    const PSeries s = f(HalfExp::from_int(t));
    if (!s.is_zero()) return s.valuation();
    if (t > 1000) throw std::runtime_error("series vanishes on every window tried");
  }
}

PSeries lhs2_term(const Partition& lambda, HalfExp top) {
  const Partition lc = lambda.conjugate();
  const HalfExp shift = HalfExp::from_int(lc.norm2());
  return vertex_orv(lc, lambda, {}, top - shift).shifted(shift);
}

PSeries lhs5_term(const Partition& lambda, HalfExp top) {
  const Partition lc = lambda.conjugate();
  const HalfExp shift = HalfExp::from_int(lambda.norm2());
  auto empty = [&](HalfExp t) { return vertex_orv(lambda, {}, {}, t); };
  const HalfExp v = valuation_of(empty);
  return product_to_top(
      {
          [&](HalfExp t) { return vertex_orv(lambda, lc, {}, t - shift).shifted(shift); },
          [&](HalfExp t) { return vertex_orv(lambda, kBox, {}, t); },
          [&](HalfExp t) { return empty(t + 2 * v).inverse(); },
      },
      top);
}

}  // namespace

QSeries identity_lhs(int id, int order, HalfExp top, int jobs) {
  switch (id) {
    case 2:
      return partition_sum(order, top, jobs, [&](const Partition& l) { return lhs2_term(l, top); });
    case 3:
      return partition_sum(order, top, jobs, [&](const Partition& l) {
        return ratio_box(l).shifted(-HalfExp::half()).expand(top);
      });
    case 4:
      return partition_sum(order, top, jobs, [&](const Partition& l) { return ratio_two_box(l).expand(top); });
    case 5:
      return partition_sum(order, top, jobs, [&](const Partition& l) { return lhs5_term(l, top); });
    default:
      throw std::invalid_argument("identity id must be 2, 3, 4 or 5");
  }
}

QSeries two_box_braces(int order, HalfExp top) {
  QSeries out(order, PSeries::zero(top));
  out[0] = (RationalLaurent(Rational(1)) + RationalLaurent(PSeries::monomial(1, HalfExp::from_int(1)), {{1, 2}}))
               .expand(top);
  for (int d = 1; d <= order; ++d) {
    std::vector<std::pair<HalfExp, Rational>> t;
    for (int k = 1; k <= d; ++k) {
      if (d % k != 0) continue;
      t.emplace_back(HalfExp::from_int(k), k);
      t.emplace_back(HalfExp::from_int(-k), k);
    }
    out[d] = PSeries::from_terms(t, top);
  }
  return out;
}

QSeries identity_rhs(int id, int order, HalfExp top) {
  switch (id) {
    case 2:
      return euler_product(both(macmahon_factors(), with_fixed(macmahon_q_family(order), q_pochhammer_factors(order, -1))),
                           order, top);
    case 3: {
      const auto f = concat(concat(q_pochhammer_factors(order, 1), p_pair_factors(order, -1)),
                            {{HalfExp::from_int(1), 0, -1}});
      return euler_product(f, order, top);
    }
    case 4: {
      return build_to_top(
          [&](HalfExp t) {
            return euler_product(q_pochhammer_factors(order, -1), order, t) * two_box_braces(order, t);
          },
          top);
    }
    case 5: {
      const std::vector<EulerFactor> fixed =
          concat(p_pair_factors(order, -1), {{HalfExp::from_int(1), 0, -1}});
      return euler_product(both(macmahon_factors(), with_fixed(macmahon_q_family(order), fixed)), order, top);
    }
    default:
      throw std::invalid_argument("identity id must be 2, 3, 4 or 5");
  }
}

Report verify_identity(int id, int order, HalfExp lo, HalfExp hi, int jobs) {
  Report r = compare_report("identity", identity_lhs(id, order, hi, jobs), identity_rhs(id, order, hi), lo, hi);
  r.params.insert(r.params.begin(), {"id", std::to_string(id)});
  return r;
}

QSeries two_leg_schur_sum(int order, HalfExp top) {
  return partition_sum(order, top, 1, [&](const Partition& lambda) {
    RationalLaurent acc;
    for (const auto& eta : partitions_up_to(lambda.size())) {
      if (!lambda.contains(eta)) continue;
      const RationalLaurent s = skew_schur_exact(lambda, eta, VarList::principal());
      acc += s * s;
    }
    return acc.expand(top);
  });
}

Report two_leg_schur_route(int order, HalfExp lo, HalfExp hi) {
  const QSeries middle = two_leg_schur_sum(order, hi);
  const QSeries product =
      euler_product(with_fixed(macmahon_q_family(order), q_pochhammer_factors(order, -1)), order, hi);
  Report r = compare_report("two-leg-schur-route", middle, product, lo, hi);
  Report full = compare_report("two-leg-schur-route-with-macmahon",
                               QSeries::constant(macmahon(hi), order) * middle, identity_rhs(2, order, hi), lo, hi);
  r.parts.push_back(std::move(full));
  return r;
}

QSeries theta_inverse(int order, HalfExp top) {
  return build_to_top(
      [&](HalfExp t) {
        const HalfExp theta_top = max(t, HalfExp::from_twice(2 * order + 1));
        return qs_invert(theta_series(order, theta_top), t);
      },
      top);
}

QSeries bo_correlator(CorrelatorPoint point, int order, HalfExp top) {
  const QSeries poch = euler_product(q_pochhammer_factors(order, 1), order, HalfExp::unbounded());
  const QSeries sum = build_to_top(
      [&](HalfExp t) {
        return partition_sum(order, t, 1, [&](const Partition& lambda) {
          switch (point) {
            case CorrelatorPoint::one_inverse:
              return ratio_box(lambda).expand(t);
            case CorrelatorPoint::one:
              return descending_sum(lambda).expand(t);
            case CorrelatorPoint::two:
              return (ratio_box(lambda) * descending_sum(lambda)).expand(t);
          }
          throw std::logic_error("unknown correlator");
        });
      },
      top + HalfExp::from_int(order));
  return build_to_top([&](HalfExp) { return poch * sum; }, top);
}

QSeries bo_closed_form(CorrelatorPoint point, int order, HalfExp top) {
  switch (point) {
    case CorrelatorPoint::one_inverse: {
      QSeries t = theta_inverse(order, top);
      for (int d = 0; d <= order; ++d) t[d] = -t[d];
      return t;
    }
    case CorrelatorPoint::one:
      return theta_inverse(order, top);
    case CorrelatorPoint::two: {
      // 1/((1-p)(1-p^-1)) = -p/(1-p)^2
      QSeries out(order, PSeries::zero(top));
      out[0] = RationalLaurent(PSeries::monomial(-1, HalfExp::from_int(1)), {{1, 2}}).expand(top);
      for (int m = 1; m <= order; ++m)
        for (int k = 1; m * k <= order; ++k) {
          out[m * k].add_scaled_shifted(PSeries::constant(1), -k, HalfExp::from_int(k));
          out[m * k].add_scaled_shifted(PSeries::constant(1), -k, HalfExp::from_int(-k));
        }
      return out;
    }
  }
  throw std::logic_error("unknown correlator");
}

Report verify_correlator(CorrelatorPoint point, int order, HalfExp lo, HalfExp hi) {
  const char* names[] = {"one-inverse", "one", "two"};
  const QSeries f = bo_correlator(point, order, hi);
  Report r = compare_report("bo-correlator", f, bo_closed_form(point, order, hi), lo, hi);
  r.params.insert(r.params.begin(), {"point", names[static_cast<int>(point)]});

  const QSeries inv_poch = euler_product(q_pochhammer_factors(order, -1), order, HalfExp::unbounded());
  if (point == CorrelatorPoint::one_inverse) {
    // F(p^-1) (p^-1/2 - p^1/2) / prod (1-q^m) = (1-p) times the three-leg sum's product side.
    const PSeries factor = PSeries::from_terms({{-HalfExp::half(), 1}, {HalfExp::half(), -1}});
    const QSeries left = build_to_top(
        [&](HalfExp t) { return bo_correlator(point, order, t + HalfExp::half()).scaled(factor) * inv_poch; }, hi);
    QSeries right = identity_rhs(3, order, hi + HalfExp::from_int(1));
    right = right.scaled(PSeries::from_terms({{HalfExp{}, 1}, {HalfExp::from_int(1), -1}}));
    r.parts.push_back(compare_report("bo-chain-three-leg", left, right, lo, hi));
  } else if (point == CorrelatorPoint::two) {
    QSeries left = QSeries::constant(PSeries::constant(1), order) - f;
    r.parts.push_back(compare_report("bo-chain-two-box-braces", left, two_box_braces(order, hi), lo, hi));
  }
  return r;
}

Report log_deriv_theta_check(int order, HalfExp lo, HalfExp hi) {
  const QSeries lhs = build_to_top(
      [&](HalfExp t) {
        const QSeries theta = theta_series(order, max(t, HalfExp::from_twice(2 * order + 1)));
        QSeries deriv(order);
        for (int d = 0; d <= order; ++d) deriv[d] = theta[d].p_derivative();
        return deriv * qs_invert(theta, t + HalfExp::from_int(order + 1));
      },
      hi);
  QSeries rhs(order, PSeries::zero(hi));
  // -1/2 (1+p)/(1-p)
  rhs[0] = RationalLaurent(PSeries::from_terms({{HalfExp{}, Rational(-1, 2)}, {HalfExp::from_int(1), Rational(-1, 2)}}),
                           {{1, 1}})
               .expand(hi);
  for (int m = 1; m <= order; ++m)
    for (int k = 1; m * k <= order; ++k) {
      rhs[m * k].add_scaled_shifted(PSeries::constant(1), -1, HalfExp::from_int(k));
      rhs[m * k].add_scaled_shifted(PSeries::constant(1), 1, HalfExp::from_int(-k));
    }
  Report r = compare_report("log-derivative-theta", lhs, rhs, lo, hi);
  // The q-dependent part is odd under p -> 1/p.
  for (int d = 1; d <= order; ++d) {
    const PSeries c = rhs[d].truncated(hi).promoted_to_exact();
    r.expect(c.reflected() == -c, "q^" + std::to_string(d) + " part not odd under inversion");
  }
  return r;
}

}  // namespace topvert
