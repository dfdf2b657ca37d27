#pragma once

#include "topvert/qseries.hpp"
#include "topvert/report.hpp"

namespace topvert {

/// Left-hand sides of the four vertex sums, over |lambda| <= order, each
/// coefficient known up to `top`:
///   2: sum q^|l| p^(|l'|^2) V_{l' l 0}
///   3: sum q^|l| V_{l box 0} / V_{l 0 0}
///   4: sum q^|l| p V_{box box l} / V_{0 0 l}
///   5: sum q^|l| p^(|l|^2) V_{l l' 0} V_{l box 0} / V_{l 0 0}
/// Ids 2 and 5 go through the skew Schur vertex; 3 and 4 use the exact
/// one- and two-box ratios.
QSeries identity_lhs(int id, int order, HalfExp top, int jobs = 1);

/// The matching product formulas.
QSeries identity_rhs(int id, int order, HalfExp top);

/// Compares both sides on [lo, hi].
Report verify_identity(int id, int order, HalfExp lo, HalfExp hi, int jobs = 1);

/// sum_{l, eta} q^|l| s_{l/eta}(p^-rho)^2 and its agreement with
/// prod_d (1 - q^d)^-1 prod_m (1 - q^d p^m)^-m.
QSeries two_leg_schur_sum(int order, HalfExp top);
Report two_leg_schur_route(int order, HalfExp lo, HalfExp hi);

/// The ascending expansion of 1 / Theta.
QSeries theta_inverse(int order, HalfExp top);

enum class CorrelatorPoint {
  one_inverse,  // F(p^-1)
  one,          // F(p)
  two,          // F(p, p^-1)
};

/// prod_m (1 - q^m) sum_l q^|l| prod_k sum_i p_k^(l_i - i + 1/2), each
/// per-partition factor in rational form.
QSeries bo_correlator(CorrelatorPoint point, int order, HalfExp top);
/// The closed forms: -1/Theta, 1/Theta, and
/// 1/((1-p)(1-p^-1)) - sum_m sum_k k (p^k + p^-k) q^(mk).
QSeries bo_closed_form(CorrelatorPoint point, int order, HalfExp top);

/// Correlator against its closed form, plus the consequences for the
/// three-leg and four-leg sums.
Report verify_correlator(CorrelatorPoint point, int order, HalfExp lo, HalfExp hi);

/// p d/dp log Theta against -1/2 (1+p)/(1-p) + sum_m sum_k (p^-k - p^k) q^(mk).
Report log_deriv_theta_check(int order, HalfExp lo, HalfExp hi);

/// 1 + p/(1-p)^2 + sum_d sum_{k|d} k (p^k + p^-k) q^d
QSeries two_box_braces(int order, HalfExp top);

}  // namespace topvert
