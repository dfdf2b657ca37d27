#pragma once

#include <vector>

#include "topvert/partitions.hpp"
#include "topvert/qseries.hpp"
#include "topvert/rational_laurent.hpp"

namespace topvert {

/// The variable list u p^s p^(-nu-rho) (direction +1) or u p^s p^(nu+rho)
/// (direction -1). With rho = (-1/2, -3/2, ...), variable i (1-based) is
/// u p^(s + direction * (-nu_i + i - 1/2)).
struct VarList {
  Partition shape;
  Rational scale_coeff = 1;
  HalfExp scale_exp;
  int direction = +1;

  static VarList principal(const Rational& u = 1) { return {{}, u, {}, +1}; }
  HalfExp exponent(int i) const;
};

/// h_0 .. h_kmax as exact rational forms.
std::vector<RationalLaurent> complete_homogeneous_exact(const VarList& vars, int kmax);

/// h_0 .. h_kmax using only the first `count` variables, each windowed to the
/// range the omitted variables cannot reach. Ascending lists only.
std::vector<PSeries> complete_homogeneous_window(const VarList& vars, int kmax, int count);

/// Zero unless eta is inside lambda.
RationalLaurent skew_schur_exact(const Partition& lambda, const Partition& eta, const VarList& vars);

struct WindowOptions {
  /// Variables retained beyond the automatically chosen count.
  int extra_vars = 0;
};

/// Windowed skew Schur function, known up to `top`. The variable count starts
/// from max(l(nu), ceil(top - min exponent) + |lambda|) and grows until the
/// determinant reaches the window. `used_count` receives the final count.
PSeries skew_schur_window(const Partition& lambda, const Partition& eta, const VarList& vars, HalfExp top,
                          const WindowOptions& opts = {}, int* used_count = nullptr);

/// V_{lambda mu nu}(p) from the skew Schur formula, known up to `top`.
PSeries vertex_orv(const Partition& lambda, const Partition& mu, const Partition& nu, HalfExp top,
                   const WindowOptions& opts = {});
inline PSeries vertex_orv(const LegTriple& t, HalfExp top, const WindowOptions& opts = {}) {
  return vertex_orv(t.lambda, t.mu, t.nu, top, opts);
}

/// s_{lambda/eta}(p^(nu+rho)) == (-1)^(|lambda|-|eta|) s_{lambda'/eta'}(p^(-nu'-rho)),
/// both sides as exact rational forms.
bool conjugation_relation_check(const Partition& lambda, const Partition& eta, const Partition& nu);

/// sum_i p^(-lambda_i + i - 1/2) = p^(1/2) V_{lambda box 0} / V_{lambda 0 0}
RationalLaurent ratio_box(const Partition& lambda);
/// sum_i p^(lambda_i - i + 1/2), the tail taken in rational form.
RationalLaurent descending_sum(const Partition& lambda);
/// 1 - ratio_box * descending_sum = p V_{lambda box box} / V_{lambda 0 0}
RationalLaurent ratio_two_box(const Partition& lambda);

}  // namespace topvert
