#pragma once

#include <map>

#include "topvert/fock.hpp"
#include "topvert/qseries.hpp"
#include "topvert/report.hpp"

namespace topvert {

/// Operator placed in front of the vertex operators inside the trace.
enum class TraceInsert { none, E0, Ea };

/// How the Gamma_+(x) Gamma_-(y) factor is evaluated, if present.
enum class GammaOrder {
  none,       // no vertex operators
  direct,     // (Gamma_-(x) v_mu, Gamma_-(y) v_lambda) on windowed vectors
  reordered,  // M(p, uv) (Gamma_+(y) v_mu, Gamma_+(x) v_lambda), exact entries
};

struct TraceRequest {
  TraceInsert insert = TraceInsert::none;
  GammaOrder gammas = GammaOrder::none;
  VarList plus_vars = VarList::principal();
  VarList minus_vars = VarList::principal();
  int order = 0;
  /// Every output coefficient is known up to this p-exponent.
  HalfExp top;
  /// a-window [-a_radius, a_radius] for the Ea insert.
  int a_radius = 0;
  /// Extra energy levels kept past the natural cutoff of each Gamma_- vector.
  int energy_slack = 0;
  int jobs = 1;
};

/// sum_{|l| <= order} q^|l| (v_l, X Gamma_+ Gamma_- v_l), keyed by the power of a.
using ATrace = std::map<int, QSeries>;
ATrace graded_trace(const TraceRequest& req);

/// Entrywise checks of the Gamma commutation relations, the E(a, p)
/// relations and q^H, on states of energy <= emax.
Report commutation_checks(int emax, HalfExp lo, HalfExp hi, int a_radius = 3);

/// Gamma matrix coefficients, adjointness and the E(a, p) factorization.
Report matrix_coefficient_checks(int emax);

/// tr(q^H), tr(E(a, p) q^H) and both orders of tr(Gamma_+ Gamma_- q^H).
Report trace_checks(int order, HalfExp lo, HalfExp hi, int jobs = 1);

/// The five-term vertex sum three ways: directly, as -p^-1/2 tr(E_0 ...),
/// and from the a^0 part of tr(E(a, p) ...).
Report e0_trace_check(int order, HalfExp lo, HalfExp hi, int a_radius = 0, int jobs = 1);

/// tr(E(a, p) Gamma_+ Gamma_- q^H) against
/// M(p) / (p^1/2 - p^-1/2) prod (1 - q^m/a)(1 - q^(m-1) a)(1 - q^m) M(p, q^m) / ((1 - p q^m)(1 - q^m/p))
/// for every power of a in the window.
Report ea_trace_check(int order, HalfExp lo, HalfExp hi, int a_radius, int jobs = 1);

/// The closed form above, keyed by the power of a.
ATrace ea_trace_closed_form(int order, HalfExp top, int a_radius);

}  // namespace topvert
