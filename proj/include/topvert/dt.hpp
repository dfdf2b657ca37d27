#pragma once

#include <optional>
#include <string>

#include "topvert/qseries.hpp"
#include "topvert/report.hpp"

namespace topvert {

/// Curve classes of an elliptically fibered threefold: the fiber F, a nodal
/// fiber N, and a section B or B' of genus g added to F or N.
struct DtCase {
  enum class Kind { F, BF, Nfib, BN, BpF };
  Kind kind = Kind::F;
  int genus = 0;

  /// Throws std::invalid_argument when a genus is given for F or Nfib,
  /// missing for the others, or negative.
  static DtCase make(Kind kind, std::optional<int> genus = std::nullopt);
  static Kind parse_kind(const std::string& name);
  static bool needs_genus(Kind kind) { return kind == Kind::BF || kind == Kind::BN || kind == Kind::BpF; }
  std::string name() const;
};

/// Unweighted DT series of the class, negative powers of
/// p^1/2 - p^-1/2 expanded ascending.
QSeries dt_series(const DtCase& c, int order, HalfExp top);

/// 1/12 + p/(1-p)^2 + sum_d sum_{k|d} k (p^k - 2 + p^-k) q^d
QSeries wp_series(int order, HalfExp top);
/// -1/24 + sum_d sigma(d) q^d, exact.
QSeries g2_series(int order);

/// (M(p) / (p^1/2 - p^-1/2))^k
PSeries macmahon_over_d_power(int k, HalfExp top);

/// The three quotient identities, genus g for B and g' = genus for B'.
Report dt_quotient_checks(int order, HalfExp lo, HalfExp hi, int genus);

/// Each series against the matching vertex-sum product.
Report dt_consistency_checks(int order, HalfExp lo, HalfExp hi);

}  // namespace topvert
