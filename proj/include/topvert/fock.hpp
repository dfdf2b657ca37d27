#pragma once

#include <compare>
#include <tuple>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topvert/partitions.hpp"
#include "topvert/pseries.hpp"
#include "topvert/rational_laurent.hpp"
#include "topvert/schur.hpp"

namespace topvert {

/// A basis state of the semi-infinite wedge space: the negative half-integers
/// are filled except for `holes`, and `particles` are the occupied positive
/// ones. Positions are stored as twice their value, both lists ascending.
class MayaState {
 public:
  MayaState() = default;
  /// Throws std::invalid_argument on even entries, wrong signs or duplicates.
  MayaState(std::vector<int> particles2, std::vector<int> holes2);

  /// v_lambda, with occupied positions lambda_i - i + 1/2.
  static MayaState from_partition(const Partition& lambda);
  /// Throws std::invalid_argument unless the charge is zero.
  Partition to_partition() const;

  const std::vector<int>& particles2() const { return particles_; }
  const std::vector<int>& holes2() const { return holes_; }
  int charge() const { return static_cast<int>(particles_.size()) - static_cast<int>(holes_.size()); }
  /// Twice the eigenvalue of H (sum of particle positions minus hole positions).
  long energy2() const;
  /// |lambda| for charge-zero states.
  long energy() const { return energy2() / 2; }

  bool occupied(int k2) const;
  /// Number of occupied positions strictly above k.
  long occupied_above(int k2) const;

  /// k inserted at the front of the wedge and moved into place: the sign is
  /// (-1)^(occupied positions above k). Empty if k is already occupied.
  std::optional<std::pair<MayaState, int>> inserted(int k2) const;
  /// The adjoint operation. Empty if k is not occupied.
  std::optional<std::pair<MayaState, int>> removed(int k2) const;

  std::string to_string() const;
  friend auto operator<=>(const MayaState&, const MayaState&) = default;
  friend bool operator==(const MayaState&, const MayaState&) = default;

 private:
  std::vector<int> particles_;
  std::vector<int> holes_;
};

/// Finite linear combination of basis states. Zero coefficients are dropped.
template <class C>
class BasicFockVector {
 public:
  using Map = std::map<MayaState, C>;

  BasicFockVector() = default;
  static BasicFockVector basis(const MayaState& s, const C& c) {
    BasicFockVector v;
    v.add(s, c);
    return v;
  }

  void add(const MayaState& s, const C& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(s, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const BasicFockVector& o, const Rational& scale = 1) {
    for (const auto& [s, c] : o.terms_) add(s, scale == 1 ? c : c.scaled(scale));
  }
  void set(const MayaState& s, C c) {
    if (c.is_zero())
      terms_.erase(s);
    else
      terms_.insert_or_assign(s, std::move(c));
  }

  /// Null when the state is absent.
  const C* find(const MayaState& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? nullptr : &it->second;
  }
  C coefficient(const MayaState& s) const {
    const C* c = find(s);
    return c ? *c : C();
  }

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BasicFockVector scaled(const Rational& c) const {
    BasicFockVector out;
    if (c == 0) return out;
    for (const auto& [s, x] : terms_) out.terms_.emplace(s, x.scaled(c));
    return out;
  }

  /// Terms whose twice-energy lies in [lo2, hi2].
  BasicFockVector energy_slice(long lo2, long hi2) const {
    BasicFockVector out;
    for (const auto& [s, x] : terms_)
      if (s.energy2() >= lo2 && s.energy2() <= hi2) out.terms_.emplace(s, x);
    return out;
  }

  friend BasicFockVector operator+(BasicFockVector a, const BasicFockVector& b) {
    a.add(b);
    return a;
  }
  friend BasicFockVector operator-(BasicFockVector a, const BasicFockVector& b) {
    a.add(b, Rational(-1));
    return a;
  }

 private:
  Map terms_;
};

using FockVector = BasicFockVector<RationalLaurent>;
using WindowedFockVector = BasicFockVector<PSeries>;

/// Orthonormal inner product, real coefficients.
template <class C>
C inner(const BasicFockVector<C>& a, const BasicFockVector<C>& b) {
  C acc{};
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  for (const auto& [s, x] : small.terms())
    if (const C* y = large.find(s)) acc += x * *y;
  return acc;
}

template <class C>
BasicFockVector<C> apply_psi(int k2, const BasicFockVector<C>& v) {
  BasicFockVector<C> out;
  for (const auto& [s, c] : v.terms())
    if (auto r = s.inserted(k2)) out.add(r->first, r->second > 0 ? c : c.scaled(Rational(-1)));
  return out;
}

template <class C>
BasicFockVector<C> apply_psi_star(int k2, const BasicFockVector<C>& v) {
  BasicFockVector<C> out;
  for (const auto& [s, c] : v.terms())
    if (auto r = s.removed(k2)) out.add(r->first, r->second > 0 ? c : c.scaled(Rational(-1)));
  return out;
}

/// The states psi_{k-n} psi*_k s (n != 0) with their signs, over every k.
std::vector<std::tuple<MayaState, int, int>> shift_moves(const MayaState& s, int n);

/// alpha_n = sum_k psi_{k-n} psi*_k, n != 0.
template <class C>
BasicFockVector<C> apply_alpha(int n, const BasicFockVector<C>& v) {
  if (n == 0) throw std::invalid_argument("alpha_0 is not supported");
  BasicFockVector<C> out;
  for (const auto& [s, c] : v.terms())
    for (const auto& [t, sign, k2] : shift_moves(s, n)) out.add(t, sign > 0 ? c : c.scaled(Rational(-1)));
  return out;
}

enum class GammaSign { plus, minus };

/// n s_n(x) = sum_i x_i^n for the variable list, as a rational form.
RationalLaurent power_sum(const VarList& vars, int n);

/// Gamma_+(x) or Gamma_-(x) applied exactly. Gamma_- output stops at
/// twice-energy `energy_cutoff2` above which nothing is produced; inputs
/// above the cutoff are an error. Gamma_+ ignores the cutoff.
FockVector apply_gamma(GammaSign sign, const VarList& vars, const FockVector& v, long energy_cutoff2);

/// Window bookkeeping for Gamma_- on windowed coefficients: the coefficient
/// of a state lying d energy units above the start is kept up to
/// `start_top - d * m`, m being the smallest variable exponent.
struct GammaWindow {
  HalfExp start_top;
  /// Extra energy levels computed past the point where every coefficient is
  /// known to vanish on its window.
  int energy_slack = 0;
  /// Hard bound on twice-energy; unset means the natural bound only.
  std::optional<long> energy_cutoff2;
};

/// Gamma_-(x) v_start with windowed coefficients. Needs a list whose
/// exponents are all positive.
WindowedFockVector apply_gamma_minus_window(const VarList& vars, const MayaState& start, const GammaWindow& w);

/// Gamma_+(x) applied to a windowed vector, every coefficient capped at `top`.
WindowedFockVector apply_gamma_plus_window(const VarList& vars, const WindowedFockVector& v, HalfExp top);

/// E_0 eigenvalue: sum over occupied k of p^k, in rational form.
RationalLaurent e0_eigenvalue(const MayaState& s);

/// E_r(p) = sum_k p^(k - r/2) psi_{k-r} psi*_k.
FockVector apply_E(int r, const FockVector& v);

/// E(a, p) = sum_r a^r E_r(p) for r in [-radius, radius], keyed by r.
std::map<int, FockVector> apply_E_a(const FockVector& v, int radius);

/// psi(a^-1 p^1/2) psi*(a^-1 p^-1/2) with both sums cut to |k| <= bound2/2
/// and the remaining diagonal part of the deep sea added in rational form,
/// keyed by the power of a in [-radius, radius].
std::map<int, FockVector> apply_psi_pair_generating(const FockVector& v, int radius, int bound2);

/// q^H on charge-zero states with a numerical q.
FockVector apply_q_energy(const Rational& q, const FockVector& v);

}  // namespace topvert
