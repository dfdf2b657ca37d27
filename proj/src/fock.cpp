#include "topvert/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace topvert {

MayaState::MayaState(std::vector<int> particles2, std::vector<int> holes2)
    : particles_(std::move(particles2)), holes_(std::move(holes2)) {
  std::sort(particles_.begin(), particles_.end());
  std::sort(holes_.begin(), holes_.end());
  auto check = [](const std::vector<int>& v, bool positive) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] % 2 == 0) throw std::invalid_argument("Maya positions must be half-integers");
      if ((v[i] > 0) != positive) throw std::invalid_argument("particles must be positive and holes negative");
      if (i > 0 && v[i] == v[i - 1]) throw std::invalid_argument("repeated Maya position");
    }
  };
  check(particles_, true);
  check(holes_, false);
}

MayaState MayaState::from_partition(const Partition& lambda) {
  std::vector<int> particles, holes;
  const int len = lambda.length();
  for (int i = 1; i <= len; ++i) {
    const int k2 = 2 * lambda[static_cast<std::size_t>(i - 1)] - 2 * i + 1;
    if (k2 > 0) particles.push_back(k2);
  }
  // Negative positions -i + 1/2 with lambda_i = 0 stay filled; the rest of
  // -1/2 .. -len + 1/2 are vacated unless some row lands on them.
  std::vector<bool> filled(static_cast<std::size_t>(len), false);
  for (int i = 1; i <= len; ++i) {
    const int k2 = 2 * lambda[static_cast<std::size_t>(i - 1)] - 2 * i + 1;
    if (k2 < 0) filled[static_cast<std::size_t>((-k2 - 1) / 2)] = true;
  }
  for (int j = 0; j < len; ++j)
    if (!filled[static_cast<std::size_t>(j)]) holes.push_back(-2 * j - 1);
  return MayaState(std::move(particles), std::move(holes));
}

Partition MayaState::to_partition() const {
  if (charge() != 0) throw std::invalid_argument("partition of a state with nonzero charge");
  // Occupied positions in descending order, down to the deepest hole.
  std::vector<int> occ(particles_.rbegin(), particles_.rend());
  const int deepest = holes_.empty() ? 1 : holes_.front();
  for (int k2 = -1; k2 >= deepest; k2 -= 2)
    if (!std::binary_search(holes_.begin(), holes_.end(), k2)) occ.push_back(k2);
  std::vector<int> parts;
  for (std::size_t i = 0; i < occ.size(); ++i) {
    const int part = (occ[i] + 2 * static_cast<int>(i) + 1) / 2;
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

long MayaState::energy2() const {
  long e = 0;
  for (int k : particles_) e += k;
  for (int h : holes_) e -= h;
  return e;
}

bool MayaState::occupied(int k2) const {
  if (k2 > 0) return std::binary_search(particles_.begin(), particles_.end(), k2);
  return !std::binary_search(holes_.begin(), holes_.end(), k2);
}

long MayaState::occupied_above(int k2) const {
  long n = particles_.end() - std::upper_bound(particles_.begin(), particles_.end(), k2);
  if (k2 < 0) {
    const long sea = (-k2 - 1) / 2;
    const long vacated = holes_.end() - std::upper_bound(holes_.begin(), holes_.end(), k2);
    n += sea - vacated;
  }
  return n;
}

std::optional<std::pair<MayaState, int>> MayaState::inserted(int k2) const {
  if (k2 % 2 == 0) throw std::invalid_argument("Maya positions must be half-integers");
  if (occupied(k2)) return std::nullopt;
  const int sign = occupied_above(k2) % 2 == 0 ? 1 : -1;
  MayaState s = *this;
  if (k2 > 0)
    s.particles_.insert(std::lower_bound(s.particles_.begin(), s.particles_.end(), k2), k2);
  else
    s.holes_.erase(std::lower_bound(s.holes_.begin(), s.holes_.end(), k2));
  return std::make_pair(std::move(s), sign);
}

std::optional<std::pair<MayaState, int>> MayaState::removed(int k2) const {
  if (k2 % 2 == 0) throw std::invalid_argument("Maya positions must be half-integers");
  if (!occupied(k2)) return std::nullopt;
  const int sign = occupied_above(k2) % 2 == 0 ? 1 : -1;
  MayaState s = *this;
  if (k2 > 0)
    s.particles_.erase(std::lower_bound(s.particles_.begin(), s.particles_.end(), k2));
  else
    s.holes_.insert(std::lower_bound(s.holes_.begin(), s.holes_.end(), k2), k2);
  return std::make_pair(std::move(s), sign);
}

std::string MayaState::to_string() const {
  auto list = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += HalfExp::from_twice(v[i]).to_string();
    }
    return s + "}";
  };
  return "particles " + list(particles_) + " holes " + list(holes_);
}

std::vector<std::tuple<MayaState, int, int>> shift_moves(const MayaState& s, int n) {
  if (n == 0) throw std::invalid_argument("shift by zero");
  const int spread = 2 * std::abs(n);
  const int low = std::min(-1, s.holes2().empty() ? -1 : s.holes2().front()) - spread;
  const int high = std::max(1, s.particles2().empty() ? 1 : s.particles2().back()) + spread;
  std::vector<std::tuple<MayaState, int, int>> out;
  for (int k2 = (low % 2 == 0 ? low - 1 : low); k2 <= high; k2 += 2) {
    auto r = s.removed(k2);
    if (!r) continue;
    auto t = r->first.inserted(k2 - 2 * n);
    if (!t) continue;
    out.emplace_back(std::move(t->first), r->second * t->second, k2);
  }
  return out;
}

RationalLaurent power_sum(const VarList& vars, int n) {
  if (n <= 0) throw std::invalid_argument("power sums need n >= 1");
  const int len = vars.shape.length();
  Rational un = 1;
  for (int i = 0; i < n; ++i) un *= vars.scale_coeff;
  std::vector<std::pair<HalfExp, Rational>> head;
  for (int i = 1; i <= len; ++i) head.emplace_back(n * vars.exponent(i), un);
  HalfExp tail_exp;
  Rational tail_coeff = un;
  if (vars.direction > 0) {
    tail_exp = n * (vars.scale_exp + HalfExp::from_twice(2 * len + 1));
  } else {
    tail_exp = n * (vars.scale_exp - HalfExp::from_twice(2 * len - 1));
    tail_coeff = -un;
  }
  return RationalLaurent(PSeries::from_terms(head)) + RationalLaurent::geometric(tail_coeff, tail_exp, n);
}

namespace {

long max_energy2(const FockVector& v) {
  long e = 0;
  for (const auto& [s, c] : v.terms()) e = std::max(e, s.energy2());
  return e;
}

}  // namespace

FockVector apply_gamma(GammaSign sign, const VarList& vars, const FockVector& v, long energy_cutoff2) {
  const bool minus = sign == GammaSign::minus;
  long lowest2 = 0;
  bool first = true;
  for (const auto& [s, c] : v.terms()) {
    if (minus && s.energy2() > energy_cutoff2)
      throw std::invalid_argument("energy cutoff below the input state " + s.to_string());
    lowest2 = first ? s.energy2() : std::min(lowest2, s.energy2());
    first = false;
  }
  if (v.empty()) return v;
  const long steps = minus ? (energy_cutoff2 - lowest2) / 2 : (max_energy2(v) + 1) / 2 + 1;

  std::vector<RationalLaurent> p;
  std::vector<FockVector> graded{v};
  FockVector out = v;
  for (long d = 1; d <= steps; ++d) {
    p.push_back(power_sum(vars, static_cast<int>(d)));
    FockVector g;
    for (long n = 1; n <= d; ++n) {
      const FockVector& prev = graded[static_cast<std::size_t>(d - n)];
      if (prev.empty()) continue;
      const FockVector moved = apply_alpha(minus ? -static_cast<int>(n) : static_cast<int>(n), prev);
      for (const auto& [s, c] : moved.terms()) {
        if (minus && s.energy2() > energy_cutoff2) continue;
        g.add(s, c * p[static_cast<std::size_t>(n - 1)]);
      }
    }
    g = g.scaled(Rational(1, static_cast<long>(d)));
    out.add(g);
    graded.push_back(std::move(g));
  }
  return out;
}

namespace {

HalfExp min_exponent(const VarList& vars) {
  if (vars.direction < 0) throw std::invalid_argument("windowed Gamma needs an ascending variable list");
  HalfExp m = vars.exponent(1);
  for (int i = 2; i <= vars.shape.length() + 1; ++i) m = min(m, vars.exponent(i));
  if (m <= HalfExp{}) throw std::invalid_argument("windowed Gamma needs positive variable exponents");
  return m;
}

}  // namespace

WindowedFockVector apply_gamma_minus_window(const VarList& vars, const MayaState& start, const GammaWindow& w) {
  const HalfExp m = min_exponent(vars);
  // Level d is known to vanish once 2 d m exceeds the start top.
  long levels = 0;
  while ((2 * (levels + 1)) * m <= w.start_top) ++levels;
  levels += w.energy_slack;
  if (w.energy_cutoff2) levels = std::min(levels, (*w.energy_cutoff2 - start.energy2()) / 2);
  if (levels < 0) throw std::invalid_argument("energy cutoff below the start state");

  auto level_top = [&](long d) { return w.start_top - d * m; };
  std::vector<PSeries> p;
  std::vector<WindowedFockVector> graded{
      WindowedFockVector::basis(start, PSeries::constant(1).clipped(w.start_top))};
  WindowedFockVector out = graded.front();
  for (long d = 1; d <= levels; ++d) {
    p.push_back(power_sum(vars, static_cast<int>(d)).expand(w.start_top));
    const HalfExp top = level_top(d);
    std::map<MayaState, PSeries> acc;
    for (long n = 1; n <= d; ++n) {
      const WindowedFockVector& prev = graded[static_cast<std::size_t>(d - n)];
      if (prev.empty()) continue;
      const WindowedFockVector moved = apply_alpha(-static_cast<int>(n), prev);
      for (const auto& [s, c] : moved.terms()) {
        PSeries term = multiply(c, p[static_cast<std::size_t>(n - 1)], top);
        auto [it, fresh] = acc.try_emplace(s, std::move(term));
        if (!fresh) it->second += term;
      }
    }
    WindowedFockVector g;
    const Rational inv(1, static_cast<long>(d));
    for (auto& [s, c] : acc) g.add(s, c.clipped(top).scaled(inv));
    out.add(g);
    graded.push_back(std::move(g));
  }
  return out;
}

WindowedFockVector apply_gamma_plus_window(const VarList& vars, const WindowedFockVector& v, HalfExp top) {
  min_exponent(vars);
  if (v.empty()) return v;
  HalfExp lowest_val = HalfExp::unbounded();
  long highest2 = 0;
  for (const auto& [s, c] : v.terms()) {
    lowest_val = min(lowest_val, c.valuation());
    highest2 = std::max(highest2, s.energy2());
  }
  const HalfExp p_top = top - lowest_val;
  std::vector<PSeries> p;
  std::vector<WindowedFockVector> graded{v};
  WindowedFockVector out;
  for (const auto& [s, c] : v.terms()) out.add(s, c.clipped(top));
  for (long d = 1; d <= (highest2 + 1) / 2 + 1; ++d) {
    p.push_back(power_sum(vars, static_cast<int>(d)).expand(p_top));
    std::map<MayaState, PSeries> acc;
    for (long n = 1; n <= d; ++n) {
      const WindowedFockVector& prev = graded[static_cast<std::size_t>(d - n)];
      if (prev.empty()) continue;
      const WindowedFockVector moved = apply_alpha(static_cast<int>(n), prev);
      for (const auto& [s, c] : moved.terms()) {
        PSeries term = multiply(c, p[static_cast<std::size_t>(n - 1)], top);
        auto [it, fresh] = acc.try_emplace(s, std::move(term));
        if (!fresh) it->second += term;
      }
    }
    WindowedFockVector g;
    const Rational inv(1, static_cast<long>(d));
    for (auto& [s, c] : acc) g.add(s, c.scaled(inv));
    out.add(g);
    graded.push_back(std::move(g));
  }
  return out;
}

RationalLaurent e0_eigenvalue(const MayaState& s) {
  std::vector<std::pair<HalfExp, Rational>> finite;
  for (int k : s.particles2()) finite.emplace_back(HalfExp::from_twice(k), 1);
  for (int h : s.holes2()) finite.emplace_back(HalfExp::from_twice(h), -1);
  // sum over k = -1/2, -3/2, ... of p^k
  return RationalLaurent(PSeries::from_terms(finite)) + RationalLaurent::geometric(-1, HalfExp::half(), 1);
}

FockVector apply_E(int r, const FockVector& v) {
  FockVector out;
  for (const auto& [s, c] : v.terms()) {
    if (r == 0) {
      out.add(s, c * e0_eigenvalue(s));
      continue;
    }
    for (const auto& [t, sign, k2] : shift_moves(s, r))
      out.add(t, c * RationalLaurent::monomial(sign, HalfExp::from_twice(k2 - r)));
  }
  return out;
}

std::map<int, FockVector> apply_E_a(const FockVector& v, int radius) {
  if (radius < 0) throw std::invalid_argument("negative a-window radius");
  std::map<int, FockVector> out;
  for (int r = -radius; r <= radius; ++r) out[r] = apply_E(r, v);
  return out;
}

std::map<int, FockVector> apply_psi_pair_generating(const FockVector& v, int radius, int bound2) {
  if (bound2 % 2 == 0 || bound2 < 1) throw std::invalid_argument("cut must be a positive half-integer");
  for (const auto& [s, c] : v.terms()) {
    const int reach = std::max(s.particles2().empty() ? 0 : s.particles2().back(),
                               s.holes2().empty() ? 0 : -s.holes2().front());
    if (reach + 2 * radius + 2 > bound2) throw std::invalid_argument("cut too small for the state " + s.to_string());
  }
  std::map<int, FockVector> out;
  for (int r = -radius; r <= radius; ++r) out[r];
  for (int k2 = -bound2; k2 <= bound2; k2 += 2) {
    const FockVector removed = apply_psi_star(k2, v);
    if (removed.empty()) continue;
    for (int j2 = -bound2; j2 <= bound2; j2 += 2) {
      const int r = (k2 - j2) / 2;
      if (std::abs(r) > radius) continue;
      const RationalLaurent weight = RationalLaurent::monomial(1, HalfExp::from_twice((j2 + k2) / 2));
      const FockVector moved = apply_psi(j2, removed);
      for (const auto& [s, c] : moved.terms()) out[r].add(s, c * weight);
    }
  }
  // Deep sea below the cut: sum_{k < -bound} p^k on every state.
  const RationalLaurent tail = RationalLaurent::geometric(-1, HalfExp::from_twice(-bound2), 1);
  for (const auto& [s, c] : v.terms()) out[0].add(s, c * tail);
  return out;
}

FockVector apply_q_energy(const Rational& q, const FockVector& v) {
  FockVector out;
  for (const auto& [s, c] : v.terms()) {
    if (s.energy2() % 2 != 0) throw std::invalid_argument("q^H needs integral energy");
    Rational f = 1;
    for (long i = 0; i < s.energy(); ++i) f *= q;
    out.add(s, c.scaled(f));
  }
  return out;
}

}  // namespace topvert
