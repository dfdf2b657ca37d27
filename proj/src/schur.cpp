#include "topvert/schur.hpp"

#include <bit>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "topvert/products.hpp"

namespace topvert {

HalfExp VarList::exponent(int i) const {
  const std::int64_t base = -2 * shape[static_cast<std::size_t>(i - 1)] + 2 * i - 1;
  return scale_exp + HalfExp::from_twice(direction * base);
}

namespace {

// Laplace expansion along rows, memoized on the set of used columns.
template <class T>
T jacobi_trudi(const Partition& lambda, const Partition& eta, const std::vector<T>& h, const T& zero,
               const T& one) {
  if (!lambda.contains(eta)) return zero;
  const int n = lambda.length();
  if (n == 0) return one;
  if (n > 30) throw std::invalid_argument("partition too long for the determinant");
  std::unordered_map<std::uint32_t, T> memo;
  std::function<T(std::uint32_t)> rec = [&](std::uint32_t used) -> T {
    const int row = std::popcount(used);
    if (row == n) return one;
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    T acc = zero;
    int position = 0;
    for (int col = 0; col < n; ++col) {
      if (used & (1u << col)) continue;
      const int k = lambda[static_cast<std::size_t>(row)] - eta[static_cast<std::size_t>(col)] - row + col;
      const bool odd = position++ % 2 == 1;
      if (k < 0) continue;
      if (static_cast<std::size_t>(k) >= h.size()) throw std::logic_error("h sequence too short");
      T term = h[static_cast<std::size_t>(k)] * rec(used | (1u << col));
      if (odd)
        acc -= term;
      else
        acc += term;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(0);
}

std::vector<PSeries> head_polynomials(const VarList& vars, int count, int kmax) {
  std::vector<PSeries> h(static_cast<std::size_t>(kmax) + 1);
  h[0] = PSeries::constant(1);
  for (int i = 1; i <= count; ++i) {
    const HalfExp e = vars.exponent(i);
    for (int k = 1; k <= kmax; ++k)
      h[static_cast<std::size_t>(k)].add_scaled_shifted(h[static_cast<std::size_t>(k) - 1], vars.scale_coeff, e);
  }
  return h;
}

int kmax_for(const Partition& lambda) { return lambda[0] + lambda.length(); }

}  // namespace

std::vector<RationalLaurent> complete_homogeneous_exact(const VarList& vars, int kmax) {
  if (kmax < 0) throw std::invalid_argument("kmax must be nonnegative");
  const int len = vars.shape.length();
  const std::vector<PSeries> head = head_polynomials(vars, len, kmax);
  std::vector<RationalLaurent> tail;
  Rational c(1);
  for (int b = 0; b <= kmax; ++b) {
    std::map<int, int> den;
    for (int i = 1; i <= b; ++i) den[i] = 1;
    HalfExp e;
    Rational coeff = c;
    if (vars.direction > 0) {
      e = b * (vars.scale_exp + HalfExp::from_twice(2 * len + 1));
    } else {
      e = b * (vars.scale_exp - HalfExp::from_twice(2 * len + 1)) + HalfExp::from_int(b * (b + 1) / 2);
      if (b % 2 == 1) coeff = -coeff;
    }
    tail.emplace_back(PSeries::monomial(coeff, e), den);
    c *= vars.scale_coeff;
  }
  std::vector<RationalLaurent> h;
  for (int k = 0; k <= kmax; ++k) {
    RationalLaurent acc;
    for (int a = 0; a <= k; ++a)
      acc += RationalLaurent(head[static_cast<std::size_t>(a)]) * tail[static_cast<std::size_t>(k - a)];
    h.push_back(acc);
  }
  return h;
}

std::vector<PSeries> complete_homogeneous_window(const VarList& vars, int kmax, int count) {
  if (kmax < 0) throw std::invalid_argument("kmax must be nonnegative");
  if (vars.direction < 0) throw std::invalid_argument("windowed evaluation needs an ascending list");
  if (count < std::max(vars.shape.length(), 1)) throw std::invalid_argument("variable count below shape length");
  std::vector<PSeries> h = head_polynomials(vars, count, kmax);
  HalfExp emin = vars.exponent(1);
  for (int i = 2; i <= count; ++i) emin = min(emin, vars.exponent(i));
  const HalfExp first_omitted = vars.exponent(count + 1);
  for (int k = 1; k <= kmax; ++k) {
    const HalfExp top = first_omitted + (k - 1) * emin - HalfExp::half();
    h[static_cast<std::size_t>(k)] = h[static_cast<std::size_t>(k)].clipped(top);
  }
  return h;
}

RationalLaurent skew_schur_exact(const Partition& lambda, const Partition& eta, const VarList& vars) {
  const auto h = complete_homogeneous_exact(vars, kmax_for(lambda));
  return jacobi_trudi(lambda, eta, h, RationalLaurent(), RationalLaurent(Rational(1)));
}

PSeries skew_schur_window(const Partition& lambda, const Partition& eta, const VarList& vars, HalfExp top,
                          const WindowOptions& opts, int* used_count) {
  const int len = std::max(vars.shape.length(), 1);
  HalfExp emin = vars.exponent(1);
  for (int i = 2; i <= len; ++i) emin = min(emin, vars.exponent(i));
  int count = std::max<int>(len, static_cast<int>((top - emin).ceil()) + lambda.size());
  const PSeries zero, one = PSeries::constant(1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto h = complete_homogeneous_window(vars, kmax_for(lambda), count);
    PSeries s = jacobi_trudi(lambda, eta, h, zero, one);
    if (s.top() >= top) {
      if (opts.extra_vars > 0) {
        count += opts.extra_vars;
        h = complete_homogeneous_window(vars, kmax_for(lambda), count);
        s = jacobi_trudi(lambda, eta, h, zero, one);
      }
      if (used_count) *used_count = count;
      return s.truncated(top);
    }
    count += static_cast<int>((top - s.top()).ceil()) + 1;
  }
  throw WindowError("skew Schur evaluation did not reach window top " + top.to_string());
}

PSeries vertex_orv(const Partition& lambda, const Partition& mu, const Partition& nu, HalfExp top,
                   const WindowOptions& opts) {
  const Partition lc = lambda.conjugate(), mc = mu.conjugate(), nc = nu.conjugate();
  const HalfExp prefactor = HalfExp::from_twice(-(lambda.norm2() + mc.norm2() + nu.norm2()));
  const VarList by_nu{nu, 1, {}, +1};
  const VarList by_nu_conj{nc, 1, {}, +1};
  const auto etas = common_subpartitions(lc, mu);

  std::vector<std::function<PSeries(HalfExp)>> factors{
      [](HalfExp t) { return macmahon(t); },
      [&](HalfExp t) { return skew_schur_window(nc, {}, VarList::principal(), t, opts); },
      [&](HalfExp t) {
        PSeries sum;
        for (const auto& eta : etas) {
          sum += product_to_top(
              {[&](HalfExp u) { return skew_schur_window(lc, eta, by_nu, u, opts); },
               [&](HalfExp u) { return skew_schur_window(mu, eta, by_nu_conj, u, opts); }},
              t);
        }
        return sum;
      },
  };
  return product_to_top(factors, top - prefactor).shifted(prefactor);
}

bool conjugation_relation_check(const Partition& lambda, const Partition& eta, const Partition& nu) {
  const RationalLaurent lhs = skew_schur_exact(lambda, eta, VarList{nu, 1, {}, -1});
  RationalLaurent rhs = skew_schur_exact(lambda.conjugate(), eta.conjugate(), VarList{nu.conjugate(), 1, {}, +1});
  if ((lambda.size() - eta.size()) % 2 != 0) rhs = -rhs;
  return lhs == rhs;
}

RationalLaurent ratio_box(const Partition& lambda) {
  const int len = lambda.length();
  std::vector<std::pair<HalfExp, Rational>> head;
  for (int i = 1; i <= len; ++i)
    head.emplace_back(HalfExp::from_twice(-2 * lambda[static_cast<std::size_t>(i - 1)] + 2 * i - 1), 1);
  return RationalLaurent(PSeries::from_terms(head)) +
         RationalLaurent::geometric(1, HalfExp::from_twice(2 * len + 1), 1);
}

RationalLaurent descending_sum(const Partition& lambda) {
  const int len = lambda.length();
  std::vector<std::pair<HalfExp, Rational>> head;
  for (int j = 1; j <= len; ++j)
    head.emplace_back(HalfExp::from_twice(2 * lambda[static_cast<std::size_t>(j - 1)] - 2 * j + 1), 1);
  return RationalLaurent(PSeries::from_terms(head)) +
         RationalLaurent::geometric(-1, HalfExp::from_twice(-2 * len + 1), 1);
}

RationalLaurent ratio_two_box(const Partition& lambda) {
  return RationalLaurent(Rational(1)) - ratio_box(lambda) * descending_sum(lambda);
}

}  // namespace topvert
