#include "topvert/rational_laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace topvert {

namespace {

PSeries multiply_out(const PSeries& num, const std::map<int, int>& factors) {
  PSeries r = num;
  for (const auto& [i, k] : factors)
    if (k > 0) r = r * one_minus_power(i, k);
  return r;
}

// Exact quotient num / (1 - p^i), or nullopt when it does not divide.
std::optional<PSeries> divide_one_minus(const PSeries& num, int i) {
  if (num.is_zero()) return num;
  const std::int64_t lo = num.valuation().twice();
  const std::int64_t hi = num.degree().twice();
  const std::int64_t step = 2 * static_cast<std::int64_t>(i);
  if (hi - lo < step) return std::nullopt;
  std::vector<Rational> q(static_cast<std::size_t>(hi - step - lo + 1));
  for (std::int64_t t = lo; t <= hi - step; ++t) {
    Rational v = num.coeff(HalfExp::from_twice(t));
    if (t - step >= lo) v += q[static_cast<std::size_t>(t - step - lo)];
    q[static_cast<std::size_t>(t - lo)] = v;
  }
  std::vector<std::pair<HalfExp, Rational>> terms;
  for (std::size_t k = 0; k < q.size(); ++k)
    terms.emplace_back(HalfExp::from_twice(lo + static_cast<std::int64_t>(k)), q[k]);
  PSeries quotient = PSeries::from_terms(terms);
  if (!(quotient * one_minus_power(i, 1)).identical(num)) return std::nullopt;
  return quotient;
}

}  // namespace

PSeries one_minus_power(int i, int k) {
  if (i < 1 || k < 0) throw std::invalid_argument("one_minus_power needs i >= 1, k >= 0");
  const PSeries f = PSeries::from_terms(
      {{HalfExp{}, Rational(1)}, {HalfExp::from_int(i), Rational(-1)}});
  return pow(f, static_cast<unsigned>(k));
}

RationalLaurent::RationalLaurent(const Rational& c) : num_(PSeries::constant(c)) {}

RationalLaurent::RationalLaurent(PSeries numerator, std::map<int, int> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (!num_.is_exact()) throw std::invalid_argument("numerator must be an exact polynomial");
  for (const auto& [i, k] : den_)
    if (i < 1 || k < 0) throw std::invalid_argument("bad denominator factor");
  std::erase_if(den_, [](const auto& kv) { return kv.second == 0; });
}

RationalLaurent RationalLaurent::monomial(const Rational& c, HalfExp e) {
  return RationalLaurent(PSeries::monomial(c, e));
}

RationalLaurent RationalLaurent::geometric(const Rational& c, HalfExp e, int i) {
  return RationalLaurent(PSeries::monomial(c, e), {{i, 1}});
}

RationalLaurent RationalLaurent::inverse_negative_factor(int i) {
  return geometric(Rational(-1), HalfExp::from_int(i), i);
}

PSeries RationalLaurent::expand(HalfExp top) const {
  if (num_.is_zero()) return PSeries::zero(top);
  const std::int64_t lo = num_.valuation().twice();
  if (top.twice() < lo) return PSeries::zero(top);
  std::vector<Rational> g(static_cast<std::size_t>(top.twice() - lo + 1));
  for (const auto& [e, c] : num_.terms())
    if (e <= top) g[static_cast<std::size_t>(e.twice() - lo)] = c;
  for (const auto& [i, k] : den_) {
    const std::size_t step = 2 * static_cast<std::size_t>(i);
    for (int rep = 0; rep < k; ++rep)
      for (std::size_t t = step; t < g.size(); ++t)
        if (sgn(g[t - step]) != 0) g[t] += g[t - step];
  }
  std::vector<std::pair<HalfExp, Rational>> terms;
  terms.reserve(g.size());
  for (std::size_t t = 0; t < g.size(); ++t)
    if (sgn(g[t]) != 0) terms.emplace_back(HalfExp::from_twice(lo + static_cast<std::int64_t>(t)), g[t]);
  return PSeries::from_terms(terms, top);
}

RationalLaurent RationalLaurent::reduced() const {
  RationalLaurent r = *this;
  for (auto& [i, k] : r.den_) {
    while (k > 0) {
      auto q = divide_one_minus(r.num_, i);
      if (!q) break;
      r.num_ = std::move(*q);
      --k;
    }
  }
  std::erase_if(r.den_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

RationalLaurent RationalLaurent::reflected() const {
  int sign_count = 0;
  std::int64_t shift = 0;
  for (const auto& [i, k] : den_) {
    sign_count += k;
    shift += static_cast<std::int64_t>(i) * k;
  }
  const Rational sign(sign_count % 2 == 0 ? 1 : -1);
  return RationalLaurent(num_.reflected().scaled(sign).shifted(HalfExp::from_int(shift)), den_);
}

RationalLaurent RationalLaurent::scaled(const Rational& c) const {
  RationalLaurent r = *this;
  r.num_ = r.num_.scaled(c);
  return r;
}

RationalLaurent RationalLaurent::shifted(HalfExp e) const {
  RationalLaurent r = *this;
  r.num_ = r.num_.shifted(e);
  return r;
}

RationalLaurent& RationalLaurent::operator+=(const RationalLaurent& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  std::map<int, int> common = den_;
  for (const auto& [i, k] : o.den_) common[i] = std::max(common[i], k);
  std::map<int, int> mine, theirs;
  for (const auto& [i, k] : common) {
    auto a = den_.find(i);
    auto b = o.den_.find(i);
    mine[i] = k - (a == den_.end() ? 0 : a->second);
    theirs[i] = k - (b == o.den_.end() ? 0 : b->second);
  }
  num_ = multiply_out(num_, mine) + multiply_out(o.num_, theirs);
  den_ = std::move(common);
  if (num_.is_zero()) den_.clear();
  return *this;
}

RationalLaurent& RationalLaurent::operator-=(const RationalLaurent& o) { return *this += -o; }

RationalLaurent& RationalLaurent::operator*=(const RationalLaurent& o) {
  num_ = num_ * o.num_;
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  for (const auto& [i, k] : o.den_) den_[i] += k;
  return *this;
}

bool operator==(const RationalLaurent& a, const RationalLaurent& b) {
  // a.num * b.den == b.num * a.den, after removing the shared factors.
  std::map<int, int> for_a, for_b;
  for (const auto& [i, k] : b.den_) {
    auto it = a.den_.find(i);
    const int shared = it == a.den_.end() ? 0 : std::min(k, it->second);
    for_a[i] = k - shared;
  }
  for (const auto& [i, k] : a.den_) {
    auto it = b.den_.find(i);
    const int shared = it == b.den_.end() ? 0 : std::min(k, it->second);
    for_b[i] = k - shared;
  }
  return multiply_out(a.num_, for_a).identical(multiply_out(b.num_, for_b));
}

std::string RationalLaurent::to_string() const {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (const auto& [e, c] : num_.terms()) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str() << "*p^" << e.to_string();
  }
  if (first) out << "0";
  out << ")";
  for (const auto& [i, k] : den_) out << "/(1-p^" << i << ")^" << k;
  return out.str();
}

RationalLaurent pow(const RationalLaurent& base, int exponent) {
  if (exponent >= 0) {
    RationalLaurent r(Rational(1));
    for (int i = 0; i < exponent; ++i) r *= base;
    return r;
  }
  // Invertible only when the numerator is a monomial times factors (1 - p^i).
  const RationalLaurent red = base.reduced();
  PSeries num = red.numerator();
  if (num.is_zero()) throw NotInvertible();
  std::map<int, int> pulled;
  const std::int64_t span = num.degree().twice() - num.valuation().twice();
  for (int i = 1; 2 * i <= span && !num.is_zero(); ++i) {
    while (true) {
      const std::int64_t s = num.degree().twice() - num.valuation().twice();
      if (s < 2 * i) break;
      auto q = divide_one_minus(num, i);
      if (!q) break;
      num = std::move(*q);
      ++pulled[i];
    }
  }
  if (num.terms().size() != 1) throw NotInvertible();
  const auto [e, c] = num.terms().front();
  RationalLaurent inv(multiply_out(PSeries::monomial(1 / c, -e), red.denominator()), pulled);
  return pow(inv, -exponent);
}

}  // namespace topvert
