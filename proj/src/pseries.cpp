#include "topvert/pseries.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace topvert {

std::string HalfExp::to_string() const {
  if (is_unbounded()) return "inf";
  if (is_integral()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("not a rational: " + std::string(text));
  r.canonicalize();
  return r;
}

PSeries PSeries::monomial(const Rational& c, HalfExp e, HalfExp top) {
  PSeries s = zero(top);
  if (sgn(c) == 0 || e > top) return s;
  s.lo_ = e.twice();
  s.c_.push_back(c);
  s.c_.back().canonicalize();
  return s;
}

PSeries PSeries::from_terms(const std::vector<std::pair<HalfExp, Rational>>& terms, HalfExp top) {
  std::map<std::int64_t, Rational> acc;
  for (const auto& [e, c] : terms) {
    if (e > top) continue;
    Rational& slot = acc[e.twice()];
    slot += c;
    slot.canonicalize();
  }
  PSeries s = zero(top);
  std::erase_if(acc, [](const auto& kv) { return sgn(kv.second) == 0; });
  if (acc.empty()) return s;
  s.lo_ = acc.begin()->first;
  s.c_.assign(static_cast<std::size_t>(acc.rbegin()->first - s.lo_ + 1), Rational(0));
  for (const auto& [t, c] : acc) s.c_[static_cast<std::size_t>(t - s.lo_)] = c;
  return s;
}

HalfExp PSeries::valuation() const {
  if (c_.empty()) return top_ + HalfExp::half();
  return HalfExp::from_twice(lo_);
}

HalfExp PSeries::degree() const {
  if (c_.empty()) throw std::logic_error("degree of a zero series");
  return HalfExp::from_twice(hi_twice());
}

const Rational* PSeries::find(std::int64_t twice) const {
  if (c_.empty() || twice < lo_ || twice > hi_twice()) return nullptr;
  return &c_[static_cast<std::size_t>(twice - lo_)];
}

Rational PSeries::coeff(HalfExp e) const {
  if (e > top_) throw WindowError("coefficient p^" + e.to_string() + " beyond window top " +
                                  top_.to_string());
  const Rational* c = find(e.twice());
  return c ? *c : Rational(0);
}

std::vector<std::pair<HalfExp, Rational>> PSeries::terms() const {
  std::vector<std::pair<HalfExp, Rational>> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0)
      out.emplace_back(HalfExp::from_twice(lo_ + static_cast<std::int64_t>(i)), c_[i]);
  return out;
}

void PSeries::normalize() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && sgn(c_[lead]) == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    lo_ += static_cast<std::int64_t>(lead);
  }
  if (c_.empty()) lo_ = 0;
}

PSeries PSeries::clipped(HalfExp top) const {
  PSeries s = *this;
  if (top >= top_) return s;
  s.top_ = top;
  if (!s.c_.empty() && s.hi_twice() > top.twice()) {
    std::int64_t keep = top.twice() - s.lo_ + 1;
    s.c_.resize(static_cast<std::size_t>(std::max<std::int64_t>(keep, 0)));
    s.normalize();
  }
  return s;
}

PSeries PSeries::truncated(HalfExp top) const {
  if (top > top_)
    throw WindowError("cannot widen window from " + top_.to_string() + " to " + top.to_string());
  return clipped(top);
}

PSeries PSeries::shifted(HalfExp e) const {
  PSeries s = *this;
  if (!s.c_.empty()) s.lo_ += e.twice();
  s.top_ = top_ + e;
  return s;
}

PSeries PSeries::scaled(const Rational& c) const {
  if (sgn(c) == 0) return zero(top_);
  PSeries s = *this;
  for (auto& x : s.c_) x *= c;
  return s;
}

PSeries PSeries::p_derivative() const {
  PSeries s = *this;
  for (std::size_t i = 0; i < s.c_.size(); ++i)
    s.c_[i] *= Rational(lo_ + static_cast<std::int64_t>(i)) / 2;
  s.normalize();
  return s;
}

PSeries PSeries::reflected() const {
  if (!is_exact()) throw WindowError("only exact series can be reflected");
  PSeries s = *this;
  if (s.c_.empty()) return s;
  s.lo_ = -hi_twice();
  std::reverse(s.c_.begin(), s.c_.end());
  return s;
}

PSeries PSeries::promoted_to_exact() const {
  PSeries s = *this;
  s.top_ = HalfExp::unbounded();
  return s;
}

PSeries PSeries::inverse(std::optional<HalfExp> want) const {
  if (c_.empty()) throw NotInvertible();
  const HalfExp v = HalfExp::from_twice(lo_);
  if (is_exact() && c_.size() == 1) return monomial(1 / c_[0], -v);
  HalfExp top;
  if (is_exact()) {
    if (!want) throw std::invalid_argument("inverting a polynomial needs a window top");
    top = *want;
  } else {
    top = top_ - v - v;
    if (want) top = min(top, *want);
  }
  const std::int64_t len = top.twice() + lo_;
  if (len < 0) return zero(top);
  std::vector<Rational> b(static_cast<std::size_t>(len + 1));
  const Rational inv0 = 1 / c_[0];
  b[0] = inv0;
  Rational acc, tmp;
  for (std::int64_t n = 1; n <= len; ++n) {
    acc = 0;
    const std::int64_t jmax = std::min<std::int64_t>(n, static_cast<std::int64_t>(c_.size()) - 1);
    for (std::int64_t j = 1; j <= jmax; ++j) {
      if (sgn(c_[static_cast<std::size_t>(j)]) == 0) continue;
      add_product(acc, c_[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(n - j)], tmp);
    }
    b[static_cast<std::size_t>(n)] = -acc * inv0;
  }
  PSeries s = zero(top);
  s.lo_ = -lo_;
  s.c_ = std::move(b);
  s.normalize();
  return s;
}

void PSeries::add_scaled_shifted(const PSeries& o, const Rational& c, HalfExp shift) {
  const HalfExp new_top = min(top_, o.top_ + shift);
  if (new_top < top_) *this = clipped(new_top);
  if (o.c_.empty() || sgn(c) == 0) return;
  const std::int64_t olo = o.lo_ + shift.twice();
  std::int64_t ohi = o.hi_twice() + shift.twice();
  if (!new_top.is_unbounded()) ohi = std::min(ohi, new_top.twice());
  if (ohi < olo) return;
  if (c_.empty()) {
    lo_ = olo;
    c_.assign(static_cast<std::size_t>(ohi - olo + 1), Rational(0));
  } else {
    const std::int64_t nlo = std::min(lo_, olo);
    const std::int64_t nhi = std::max(hi_twice(), ohi);
    if (nlo < lo_) {
      std::vector<Rational> grown(static_cast<std::size_t>(nhi - nlo + 1));
      for (std::size_t i = 0; i < c_.size(); ++i)
        grown[static_cast<std::size_t>(lo_ - nlo) + i] = std::move(c_[i]);
      c_ = std::move(grown);
      lo_ = nlo;
    } else if (nhi > hi_twice()) {
      c_.resize(static_cast<std::size_t>(nhi - lo_ + 1));
    }
  }
  Rational tmp;
  const bool unit = (c == 1);
  for (std::int64_t t = olo; t <= ohi; ++t) {
    const Rational& x = o.c_[static_cast<std::size_t>(t - olo)];
    if (sgn(x) == 0) continue;
    Rational& dst = c_[static_cast<std::size_t>(t - lo_)];
    if (unit)
      dst += x;
    else
      add_product(dst, x, c, tmp);
  }
  normalize();
}

PSeries& PSeries::operator+=(const PSeries& o) {
  add_scaled_shifted(o, Rational(1), HalfExp{});
  return *this;
}

PSeries& PSeries::operator-=(const PSeries& o) {
  add_scaled_shifted(o, Rational(-1), HalfExp{});
  return *this;
}

PSeries operator*(const PSeries& a, const PSeries& b) { return multiply(a, b, HalfExp::unbounded()); }

PSeries multiply(const PSeries& a, const PSeries& b, HalfExp cap) {
  const HalfExp top = min(cap, min(a.top_ + b.valuation(), b.top_ + a.valuation()));
  PSeries r = PSeries::zero(top);
  if (a.c_.empty() || b.c_.empty()) return r;
  const std::int64_t lo = a.lo_ + b.lo_;
  std::int64_t hi = a.hi_twice() + b.hi_twice();
  if (!top.is_unbounded()) hi = std::min(hi, top.twice());
  if (hi < lo) return r;
  r.lo_ = lo;
  r.c_.assign(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  Rational tmp;
  const std::int64_t nb = static_cast<std::int64_t>(b.c_.size());
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(a.c_.size()) && i <= hi - lo; ++i) {
    const Rational& x = a.c_[static_cast<std::size_t>(i)];
    if (sgn(x) == 0) continue;
    const std::int64_t jmax = std::min(nb - 1, hi - lo - i);
    for (std::int64_t j = 0; j <= jmax; ++j) {
      const Rational& y = b.c_[static_cast<std::size_t>(j)];
      if (sgn(y) == 0) continue;
      add_product(r.c_[static_cast<std::size_t>(i + j)], x, y, tmp);
    }
  }
  r.normalize();
  return r;
}

bool operator==(const PSeries& a, const PSeries& b) {
  const HalfExp top = min(a.top_, b.top_);
  const PSeries x = a.clipped(top);
  const PSeries y = b.clipped(top);
  return x.lo_ == y.lo_ && x.c_ == y.c_;
}

bool PSeries::identical(const PSeries& o) const {
  return top_ == o.top_ && lo_ == o.lo_ && c_ == o.c_;
}

std::vector<CoeffMismatch> compare(const PSeries& a, const PSeries& b, HalfExp lo, HalfExp hi,
                                   int q) {
  if (a.top() < hi || b.top() < hi)
    throw WindowError("comparison window top " + hi.to_string() + " exceeds known range (" +
                      a.top().to_string() + ", " + b.top().to_string() + ")");
  HalfExp start = lo;
  if (!a.is_zero()) start = min(start, a.valuation());
  if (!b.is_zero()) start = min(start, b.valuation());
  std::vector<CoeffMismatch> out;
  for (std::int64_t t = start.twice(); t <= hi.twice(); ++t) {
    const HalfExp e = HalfExp::from_twice(t);
    Rational x = a.coeff(e), y = b.coeff(e);
    if (x != y) out.push_back({q, e, std::move(x), std::move(y)});
  }
  return out;
}

PSeries pow(const PSeries& base, unsigned exponent) {
  PSeries r = PSeries::constant(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) r = r * base;
  return r;
}

}  // namespace topvert
