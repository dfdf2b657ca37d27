#include "topvert/qseries.hpp"

#include <stdexcept>
#include <string>

namespace topvert {

QSeries::QSeries(int order, const PSeries& fill) {
  if (order < 0) throw std::invalid_argument("negative q-order");
  c_.assign(static_cast<std::size_t>(order) + 1, fill);
}

QSeries QSeries::constant(const PSeries& c, int order) {
  QSeries s(order);
  s[0] = c;
  return s;
}

HalfExp QSeries::min_top() const {
  HalfExp t = HalfExp::unbounded();
  for (const auto& c : c_) t = min(t, c.top());
  return t;
}

QSeries QSeries::truncated(HalfExp top) const {
  QSeries s = *this;
  for (auto& c : s.c_) c = c.truncated(top);
  return s;
}

QSeries QSeries::scaled(const PSeries& c) const {
  QSeries s = *this;
  for (auto& x : s.c_) x = x * c;
  return s;
}

QSeries QSeries::q_shifted(int k) const {
  QSeries s(order());
  for (int d = 0; d + k <= order(); ++d) s[d + k] = (*this)[d];
  return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("q-order mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("q-order mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("q-order mismatch");
  QSeries r(a.order());
  for (int d = 0; d <= a.order(); ++d)
    for (int i = 0; i <= d; ++i) r[d] += a[i] * b[d - i];
  return r;
}

QSeries qs_invert(const QSeries& a, std::optional<HalfExp> want) {
  QSeries b(a.order());
  b[0] = a[0].inverse(want);
  for (int d = 1; d <= a.order(); ++d) {
    PSeries acc;
    for (int j = 1; j <= d; ++j) acc += a[j] * b[d - j];
    b[d] = -(b[0] * acc);
  }
  return b;
}

std::vector<CoeffMismatch> compare(const QSeries& a, const QSeries& b, HalfExp lo, HalfExp hi) {
  if (a.order() != b.order()) throw std::invalid_argument("q-order mismatch");
  std::vector<CoeffMismatch> out;
  for (int d = 0; d <= a.order(); ++d) {
    auto m = compare(a[d], b[d], lo, hi, d);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

ShiftedQSeries operator*(const ShiftedQSeries& a, const ShiftedQSeries& b) {
  return {a.offset + b.offset, a.series * b.series};
}

ShiftedQSeries qs_invert(const ShiftedQSeries& a, std::optional<HalfExp> want) {
  return {-a.offset, qs_invert(a.series, want)};
}

namespace {
constexpr int kMaxRetries = 24;
}

QSeries build_to_top(const std::function<QSeries(HalfExp)>& build, HalfExp top) {
  HalfExp internal = top;
  for (int i = 0; i < kMaxRetries; ++i) {
    QSeries r = build(internal);
    const HalfExp got = r.min_top();
    if (got >= top) return r.truncated(top);
    internal = internal + (top - got) + HalfExp::from_int(1);
  }
  throw WindowError("could not reach window top " + top.to_string());
}

PSeries build_to_top(const std::function<PSeries(HalfExp)>& build, HalfExp top) {
  HalfExp internal = top;
  for (int i = 0; i < kMaxRetries; ++i) {
    PSeries r = build(internal);
    if (r.top() >= top) return r.truncated(top);
    internal = internal + (top - r.top()) + HalfExp::from_int(1);
  }
  throw WindowError("could not reach window top " + top.to_string());
}

PSeries product_to_top(const std::vector<std::function<PSeries(HalfExp)>>& factors, HalfExp top) {
  const std::size_t n = factors.size();
  if (n == 0) return PSeries::constant(Rational(1)).truncated(top);
  std::vector<HalfExp> val(n);
  for (std::size_t i = 0; i < n; ++i) {
    PSeries probe = factors[i](top);
    if (probe.is_zero() && probe.is_exact()) return PSeries::zero(top);
    val[i] = probe.valuation();
  }
  HalfExp margin{};
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    PSeries prod = PSeries::constant(Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
      HalfExp others{};
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) others += val[j];
      PSeries f = factors[i](top - others + margin);
      if (!f.is_zero()) val[i] = max(val[i], f.valuation());
      prod = prod * f;
    }
    if (prod.top() >= top) return prod.truncated(top);
    margin += HalfExp::from_int(1);
  }
  throw WindowError("product could not reach window top " + top.to_string());
}

}  // namespace topvert
