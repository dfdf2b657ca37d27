#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace topvert {

/// An exponent of p that may be half-integral, stored as twice its value
/// (p^(3/2) stores 3). Arithmetic never rounds.
///
/// A dedicated "unbounded" value marks the window top of an exactly known
/// series; sums involving it saturate.
class HalfExp {
 public:
  constexpr HalfExp() = default;

  static constexpr HalfExp from_twice(std::int64_t twice) {
    HalfExp h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfExp from_int(std::int64_t value) { return from_twice(2 * value); }
  static constexpr HalfExp unbounded() { return from_twice(kUnbounded); }
  /// The smallest positive exponent step, p^(1/2).
  static constexpr HalfExp half() { return from_twice(1); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_unbounded() const { return twice_ >= kUnbounded / 2; }
  constexpr bool is_integral() const { return twice_ % 2 == 0; }

  /// Largest integer not exceeding the value.
  constexpr std::int64_t floor() const {
    return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2);
  }
  /// Smallest integer not below the value.
  constexpr std::int64_t ceil() const { return -from_twice(-twice_).floor(); }

  std::string to_string() const;

  friend constexpr HalfExp operator+(HalfExp a, HalfExp b) {
    if (a.is_unbounded() || b.is_unbounded()) return unbounded();
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfExp operator-(HalfExp a, HalfExp b) {
    if (a.is_unbounded()) return unbounded();
    return from_twice(a.twice_ - b.twice_);
  }
  friend constexpr HalfExp operator-(HalfExp a) { return from_twice(-a.twice_); }
  friend constexpr HalfExp operator*(std::int64_t k, HalfExp a) {
    return from_twice(k * a.twice_);
  }
  constexpr HalfExp& operator+=(HalfExp o) { return *this = *this + o; }
  constexpr HalfExp& operator-=(HalfExp o) { return *this = *this - o; }

  friend constexpr auto operator<=>(HalfExp, HalfExp) = default;
  friend constexpr bool operator==(HalfExp, HalfExp) = default;

 private:
  static constexpr std::int64_t kUnbounded = std::int64_t{1} << 52;
  std::int64_t twice_ = 0;
};

constexpr HalfExp operator""_hp(unsigned long long twice) {
  return HalfExp::from_twice(static_cast<std::int64_t>(twice));
}

inline HalfExp min(HalfExp a, HalfExp b) { return a < b ? a : b; }
inline HalfExp max(HalfExp a, HalfExp b) { return a < b ? b : a; }

}  // namespace topvert
