#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

namespace arthur {

struct calc_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of (1/2)Z, stored as twice its value so all arithmetic is exact.
struct HalfInt {
  std::int64_t twice = 0;

  constexpr HalfInt() = default;
  constexpr HalfInt(std::int64_t n) : twice(2 * n) {}

  static constexpr HalfInt from_twice(std::int64_t t) {
    HalfInt h;
    h.twice = t;
    return h;
  }
  static constexpr HalfInt half(std::int64_t numerator) {
    return from_twice(numerator);
  }

  constexpr bool integral() const { return twice % 2 == 0; }

  // Only valid when integral().
  constexpr std::int64_t as_int() const {
    if (!integral())
      throw calc_error("HalfInt: " + std::to_string(twice) + "/2 is not an integer");
    return twice / 2;
  }

  constexpr std::int64_t floor() const {
    // round toward minus infinity
    return twice >= 0 ? twice / 2 : (twice - 1) / 2;
  }
  constexpr std::int64_t ceil() const {
    return twice >= 0 ? (twice + 1) / 2 : twice / 2;
  }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return from_twice(a.twice + b.twice);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return from_twice(a.twice - b.twice);
  }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice); }
  friend constexpr HalfInt operator*(std::int64_t n, HalfInt a) {
    return from_twice(n * a.twice);
  }
  constexpr HalfInt &operator+=(HalfInt b) {
    twice += b.twice;
    return *this;
  }
  constexpr HalfInt &operator-=(HalfInt b) {
    twice -= b.twice;
    return *this;
  }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string str() const {
    if (integral())
      return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
  friend std::ostream &operator<<(std::ostream &os, HalfInt h) {
    return os << h.str();
  }
};

inline constexpr HalfInt abs(HalfInt h) {
  return h.twice >= 0 ? h : -h;
}

// x - y is an integer, i.e. the two exponents sit on the same lattice.
inline constexpr bool same_lattice(HalfInt x, HalfInt y) {
  return (x.twice - y.twice) % 2 == 0;
}

} // namespace arthur
