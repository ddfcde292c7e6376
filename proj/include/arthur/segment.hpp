#pragma once

#include <string>
#include <vector>

#include "arthur/cuspidal.hpp"
#include "arthur/half_int.hpp"

namespace arthur {

// [x,y]_rho = {rho|.|^x, ..., rho|.|^y}, x >= y, x - y integral.
struct Segment {
  CuspidalLabel rho;
  HalfInt x, y;

  Segment() = default;
  Segment(CuspidalLabel r, HalfInt top, HalfInt bottom)
      : rho(std::move(r)), x(top), y(bottom) {
    if (!same_lattice(x, y))
      throw calc_error("segment [" + x.str() + "," + y.str() + "]: x - y not integral");
    if (x < y)
      throw calc_error("segment [" + x.str() + "," + y.str() + "]: x < y");
  }

  std::int64_t length() const { return (x - y).twice / 2 + 1; }

  friend bool operator==(const Segment &, const Segment &) = default;
  friend auto operator<=>(const Segment &a, const Segment &b) {
    if (auto c = a.rho <=> b.rho; c != 0)
      return c;
    if (auto c = a.x <=> b.x; c != 0)
      return c;
    return a.y <=> b.y;
  }

  std::string str() const {
    return "[" + x.str() + "," + y.str() + "]_" + rho.display();
  }
};

inline bool same_line(const Segment &a, const Segment &b) {
  return a.rho == b.rho && same_lattice(a.x, b.x);
}

// Definition 2.1: linked iff the union is a segment and neither contains the
// other. Segments on different cuspidal lines are never linked.
inline bool linked(const Segment &a, const Segment &b) {
  if (!same_line(a, b))
    return false;
  const bool a_in_b = b.y <= a.y && a.x <= b.x;
  const bool b_in_a = a.y <= b.y && b.x <= a.x;
  if (a_in_b || b_in_a)
    return false;
  // union contiguous: max of the lower start <= min of the upper end + 1
  const HalfInt lo = a.y > b.y ? a.y : b.y;
  const HalfInt hi = a.x < b.x ? a.x : b.x;
  return lo.twice <= hi.twice + 2;
}

// a precedes b: linked and min(b) = min(a) + i with i > 0.
inline bool precedes(const Segment &a, const Segment &b) {
  return linked(a, b) && a.y < b.y;
}

} // namespace arthur
