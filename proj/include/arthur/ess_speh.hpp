#pragma once

#include <string>

#include "arthur/ladder.hpp"

namespace arthur {

// Tadic's 2x2 notation u_ess(u v; x y) for an essentially Speh
// representation: Langlands data Delta[v,u], Delta[v+1,u+1], ..., Delta[y,x]
// (the first row holds (y_1, x_1), the last (y_n, x_n), rows translate by 1).
struct UEssMatrix {
  HalfInt u, v, x, y;

  UEssMatrix() = default;
  UEssMatrix(HalfInt tl, HalfInt tr, HalfInt bl, HalfInt br)
      : u(tl), v(tr), x(bl), y(br) {
    if (!same_lattice(u, v) || !same_lattice(u, x) || !same_lattice(u, y))
      throw calc_error("u_ess matrix entries must lie on one lattice");
    if ((x - u) != (y - v))
      throw calc_error("u_ess matrix rows are not translates of each other");
    if (x < u)
      throw calc_error("u_ess matrix needs a non-negative number of rows");
  }

  std::int64_t rows() const { return (x - u).twice / 2 + 1; }

  friend bool operator==(const UEssMatrix &, const UEssMatrix &) = default;

  std::string str() const {
    return "u_ess(" + u.str() + "," + v.str() + ";" + x.str() + "," + y.str() + ")";
  }
};

// u_rho(a,b)|.|^s with the derived A = (a+b)/2 - 1, B = (a-b)/2.
struct EssSpeh {
  CuspidalLabel rho;
  std::int64_t a = 1, b = 1;
  HalfInt s;

  EssSpeh() = default;
  EssSpeh(CuspidalLabel r, std::int64_t a_, std::int64_t b_, HalfInt s_ = HalfInt(0))
      : rho(std::move(r)), a(a_), b(b_), s(s_) {
    if (a < 1 || b < 1)
      throw calc_error("u_rho(a,b): a and b must be positive");
  }

  HalfInt A() const { return HalfInt::from_twice(a + b - 2); }
  HalfInt B() const { return HalfInt::from_twice(a - b); }

  // Ladder with segments Delta[B+s+i-1, -A+s+i-1], i = 1..b.
  Ladder ladder() const {
    std::vector<std::pair<HalfInt, HalfInt>> segs;
    segs.reserve(static_cast<std::size_t>(b));
    for (std::int64_t i = 0; i < b; ++i)
      segs.emplace_back(B() + s + HalfInt(i), -A() + s + HalfInt(i));
    return Ladder(rho, std::move(segs));
  }

  EssSpeh contragredient() const { return EssSpeh(rho.dual(), a, b, -s); }

  friend bool operator==(const EssSpeh &, const EssSpeh &) = default;

  std::string str() const {
    std::string t = "u_" + rho.display() + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (s.twice != 0)
      t += "|.|^" + s.str();
    return t;
  }
};

// u_rho(a,b)|.|^s = u_ess(-A+s, B+s; -B+s, A+s).
inline UEssMatrix ess_speh_to_matrix(const EssSpeh &u) {
  return UEssMatrix(-u.A() + u.s, u.B() + u.s, -u.B() + u.s, u.A() + u.s);
}

inline EssSpeh matrix_to_ess_speh(const CuspidalLabel &rho, const UEssMatrix &m) {
  // solve A+s = y, B+s = v, -A+s = u, -B+s = x
  const HalfInt two_s = m.u + m.y; // = v + x by the row-translate invariant
  const HalfInt two_A = m.y - m.u;
  const HalfInt two_B = m.v - m.x;
  const std::int64_t a = (two_A + two_B).twice / 4 + 1;
  const std::int64_t b = (two_A - two_B).twice / 4 + 1;
  if (a < 1 || b < 1)
    throw calc_error("matrix does not describe an essentially Speh representation");
  EssSpeh u(rho, a, b, HalfInt::from_twice(two_s.twice / 2));
  if (ess_speh_to_matrix(u) != m)
    throw calc_error("matrix entries inconsistent with u_ess form");
  return u;
}

enum class SpehType { Unitary, Small, Big, NonHalfIntegral };

inline std::string to_string(SpehType t) {
  switch (t) {
  case SpehType::Unitary: return "unitary";
  case SpehType::Small: return "small";
  case SpehType::Big: return "big";
  default: return "non-half-integral";
  }
}

// Four-way classification of u_rho(a,b)|.|^s, s >= 0. Exponents are exact
// half-integers here, so the non-half-integral type arises only from a
// non-self-dual rho.
inline SpehType classify_type(const EssSpeh &u) {
  if (u.s < HalfInt(0))
    throw calc_error("classify_type: normalize s >= 0 via contragredient first");
  if (!u.rho.self_dual())
    return SpehType::NonHalfIntegral;
  if (u.s.twice == 0)
    return SpehType::Unitary;
  return 2 * u.s <= HalfInt(u.a - 1) ? SpehType::Small : SpehType::Big;
}

// Theorem 2.3 (Tadic): pi_1 x pi_2 reduces iff [u_1,y_1] cup [u_2,y_2] is a
// segment on one line and the matrices compare strictly componentwise.
inline bool tadic_reducible(const EssSpeh &p1, const EssSpeh &p2) {
  if (!(p1.rho == p2.rho))
    return false;
  const UEssMatrix m1 = ess_speh_to_matrix(p1);
  const UEssMatrix m2 = ess_speh_to_matrix(p2);
  if (!same_lattice(m1.u, m2.u))
    return false;
  // [u_i, y_i] is the interval of exponents between the matrix corners
  const HalfInt lo = m1.u > m2.u ? m1.u : m2.u;
  const HalfInt hi = m1.y < m2.y ? m1.y : m2.y;
  if (lo.twice > hi.twice + 2)
    return false; // union not a segment
  const bool lt = m1.u < m2.u && m1.v < m2.v && m1.x < m2.x && m1.y < m2.y;
  const bool gt = m2.u < m1.u && m2.v < m1.v && m2.x < m1.x && m2.y < m1.y;
  return lt || gt;
}

} // namespace arthur
