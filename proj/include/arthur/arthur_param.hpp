#pragma once

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "arthur/cuspidal.hpp"
#include "arthur/half_int.hpp"

namespace arthur {

// psi = sum of rho (x) S_a (x) S_b, kept as a multiset of summands.
struct ArthurParam {
  struct Summand {
    CuspidalLabel rho;
    std::int64_t a = 1, b = 1;

    friend bool operator==(const Summand &, const Summand &) = default;
    friend auto operator<=>(const Summand &s, const Summand &t) {
      return std::tie(s.rho, s.a, s.b) <=> std::tie(t.rho, t.a, t.b);
    }
  };

  GroupKind group = GroupKind::Symplectic;
  std::vector<Summand> summands;

  ArthurParam() = default;
  ArthurParam(GroupKind g, std::vector<Summand> ss) : group(g), summands(std::move(ss)) {
    for (auto &s : summands)
      if (s.a < 1 || s.b < 1)
        throw calc_error("Arthur parameter summand needs a, b >= 1");
    normalize();
  }

  void normalize() { std::sort(summands.begin(), summands.end()); }

  std::int64_t dim() const {
    std::int64_t m = 0;
    for (auto &s : summands)
      m += s.rho.d * s.a * s.b;
    return m;
  }

  bool tempered() const {
    for (auto &s : summands)
      if (s.b != 1)
        return false;
    return true;
  }

  friend bool operator==(const ArthurParam &, const ArthurParam &) = default;
};

// Parity table of section 3.1: rho (x) S_a (x) S_b must be self-dual of the
// same type as the dual group.
inline bool good_parity(const ArthurParam &psi) {
  for (auto &s : psi.summands) {
    const bool even = (s.a + s.b) % 2 == 0;
    switch (s.rho.duality) {
    case Duality::NotSelfDual:
      return false;
    case Duality::Orthogonal:
      if (even != (psi.group == GroupKind::Symplectic))
        return false;
      break;
    case Duality::Symplectic:
      if (even != (psi.group == GroupKind::OddOrthogonal))
        return false;
      break;
    }
  }
  return true;
}

// |S_psi^| = 2^(m - rank) where the relations are alpha_i + alpha_j over
// identical summands plus the central element z_psi. With k distinct
// summands this is 2^(k-1), except that z_psi is dependent when every
// multiplicity is even, leaving 2^k.
inline std::int64_t component_group_order(const ArthurParam &psi) {
  if (!good_parity(psi))
    throw calc_error("component group requires a good-parity parameter");
  std::map<ArthurParam::Summand, std::int64_t> mult;
  for (auto &s : psi.summands)
    ++mult[s];
  const std::int64_t m = static_cast<std::int64_t>(psi.summands.size());
  if (m == 0)
    return 1;
  const std::int64_t k = static_cast<std::int64_t>(mult.size());
  bool z_dependent = true;
  for (auto &[s, c] : mult)
    if (c % 2 != 0)
      z_dependent = false;
  const std::int64_t rank = (m - k) + (z_dependent ? 0 : 1);
  return std::int64_t{1} << (m - rank);
}

} // namespace arthur
