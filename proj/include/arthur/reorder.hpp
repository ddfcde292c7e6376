#pragma once

#include <optional>

#include "arthur/ext_multi_segment.hpp"

namespace arthur {

namespace detail {

// Definition 3.13 on one rho-part, i 0-based, acting on (i, i+1).
// Equal segments swap trivially (all three cases coincide on Rep states and
// the identity keeps (R_i)^2 = id in general). Returns false when no case
// applies: the pair sits in reversed-admissible position.
inline bool reorder_part(std::vector<ExtSegment> &part, std::size_t i) {
  ExtSegment &p = part[i];
  ExtSegment &q = part[i + 1];
  if (p.A == q.A && p.B == q.B)
    return true;
  const bool p_in_q = q.B <= p.B && p.A <= q.A; // [i] subset [i+1]
  const bool q_in_p = p.B <= q.B && q.A <= p.A; // [i] superset [i+1]
  if (p_in_q) {
    const ExtSegment np(q.A, q.B, 2 * p.mu - q.mu);
    const ExtSegment nq(p.A, p.B, p.mu);
    p = np;
    q = nq;
    return true;
  }
  if (q_in_p) {
    const ExtSegment np(q.A, q.B, q.mu);
    const ExtSegment nq(p.A, p.B, 2 * q.mu - p.mu);
    p = np;
    q = nq;
    return true;
  }
  if (q.A >= p.A && q.B >= p.B)
    return true; // case (3): identity
  return false;
}

inline bool standard_pair(const ExtSegment &p, const ExtSegment &q) {
  // p may precede q in a standard sequence
  return !(q.B < p.B || (q.B == p.B && q.A > p.A));
}

} // namespace detail

// R_i^rho with 1-based i, 1 <= i < n_rho. Empty result = the operation is
// unavailable on a crossing pair (no case of Definition 3.13 applies).
inline std::optional<ExtMultiSegment> try_reorder(const ExtMultiSegment &S,
                                                  const CuspidalLabel &rho,
                                                  std::int64_t i) {
  auto it = S.parts.find(rho);
  if (it == S.parts.end() || i < 1 ||
      static_cast<std::size_t>(i) >= it->second.size())
    throw calc_error("reorder: index out of range");
  ExtMultiSegment out = S;
  if (!detail::reorder_part(out.parts[rho], static_cast<std::size_t>(i - 1)))
    return std::nullopt;
  return out;
}

inline ExtMultiSegment reorder(const ExtMultiSegment &S, const CuspidalLabel &rho,
                               std::int64_t i) {
  auto r = try_reorder(S, rho, i);
  if (!r)
    throw calc_error("reorder unavailable: adjacent pair is crossing");
  return *r;
}

// Proposition 3.18: sort every rho-part into (B ascending, A descending)
// order by reorder moves. From an admissible input every out-of-order
// adjacent pair is properly nested, so the sort cannot get stuck.
inline ExtMultiSegment standard_form(const ExtMultiSegment &S) {
  ExtMultiSegment out = S;
  for (auto &[rho, part] : out.parts) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (std::size_t i = 0; i + 1 < part.size(); ++i) {
        if (detail::standard_pair(part[i], part[i + 1]))
          continue;
        if (!detail::reorder_part(part, i))
          throw calc_error("standard_form: stuck on a crossing pair "
                           "(input was not admissible)");
        if (detail::standard_pair(part[i], part[i + 1]))
          moved = true;
        else
          throw calc_error("standard_form: reorder did not advance the order");
      }
    }
  }
  return out;
}

} // namespace arthur
