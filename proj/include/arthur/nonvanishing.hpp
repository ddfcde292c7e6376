#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "arthur/reorder.hpp"

namespace arthur {

// Definitions 3.20/3.21: connectedness and the alternating mu-difference on
// a standard rho-part. Indices are 1-based.
inline bool connected(const ExtMultiSegment &S, const CuspidalLabel &rho,
                      std::int64_t i, std::int64_t j) {
  if (!is_standard(S))
    throw calc_error("connected requires a standard multi-segment");
  auto it = S.parts.find(rho);
  if (it == S.parts.end())
    throw calc_error("connected: no such rho-part");
  const auto &part = it->second;
  if (i < 1 || j < i || static_cast<std::size_t>(j) > part.size())
    throw calc_error("connected: indices out of range");
  const HalfInt Ai = part[static_cast<std::size_t>(i - 1)].A;
  const HalfInt Aj = part[static_cast<std::size_t>(j - 1)].A;
  for (std::int64_t k = i + 1; k < j; ++k) {
    const HalfInt Ak = part[static_cast<std::size_t>(k - 1)].A;
    if (Ai >= Ak && Ak >= Aj)
      return false;
    if (Ai < Ak && Ak < Aj)
      return false;
  }
  return true;
}

// Delta_S(mu_i, mu_j) = sum_{m=i}^{j-1} (-1)^{#{m<k<j : A_i >= A_k}} (mu_{m+1} - mu_m),
// extended by antisymmetry and Delta(mu_i, mu_i) = 0.
inline std::int64_t delta_S(const ExtMultiSegment &S, const CuspidalLabel &rho,
                            std::int64_t i, std::int64_t j) {
  if (j < i)
    return -delta_S(S, rho, j, i);
  if (i == j)
    return 0;
  if (!is_standard(S))
    throw calc_error("delta_S requires a standard multi-segment");
  auto it = S.parts.find(rho);
  if (it == S.parts.end())
    throw calc_error("delta_S: no such rho-part");
  const auto &part = it->second;
  if (i < 1 || static_cast<std::size_t>(j) > part.size())
    throw calc_error("delta_S: indices out of range");
  const HalfInt Ai = part[static_cast<std::size_t>(i - 1)].A;
  std::int64_t total = 0;
  for (std::int64_t m = i; m < j; ++m) {
    std::int64_t blockers = 0;
    for (std::int64_t k = m + 1; k < j; ++k)
      if (Ai >= part[static_cast<std::size_t>(k - 1)].A)
        ++blockers;
    const std::int64_t diff =
        part[static_cast<std::size_t>(m)].mu - part[static_cast<std::size_t>(m - 1)].mu;
    total += (blockers % 2 == 0) ? diff : -diff;
  }
  return total;
}

// Condition (nec-negative): |mu_hat_i| <= a_i everywhere.
inline bool mu_hat_condition(const ExtMultiSegment &S) {
  for (auto &[rho, part] : S.parts)
    for (auto &e : part) {
      const std::int64_t mh = e.mu_hat();
      if (mh > e.a() || -mh > e.a())
        return false;
    }
  return true;
}

// Theorem 3.22 evaluated on the standard form: membership in Rep, i.e.
// pi(S) != 0. Throws when S is not an extended multi-segment at all;
// returns false when S is not admissible (Rep is a subset of AdExMult).
inline bool in_srep(const ExtMultiSegment &S) {
  const ValidationReport rep = validate(S);
  if (!rep.is_extended_multi_segment())
    throw calc_error("in_srep: not an extended multi-segment: " + S.str());
  if (!rep.veryAdmissibleWhereNeeded)
    return false;
  const ExtMultiSegment T = standard_form(S);
  if (!mu_hat_condition(T))
    return false;
  for (auto &[rho, part] : T.parts) {
    const std::int64_t n = static_cast<std::int64_t>(part.size());
    for (std::int64_t i = 1; i <= n; ++i)
      for (std::int64_t j = i + 1; j <= n; ++j) {
        if (!connected(T, rho, i, j))
          continue;
        const auto &p = part[static_cast<std::size_t>(i - 1)];
        const auto &q = part[static_cast<std::size_t>(j - 1)];
        const std::int64_t lhs =
            abs(q.A - p.A).twice / 2 + abs(q.B - p.B).twice / 2;
        const std::int64_t d = delta_S(T, rho, i, j);
        if (lhs < (d >= 0 ? d : -d))
          return false;
      }
  }
  return true;
}

namespace detail {

inline bool part_nec(const std::vector<ExtSegment> &part) {
  for (std::size_t i = 0; i + 1 < part.size(); ++i) {
    const auto &p = part[i];
    const auto &q = part[i + 1];
    const std::int64_t lhs = abs(q.A - p.A).twice / 2 + abs(q.B - p.B).twice / 2;
    const std::int64_t rhs = q.mu >= p.mu ? q.mu - p.mu : p.mu - q.mu;
    if (lhs < rhs)
      return false;
  }
  return true;
}

} // namespace detail

// All rho-part sequences reachable by reorder moves, BFS with a state bound.
// Crossing pairs and case-(3) identities generate no new state.
inline std::set<std::vector<ExtSegment>>
reorder_orbit(const std::vector<ExtSegment> &part, std::int64_t max_states) {
  std::set<std::vector<ExtSegment>> seen{part};
  std::deque<std::vector<ExtSegment>> queue{part};
  while (!queue.empty()) {
    std::vector<ExtSegment> cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      std::vector<ExtSegment> next = cur;
      if (!detail::reorder_part(next, i))
        continue;
      if (seen.insert(next).second) {
        if (static_cast<std::int64_t>(seen.size()) > max_states)
          throw calc_error("reorder orbit exceeds the state bound");
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

// Definition 3.17 verbatim: every reordering satisfies Eq. (nec) and S
// satisfies (nec-negative). The brute-force oracle for in_srep.
inline bool in_rep_bruteforce(const ExtMultiSegment &S, std::int64_t max_states = 1 << 20) {
  const ValidationReport rep = validate(S);
  if (!rep.is_extended_multi_segment())
    throw calc_error("in_rep_bruteforce: not an extended multi-segment");
  if (!rep.veryAdmissibleWhereNeeded)
    return false;
  if (!mu_hat_condition(S))
    return false;
  for (auto &[rho, part] : S.parts) {
    if (!detail::part_nec(part))
      return false;
    std::set<std::vector<ExtSegment>> seen{part};
    std::deque<std::vector<ExtSegment>> queue{part};
    while (!queue.empty()) {
      std::vector<ExtSegment> cur = std::move(queue.front());
      queue.pop_front();
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        std::vector<ExtSegment> next = cur;
        if (!detail::reorder_part(next, i))
          continue;
        if (!detail::part_nec(next))
          return false;
        if (seen.insert(next).second) {
          if (static_cast<std::int64_t>(seen.size()) > max_states)
            throw calc_error("in_rep_bruteforce exceeds the state bound");
          queue.push_back(std::move(next));
        }
      }
    }
  }
  return true;
}

// Packet parametrization: all standard extended multi-segments over the
// (A_i, B_i) of psi with every mu grid, filtered by the sign condition and
// the non-vanishing criterion.
inline std::vector<ExtMultiSegment> enumerate_packet(const ArthurParam &psi) {
  if (!good_parity(psi))
    throw calc_error("enumerate_packet needs a good-parity parameter");
  ExtMultiSegment base(psi.group);
  for (auto &s : psi.summands) {
    const HalfInt A = HalfInt::from_twice(s.a + s.b - 2);
    const HalfInt B = HalfInt::from_twice(s.a - s.b);
    base.parts[s.rho].emplace_back(A, B, s.b % 2 == 0 ? 0 : 1);
  }
  for (auto &[rho, part] : base.parts)
    std::sort(part.begin(), part.end(), [](const ExtSegment &p, const ExtSegment &q) {
      if (p.B != q.B)
        return p.B < q.B;
      return p.A > q.A;
    });

  std::vector<ExtMultiSegment> out;
  // walk the mu grid |mu_i| <= b_i, mu_i = b_i mod 2 across all parts
  std::vector<std::pair<CuspidalLabel, std::size_t>> slots;
  for (auto &[rho, part] : base.parts)
    for (std::size_t i = 0; i < part.size(); ++i)
      slots.emplace_back(rho, i);
  std::function<void(std::size_t, ExtMultiSegment &)> rec = [&](std::size_t slot,
                                                                ExtMultiSegment &cur) {
    if (slot == slots.size()) {
      if (!sign_condition(cur))
        return;
      if (in_srep(cur))
        out.push_back(cur);
      return;
    }
    auto &[rho, idx] = slots[slot];
    ExtSegment &e = cur.parts[rho][idx];
    const std::int64_t b = e.b();
    for (std::int64_t mu = -b; mu <= b; mu += 2) {
      e = ExtSegment(e.A, e.B, mu);
      rec(slot + 1, cur);
    }
  };
  ExtMultiSegment work = base;
  rec(0, work);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace arthur
