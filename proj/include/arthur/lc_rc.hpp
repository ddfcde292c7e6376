#pragma once

#include <functional>
#include <vector>

#include "arthur/segment.hpp"

namespace arthur {

namespace detail {

// Kuhn's augmenting-path matching; returns the maximum matching size.
inline std::int64_t max_matching(const std::vector<std::vector<int>> &adj, int right_size) {
  std::vector<int> match_right(static_cast<std::size_t>(right_size), -1);
  std::vector<char> seen;
  std::function<bool(int)> try_augment = [&](int u) -> bool {
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(v)])
        continue;
      seen[static_cast<std::size_t>(v)] = 1;
      if (match_right[static_cast<std::size_t>(v)] < 0 ||
          try_augment(match_right[static_cast<std::size_t>(v)])) {
        match_right[static_cast<std::size_t>(v)] = u;
        return true;
      }
    }
    return false;
  };
  std::int64_t size = 0;
  for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
    seen.assign(static_cast<std::size_t>(right_size), 0);
    if (try_augment(u))
      ++size;
  }
  return size;
}

inline Segment shift_left(const Segment &s) {
  return Segment(s.rho, s.x - HalfInt(1), s.y - HalfInt(1));
}

} // namespace detail

// LC(Delta, m): an injective f from X = {j : Delta < Delta_j} into
// Y = {j : shift(Delta) < Delta_j} with Delta_{f(x)} < Delta_x.
inline bool lc_condition(const Segment &delta, const std::vector<Segment> &m) {
  std::vector<int> X, Y;
  const Segment left = detail::shift_left(delta);
  for (int j = 0; j < static_cast<int>(m.size()); ++j) {
    if (precedes(delta, m[static_cast<std::size_t>(j)]))
      X.push_back(j);
    if (precedes(left, m[static_cast<std::size_t>(j)]))
      Y.push_back(j);
  }
  std::vector<std::vector<int>> adj(X.size());
  for (std::size_t a = 0; a < X.size(); ++a)
    for (std::size_t b = 0; b < Y.size(); ++b)
      if (precedes(m[static_cast<std::size_t>(Y[b])], m[static_cast<std::size_t>(X[a])]))
        adj[a].push_back(static_cast<int>(b));
  return detail::max_matching(adj, static_cast<int>(Y.size())) ==
         static_cast<std::int64_t>(X.size());
}

// RC(Delta, m): an injective f from X~ = {j : Delta_j < Delta} into
// Y~ = {j : shift(Delta_j) < Delta} with Delta_x < Delta_{f(x)}.
inline bool rc_condition(const Segment &delta, const std::vector<Segment> &m) {
  std::vector<int> X, Y;
  for (int j = 0; j < static_cast<int>(m.size()); ++j) {
    const Segment &mj = m[static_cast<std::size_t>(j)];
    if (precedes(mj, delta))
      X.push_back(j);
    if (precedes(detail::shift_left(mj), delta))
      Y.push_back(j);
  }
  std::vector<std::vector<int>> adj(X.size());
  for (std::size_t a = 0; a < X.size(); ++a)
    for (std::size_t b = 0; b < Y.size(); ++b)
      if (precedes(m[static_cast<std::size_t>(X[a])], m[static_cast<std::size_t>(Y[b])]))
        adj[a].push_back(static_cast<int>(b));
  return detail::max_matching(adj, static_cast<int>(Y.size())) ==
         static_cast<std::int64_t>(X.size());
}

// L(Delta) x L(m) is irreducible iff LC and RC both hold
// (Lapid-Minguez criterion).
inline bool lc_rc_irreducible(const Segment &delta, const std::vector<Segment> &m) {
  return lc_condition(delta, m) && rc_condition(delta, m);
}

} // namespace arthur
