#pragma once

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "arthur/ess_speh.hpp"
#include "arthur/formal_sum.hpp"

namespace arthur {

// Lad(L): tuples (c_1,...,c_k), c_i in [y_i - 1, x_i] on the lattice,
// strictly increasing.
inline void for_each_lad_tuple(const Ladder &L,
                               const std::function<void(const std::vector<HalfInt> &)> &fn) {
  const std::size_t k = L.size();
  std::vector<HalfInt> c(k);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      fn(c);
      return;
    }
    const auto [x, y] = L.segs[i];
    for (auto t = y.twice - 2; t <= x.twice; t += 2) {
      if (i > 0 && t <= c[i - 1].twice)
        continue;
      c[i] = HalfInt::from_twice(t);
      rec(i + 1);
    }
  };
  rec(0);
}

// Eq. (lad), Kret-Lapid: m*(L) = sum over Lad(L) of
// L(Delta[x_i, c_i+1]) (x) L(Delta[c_i, y_i]).
inline FormalSum mstar_ladder(const Ladder &L) {
  FormalSum out;
  for_each_lad_tuple(L, [&](const std::vector<HalfInt> &c) {
    std::vector<std::pair<HalfInt, HalfInt>> up, down;
    for (std::size_t i = 0; i < c.size(); ++i) {
      up.emplace_back(L.segs[i].first, c[i] + HalfInt(1));
      down.emplace_back(c[i], L.segs[i].second);
    }
    out.add(GLTerm({Ladder(L.rho, std::move(up))}, Ladder(L.rho, std::move(down))));
  });
  return out.canonicalize();
}

// GL factors of Tadic's formula (struct) for a ladder: pairs
// ((c_i),(d_i)) in Lad(L)' with c_i <= d_i give
// dual(L(Delta[c_i,y_i])) x L(Delta[x_i,d_i+1]) (x) L(Delta[d_i,c_i+1]).
inline FormalSum mu_star_gl_terms(const Ladder &L) {
  FormalSum out;
  for_each_lad_tuple(L, [&](const std::vector<HalfInt> &c) {
    // d ranges over Lad(L) with c_i <= d_i
    const std::size_t k = c.size();
    std::vector<HalfInt> d(k);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == k) {
        std::vector<std::pair<HalfInt, HalfInt>> dual, up, mid;
        for (std::size_t r = 0; r < k; ++r) {
          dual.emplace_back(c[r], L.segs[r].second); // contragredient below
          up.emplace_back(L.segs[r].first, d[r] + HalfInt(1));
          mid.emplace_back(d[r], c[r] + HalfInt(1));
        }
        Ladder low(L.rho, std::move(dual));
        out.add(GLTerm({low.contragredient(), Ladder(L.rho, std::move(up))},
                       Ladder(L.rho, std::move(mid))));
        return;
      }
      for (auto t = c[i].twice; t <= L.segs[i].first.twice; t += 2) {
        if (i > 0 && t <= d[i - 1].twice)
          continue;
        d[i] = HalfInt::from_twice(t);
        rec(i + 1);
      }
    };
    rec(0);
  });
  return out.canonicalize();
}

// M* of Eq. (m1), computed as the composition
// (m (x) 1) o (dual (x) m*) o swap o m* with both m* given by Eq. (lad).
inline FormalSum mstar_full(const Ladder &L) {
  FormalSum out;
  const FormalSum first = mstar_ladder(L);
  for (const GLTerm &t : first) {
    const Ladder pi1 = t.left.empty() ? Ladder(L.rho) : t.left.front();
    const Ladder pi2dual = t.right.contragredient();
    for (const GLTerm &t2 : mstar_ladder(pi1)) {
      const Ladder pi11 = t2.left.empty() ? Ladder(L.rho) : t2.left.front();
      out.add(GLTerm({pi2dual, pi11}, t2.right, t.coeff * t2.coeff));
    }
  }
  return out.canonicalize();
}

// Multiplicity of the cuspidal twist sigma as a single left strip of L.
// Ladders admit at most one: the row with x_i = z, provided the previous
// row's x leaves room for the strictly increasing tuple.
inline std::pair<std::int64_t, Ladder>
max_left_derivative(const Ladder &L, const DerivativeSymbol &sigma) {
  if (!sigma.is_z01()) {
    const auto &cs = std::get<DerivativeSymbol::Cuspidal>(sigma.v);
    if (!(cs.rho == L.rho) || L.empty() || !same_lattice(cs.z, L.segs[0].first))
      return {0, L};
    for (std::size_t i = 0; i < L.size(); ++i) {
      if (L.segs[i].first != cs.z)
        continue;
      if (i > 0 && L.segs[i - 1].first.twice >= cs.z.twice - 2)
        return {0, L};
      auto segs = L.segs;
      segs[i].first -= HalfInt(1);
      return {1, Ladder(L.rho, std::move(segs))};
    }
    return {0, L};
  }
  // Z_rho[0,1]: only defined on left rho|.|^1-reduced ladders.
  const CuspidalLabel &rho = sigma.rho();
  if (max_left_derivative(L, DerivativeSymbol::cuspidal(rho, HalfInt(1))).first != 0)
    throw calc_error("Z01 left derivative requires a rho|.|^1-reduced ladder");
  if (!(rho == L.rho) || L.empty() || !same_lattice(HalfInt(0), L.segs[0].first))
    return {0, L};
  for (std::size_t i = 0; i + 1 < L.size(); ++i) {
    if (L.segs[i].first != HalfInt(0) || L.segs[i + 1].first != HalfInt(1))
      continue;
    if (i > 0 && L.segs[i - 1].first.twice >= -2)
      return {0, L};
    auto segs = L.segs;
    segs[i].first -= HalfInt(1);
    segs[i + 1].first -= HalfInt(1);
    return {1, Ladder(L.rho, std::move(segs))};
  }
  return {0, L};
}

namespace detail {

// Candidate strips for the M-derivative: per row, the bottom slice
// [c_i, y_i] shows up dualized as [-y_i, -c_i] and the top slice
// [x_i, d_i+1] as is. Only slices whose support lies in the target
// support can contribute to a sigma^k term.
struct MStripScan {
  std::int64_t best = 0;
  std::set<Ladder> results;
};

inline void m_strip_scan(const Ladder &L, const std::vector<HalfInt> &target_dual,
                         const std::vector<HalfInt> &target_up, bool z01_mode,
                         MStripScan &scan) {
  // target_*: allowed single exponents for dual side (as -y values) and for
  // the upper side; in z01 mode a full {0,1} pair per unit of k is required.
  const std::size_t k = L.size();
  std::vector<std::vector<HalfInt>> copts(k), dopts(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto [x, y] = L.segs[i];
    copts[i] = {y - HalfInt(1)};
    for (HalfInt t : target_dual)
      if (-y == t)
        copts[i].push_back(y);
    if (z01_mode && y == HalfInt(-1))
      copts[i].push_back(HalfInt(0)); // dual slice [1,0]
    dopts[i] = {x};
    for (HalfInt t : target_up)
      if (x == t)
        dopts[i].push_back(x - HalfInt(1));
    if (z01_mode && x == HalfInt(1))
      dopts[i].push_back(HalfInt(-1)); // upper slice [1,0]
  }
  std::vector<HalfInt> c(k), d(k);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      std::int64_t zeros = 0, ones = 0, singles = 0;
      bool long_piece = false;
      for (std::size_t r = 0; r < k; ++r) {
        const auto [x, y] = L.segs[r];
        const std::int64_t dual_len = (c[r] - y).twice / 2 + 1;
        const std::int64_t up_len = (x - d[r]).twice / 2;
        if (dual_len >= 2 || up_len >= 2)
          long_piece = true;
        if (z01_mode) {
          for (auto t = -c[r].twice; t <= -y.twice; t += 2)
            (t == 0 ? zeros : ones) += 1;
          for (auto t = d[r].twice + 2; t <= x.twice; t += 2)
            (t == 0 ? zeros : ones) += 1;
        } else {
          singles += dual_len + up_len;
        }
      }
      std::int64_t got = 0;
      if (z01_mode) {
        if (zeros != ones)
          return;
        got = zeros;
      } else {
        got = singles;
      }
      if (got == 0)
        return;
      if (z01_mode && long_piece)
        throw calc_error("Z01 M-derivative hit a non-reduced term; input was not rho|.|^1-reduced");
      if (got < scan.best)
        return;
      std::vector<std::pair<HalfInt, HalfInt>> mid;
      for (std::size_t r = 0; r < k; ++r)
        mid.emplace_back(d[r], c[r] + HalfInt(1));
      Ladder res(L.rho, std::move(mid));
      if (got > scan.best) {
        scan.best = got;
        scan.results.clear();
      }
      scan.results.insert(std::move(res));
      return;
    }
    for (HalfInt cv : copts[i]) {
      if (i > 0 && cv.twice <= c[i - 1].twice)
        continue;
      c[i] = cv;
      for (HalfInt dv : dopts[i]) {
        if (dv < cv)
          continue;
        if (i > 0 && dv.twice <= d[i - 1].twice)
          continue;
        d[i] = dv;
        rec(i + 1);
      }
    }
  };
  rec(0);
}

} // namespace detail

// Multiplicity and all maximal cofactors of M^max_sigma on a single ladder.
// The sigma^k factor is recognized on cuspidal support; for cuspidal sigma
// the cofactor is unique, a Z01 step may branch into two constituents that
// later chain steps prune.
inline std::pair<std::int64_t, std::set<Ladder>>
m_derivative_terms(const Ladder &L, const DerivativeSymbol &sigma) {
  if (L.empty())
    return {0, {L}};
  detail::MStripScan scan;
  if (!sigma.is_z01()) {
    const auto &cs = std::get<DerivativeSymbol::Cuspidal>(sigma.v);
    std::vector<HalfInt> dual_t, up_t;
    if (L.rho.dual() == cs.rho)
      dual_t.push_back(cs.z);
    if (L.rho == cs.rho)
      up_t.push_back(cs.z);
    if ((dual_t.empty() && up_t.empty()) || !same_lattice(cs.z, L.segs[0].first))
      return {0, {L}};
    detail::m_strip_scan(L, dual_t, up_t, false, scan);
  } else {
    const CuspidalLabel &rho = sigma.rho();
    if (m_derivative_terms(L, DerivativeSymbol::cuspidal(rho, HalfInt(1))).first != 0)
      throw calc_error("Z01 M-derivative requires a rho|.|^1-reduced ladder");
    if (!(rho == L.rho) || !same_lattice(HalfInt(0), L.segs[0].first))
      return {0, {L}};
    const std::vector<HalfInt> zs = {HalfInt(0), HalfInt(1)};
    detail::m_strip_scan(L, zs, zs, true, scan);
  }
  if (scan.best == 0 || scan.results.empty())
    return {0, {L}};
  return {scan.best, scan.results};
}

// Unique-cofactor variant, the analogue of max_left_derivative.
inline std::pair<std::int64_t, Ladder>
max_M_derivative(const Ladder &L, const DerivativeSymbol &sigma) {
  auto [k, set] = m_derivative_terms(L, sigma);
  if (set.size() != 1)
    throw calc_error("maximal M-derivative is a sum of " +
                     std::to_string(set.size()) + " ladders; use the chain API");
  return {k, *set.begin()};
}

// The sigma^{ij} grid of Eq. (sigma) attached to u_rho(a,b)|.|^s, s > 0:
// blocks i = 1..2s, positions j = 1..b, exponent B + s - i + j.
struct DerivGrid {
  CuspidalLabel rho;
  std::int64_t a = 1, b = 1;
  HalfInt s;

  DerivGrid(CuspidalLabel r, std::int64_t a_, std::int64_t b_, HalfInt s_)
      : rho(std::move(r)), a(a_), b(b_), s(s_) {
    if (a < 1 || b < 1)
      throw calc_error("derivative grid needs a, b >= 1");
    if (s.twice < 1)
      throw calc_error("derivative grid needs s > 0");
  }

  std::int64_t blocks() const { return s.twice; } // 2s
  std::int64_t width() const { return b; }

  HalfInt exponent(std::int64_t i, std::int64_t j) const {
    return HalfInt::from_twice(a - b) + s - HalfInt(i) + HalfInt(j);
  }

  DerivativeSymbol symbol(std::int64_t i, std::int64_t j) const {
    const HalfInt e = exponent(i, j);
    if (e == HalfInt(0))
      return DerivativeSymbol::cuspidal(rho, HalfInt(1));
    if (e == HalfInt(1) && j != 1)
      return DerivativeSymbol::z01(rho);
    return DerivativeSymbol::cuspidal(rho, e);
  }

  // 1_{ij} = 0 exactly at the exponent-0 slot.
  std::int64_t one(std::int64_t i, std::int64_t j) const {
    return exponent(i, j) == HalfInt(0) ? 0 : 1;
  }
};

struct ChainResult {
  std::vector<std::vector<std::int64_t>> mult; // [i-1][j-1]
  std::set<Ladder> terminal; // constituents carrying the maximal derivative
};

// Runs M^max_{(a,b,s)} over the grid and records every m^{ij}. The state is
// a set of constituents: a Z01 step may branch, and a later step takes its
// multiplicity as the maximum over the current constituents.
inline ChainResult derivative_chain(Ladder start, const DerivGrid &grid) {
  ChainResult out;
  out.mult.assign(static_cast<std::size_t>(grid.blocks()),
                  std::vector<std::int64_t>(static_cast<std::size_t>(grid.width()), 0));
  std::set<Ladder> cur{std::move(start)};
  for (std::int64_t i = 1; i <= grid.blocks(); ++i)
    for (std::int64_t j = 1; j <= grid.width(); ++j) {
      const DerivativeSymbol sigma = grid.symbol(i, j);
      std::int64_t best = 0;
      std::map<std::int64_t, std::set<Ladder>> by_mult;
      for (const Ladder &L : cur) {
        auto [k, set] = m_derivative_terms(L, sigma);
        best = std::max(best, k);
        by_mult[k].insert(set.begin(), set.end());
      }
      out.mult[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = best;
      cur = std::move(by_mult[best]);
    }
  out.terminal = std::move(cur);
  return out;
}

inline ChainResult derivative_chain(const EssSpeh &u, const DerivGrid &grid) {
  return derivative_chain(u.ladder(), grid);
}

} // namespace arthur
