#pragma once

#include <optional>

#include "arthur/ess_speh.hpp"
#include "arthur/nonvanishing.hpp"

namespace arthur {

// rho (x) S_c (x) S_d with C = (c+d)/2 - 1 and D = (c-d)/2.
struct SpehFactor {
  CuspidalLabel rho;
  std::int64_t c = 1, d = 1;

  SpehFactor() = default;
  SpehFactor(CuspidalLabel r, std::int64_t c_, std::int64_t d_)
      : rho(std::move(r)), c(c_), d(d_) {
    if (c < 1 || d < 1)
      throw calc_error("Speh factor needs c, d >= 1");
  }

  HalfInt C() const { return HalfInt::from_twice(c + d - 2); }
  HalfInt D() const { return HalfInt::from_twice(c - d); }

  EssSpeh speh() const { return EssSpeh(rho, c, d, HalfInt(0)); }

  friend bool operator==(const SpehFactor &, const SpehFactor &) = default;
};

// Step-2 arithmetic progression of candidate nu values (Cor. 3.28).
struct NuSet {
  std::vector<std::int64_t> values; // sorted ascending

  NuSet() = default;
  explicit NuSet(std::vector<std::int64_t> v) : values(std::move(v)) {
    std::sort(values.begin(), values.end());
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
      if (values[i + 1] - values[i] != 2)
        throw calc_error("nu set is not a step-2 progression");
  }

  std::size_t size() const { return values.size(); }
  bool singleton() const { return values.size() == 1; }
};

namespace detail {

inline bool standard_before(const ExtSegment &p, const ExtSegment &q) {
  if (p.B != q.B)
    return p.B < q.B;
  return p.A > q.A;
}

// standard insertion slot for a block with key (B, -A): after all entries
// whose key is <= the block's
inline std::size_t block_position(const std::vector<ExtSegment> &part,
                                  const ExtSegment &block) {
  std::size_t pos = 0;
  while (pos < part.size() && !standard_before(block, part[pos]))
    ++pos;
  return pos;
}

} // namespace detail

inline ArthurParam psi_with_doubled_factor(const ExtMultiSegment &S,
                                           const SpehFactor &f) {
  ArthurParam psi = S.psi();
  psi.summands.push_back({f.rho, f.c, f.d});
  psi.summands.push_back({f.rho, f.c, f.d});
  psi.normalize();
  return psi;
}

// Definition 3.24: insert ([C,D]_rho, nu) twice at consecutive indices so
// the result is standard. The sign condition is preserved automatically.
inline ExtMultiSegment insert(const ExtMultiSegment &S, const CuspidalLabel &rho,
                              const ExtSegment &block) {
  const SpehFactor f(rho, block.a(), block.b());
  if (!good_parity(psi_with_doubled_factor(S, f)))
    throw calc_error("insert: psi_S + doubled block is not of good parity");
  if (!is_standard(S))
    throw calc_error("insert expects a standard multi-segment");
  ExtMultiSegment out = S;
  auto &part = out.parts[rho];
  const std::size_t pos = detail::block_position(part, block);
  part.insert(part.begin() + static_cast<std::ptrdiff_t>(pos), 2, block);
  return out;
}

// N of Corollary 3.28 for u_rho(c,d) x pi(S): parity/bound box intersected
// with the connected-pair inequalities against the inserted block.
inline NuSet nu_set_single(const ExtMultiSegment &S, const SpehFactor &f) {
  if (!in_srep(S) || !is_standard(S))
    throw calc_error("nu_set_single needs a standard S in Rep");
  if (!good_parity(psi_with_doubled_factor(S, f)))
    throw calc_error("nu_set_single: doubled parameter is not of good parity");
  std::vector<std::int64_t> vals;
  const bool d_integral = f.D().integral();
  for (std::int64_t nu = -f.d; nu <= f.d; nu += 2) {
    const std::int64_t nu_hat = d_integral ? nu : nu - 1;
    if (nu_hat > f.c || -nu_hat > f.c)
      continue;
    const ExtSegment block(f.C(), f.D(), nu);
    const ExtMultiSegment ins = insert(S, f.rho, block);
    const auto &part = ins.parts.at(f.rho);
    static const std::vector<ExtSegment> kEmpty;
    const auto found = S.parts.find(f.rho);
    const auto &orig = found == S.parts.end() ? kEmpty : found->second;
    // 1-based index of the first block copy in the inserted sequence
    const std::int64_t bp =
        static_cast<std::int64_t>(detail::block_position(orig, block)) + 1;
    bool ok = true;
    for (std::int64_t p = 1; ok && p <= static_cast<std::int64_t>(part.size()); ++p) {
      if (p == bp || p == bp + 1)
        continue;
      const std::int64_t copy = p < bp ? bp : bp + 1; // nearest copy
      if (!connected(ins, f.rho, std::min(p, copy), std::max(p, copy)))
        continue;
      const ExtSegment &e = part[static_cast<std::size_t>(p - 1)];
      const std::int64_t lhs =
          abs(f.C() - e.A).twice / 2 + abs(f.D() - e.B).twice / 2;
      const std::int64_t d = delta_S(ins, f.rho, std::min(p, copy), std::max(p, copy));
      if (lhs < (d >= 0 ? d : -d))
        ok = false;
    }
    if (ok)
      vals.push_back(nu);
  }
  return NuSet(std::move(vals));
}

// Proposition 3.26 / Corollary 3.28: the constituents of u_rho(c,d) x pi(S).
inline std::vector<ExtMultiSegment> decompose_single(const ExtMultiSegment &S,
                                                     const SpehFactor &f) {
  std::vector<ExtMultiSegment> out;
  for (std::int64_t nu : nu_set_single(S, f).values)
    out.push_back(insert(S, f.rho, ExtSegment(f.C(), f.D(), nu)));
  return out;
}

struct NuTuples {
  std::vector<std::vector<std::int64_t>> tuples; // lexicographic
};

namespace detail {

inline ExtMultiSegment insert_all(const ExtMultiSegment &S,
                                  const std::vector<SpehFactor> &factors,
                                  const std::vector<std::int64_t> &nus) {
  ExtMultiSegment cur = S;
  for (std::size_t i = 0; i < factors.size(); ++i)
    cur = insert(cur, factors[i].rho,
                 ExtSegment(factors[i].C(), factors[i].D(), nus[i]));
  return cur;
}

// 1-based position of the first copy of block i in the fully inserted
// sequence, accounting for blocks of equal key inserted later.
inline std::vector<std::int64_t>
block_positions(const ExtMultiSegment &S, const std::vector<SpehFactor> &factors,
                const std::vector<std::int64_t> &nus) {
  std::vector<std::int64_t> pos(factors.size(), 0);
  // replay the insertions
  std::map<CuspidalLabel, std::vector<std::pair<ExtSegment, std::size_t>>> parts;
  for (auto &[rho, part] : S.parts) {
    auto &v = parts[rho];
    for (auto &e : part)
      v.emplace_back(e, SIZE_MAX);
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const ExtSegment block(factors[i].C(), factors[i].D(), nus[i]);
    auto &v = parts[factors[i].rho];
    std::size_t p = 0;
    while (p < v.size() && !standard_before(block, v[p].first))
      ++p;
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(p), 2, {block, i});
  }
  for (auto &[rho, v] : parts)
    for (std::size_t p = 0; p < v.size(); ++p)
      if (v[p].second != SIZE_MAX && pos[v[p].second] == 0)
        pos[v[p].second] = static_cast<std::int64_t>(p) + 1;
  return pos;
}

} // namespace detail

// Theorem 3.30: tuples (nu_1,...,nu_k) whose full insertion lands in SRep.
inline NuTuples nu_tuples_multi(const ExtMultiSegment &S,
                                const std::vector<SpehFactor> &factors) {
  if (!in_srep(S) || !is_standard(S))
    throw calc_error("nu_tuples_multi needs a standard S in Rep");
  {
    ArthurParam psi = S.psi();
    for (auto &f : factors) {
      psi.summands.push_back({f.rho, f.c, f.d});
      psi.summands.push_back({f.rho, f.c, f.d});
    }
    psi.normalize();
    if (!good_parity(psi))
      throw calc_error("nu_tuples_multi: doubled parameter is not of good parity");
  }
  std::vector<NuSet> singles;
  singles.reserve(factors.size());
  for (auto &f : factors)
    singles.push_back(nu_set_single(S, f));

  NuTuples out;
  std::vector<std::int64_t> nus(factors.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == factors.size()) {
      const ExtMultiSegment full = detail::insert_all(S, factors, nus);
      const auto pos = detail::block_positions(S, factors, nus);
      for (std::size_t l = 0; l < factors.size(); ++l)
        for (std::size_t m = l + 1; m < factors.size(); ++m) {
          if (!(factors[l].rho == factors[m].rho))
            continue;
          // nearest copies of the two blocks
          std::int64_t a = pos[l], b = pos[m];
          if (a > b)
            std::swap(a, b);
          a += 1; // second copy of the earlier block
          if (!connected(full, factors[l].rho, a, b))
            continue;
          const std::int64_t lhs = abs(factors[l].C() - factors[m].C()).twice / 2 +
                                   abs(factors[l].D() - factors[m].D()).twice / 2;
          const std::int64_t d = delta_S(full, factors[l].rho, a, b);
          if (lhs < (d >= 0 ? d : -d))
            return;
        }
      out.tuples.push_back(nus);
      return;
    }
    for (std::int64_t nu : singles[i].values) {
      nus[i] = nu;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// Corollary 3.31: the full decomposition, multiplicity-free.
inline std::vector<ExtMultiSegment>
decompose_multi(const ExtMultiSegment &S, const std::vector<SpehFactor> &factors) {
  if (factors.empty())
    return {standard_form(S)};
  std::vector<ExtMultiSegment> out;
  for (auto &nus : nu_tuples_multi(S, factors).tuples)
    out.push_back(detail::insert_all(S, factors, nus));
  return out;
}

// Corollary 3.32: with pairwise-distinct (c_i,d_i) and every |N_i| >= 2,
// the tuple set contains two points differing by 2 in one coordinate.
inline bool adjacent_pair_exists(const ExtMultiSegment &S,
                                 const std::vector<SpehFactor> &factors) {
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (factors[i].c == factors[j].c && factors[i].d == factors[j].d)
        throw calc_error("adjacent_pair_exists needs pairwise-distinct (c,d)");
  for (auto &f : factors)
    if (nu_set_single(S, f).size() < 2)
      throw calc_error("adjacent_pair_exists needs every |N_i| >= 2");
  const NuTuples nt = nu_tuples_multi(S, factors);
  std::set<std::vector<std::int64_t>> all(nt.tuples.begin(), nt.tuples.end());
  for (auto &t : nt.tuples) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::vector<std::int64_t> up = t;
      up[i] += 2;
      if (all.count(up))
        return true;
    }
  }
  return false;
}

} // namespace arthur
