#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "arthur/segment.hpp"

namespace arthur {

// L(Delta_rho[x_1,y_1],...,Delta_rho[x_k,y_k]) with x_1 < ... < x_k and
// y_1 < ... < y_k, all on one cuspidal line. k = 0 is the trivial
// representation of GL_0. Construction drops trivial segments Delta[x,x+1].
struct Ladder {
  CuspidalLabel rho;
  std::vector<std::pair<HalfInt, HalfInt>> segs; // (x_i, y_i)

  Ladder() = default;
  explicit Ladder(CuspidalLabel r) : rho(std::move(r)) {}

  Ladder(CuspidalLabel r, std::vector<std::pair<HalfInt, HalfInt>> raw)
      : rho(std::move(r)) {
    for (auto &[x, y] : raw) {
      if (x.twice == y.twice - 2)
        continue; // Delta[x, x+1] is trivial
      if (x < y)
        throw calc_error("ladder segment [" + x.str() + "," + y.str() + "] invalid");
      segs.emplace_back(x, y);
    }
    for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
      if (!(segs[i].first < segs[i + 1].first) ||
          !(segs[i].second < segs[i + 1].second))
        throw calc_error("not a ladder: x/y sequences must strictly increase");
      if (!same_lattice(segs[i].first, segs[i + 1].first))
        throw calc_error("ladder spans more than one cuspidal line");
    }
    for (auto &[x, y] : segs)
      if (!same_lattice(x, y))
        throw calc_error("ladder segment with non-integral x - y");
  }

  bool empty() const { return segs.empty(); }
  std::size_t size() const { return segs.size(); }

  // GL-rank: d * total number of exponents.
  std::int64_t rank() const {
    std::int64_t n = 0;
    for (auto &[x, y] : segs)
      n += (x - y).twice / 2 + 1;
    return rho.d * n;
  }

  std::vector<Segment> segments() const {
    std::vector<Segment> out;
    out.reserve(segs.size());
    for (auto &[x, y] : segs)
      out.emplace_back(rho, x, y);
    return out;
  }

  // Contragredient: [x,y] -> [-y,-x] on the dual label, order reversed.
  Ladder contragredient() const {
    std::vector<std::pair<HalfInt, HalfInt>> out;
    out.reserve(segs.size());
    for (auto it = segs.rbegin(); it != segs.rend(); ++it)
      out.emplace_back(-it->second, -it->first);
    return Ladder(rho.dual(), std::move(out));
  }

  // Multiset of exponents in the cuspidal support, ascending.
  std::vector<HalfInt> support() const {
    std::vector<HalfInt> sup;
    for (auto &[x, y] : segs)
      for (auto t = y.twice; t <= x.twice; t += 2)
        sup.push_back(HalfInt::from_twice(t));
    std::sort(sup.begin(), sup.end());
    return sup;
  }

  friend bool operator==(const Ladder &, const Ladder &) = default;
  friend auto operator<=>(const Ladder &a, const Ladder &b) {
    if (auto c = a.rho <=> b.rho; c != 0)
      return c;
    return a.segs <=> b.segs;
  }

  std::string str() const {
    if (segs.empty())
      return "1";
    std::string s = "L(";
    for (std::size_t i = 0; i < segs.size(); ++i) {
      if (i)
        s += ",";
      s += "[" + segs[i].first.str() + "," + segs[i].second.str() + "]";
    }
    return s + ")_" + rho.display();
  }
};

} // namespace arthur
