#pragma once

#include <algorithm>

#include "arthur/ess_speh.hpp"
#include "arthur/nonvanishing.hpp"

namespace arthur {

// Symbolic D^max_{rho|.|^y,...,rho|.|^x} descriptor (one shift step of the
// second case); never evaluated here.
struct DerivStep {
  CuspidalLabel rho;
  HalfInt y, x; // exponents B_i + t .. A_i + t

  friend bool operator==(const DerivStep &, const DerivStep &) = default;
};

struct LanglandsProgram {
  struct TemperedPiece {
    CuspidalLabel rho;
    std::int64_t a = 1;
    int eps = 1;
    friend bool operator==(const TemperedPiece &, const TemperedPiece &) = default;
    friend auto operator<=>(const TemperedPiece &x, const TemperedPiece &y) {
      if (auto c = x.rho <=> y.rho; c != 0)
        return c;
      return x.a <=> y.a;
    }
  };

  std::vector<std::pair<CuspidalLabel, UEssMatrix>> factors;
  std::vector<TemperedPiece> tempered;
  std::vector<DerivStep> derivSteps; // application order, empty in the first case
  std::map<CuspidalLabel, std::vector<std::int64_t>> shifts; // t_i per rho
};

namespace detail {

inline bool first_case_applies(const ExtMultiSegment &S) {
  for (auto &[rho, part] : S.parts)
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (part[i].B < HalfInt(0))
        return false;
      if (i + 1 < part.size() && !(part[i + 1].B > part[i].A))
        return false;
    }
  return true;
}

// soc(prod u_ess(...) x pi(phi, eps)) data for a first-case S.
inline void emit_first_case(const ExtMultiSegment &S, LanglandsProgram &prog) {
  for (auto &[rho, part] : S.parts) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      const ExtSegment &e = part[i];
      const std::int64_t a = e.a(), b = e.b();
      const std::int64_t w = e.mu >= 0 ? e.mu : -e.mu;
      if ((b - w) / 2 > 0) {
        // u_ess(-(a+b)/2+1, (a-b)/2; -(a+w)/2, (a-w)/2-1), (b-w)/2 rows
        const UEssMatrix m(HalfInt::from_twice(-(a + b) + 2), HalfInt::from_twice(a - b),
                           HalfInt::from_twice(-(a + w)), HalfInt::from_twice(a - w - 2));
        prog.factors.emplace_back(rho, m);
      }
      const int base = delta_sign(part, i) * (e.mu >= 0 ? 1 : -1);
      for (std::int64_t t = 0; t < w; ++t)
        prog.tempered.push_back({rho, a - w + 2 * t + 1, t % 2 == 0 ? base : -base});
    }
  }
  std::sort(prog.tempered.begin(), prog.tempered.end());
  // eps must be constant on identical summands of phi
  for (std::size_t i = 0; i + 1 < prog.tempered.size(); ++i)
    if (prog.tempered[i].rho == prog.tempered[i + 1].rho &&
        prog.tempered[i].a == prog.tempered[i + 1].a &&
        prog.tempered[i].eps != prog.tempered[i + 1].eps)
      throw calc_error("langlands construction: inconsistent eps on a repeated "
                       "tempered summand");
}

} // namespace detail

// Section 3.4: for first-case S the full soc(...) data; otherwise the
// minimally shifted S' plus the symbolic derivative program recovering
// pi(S) from pi(S').
inline LanglandsProgram langlands_first_case(const ExtMultiSegment &S) {
  if (!in_srep(S))
    throw calc_error("langlands_first_case needs S in Rep");
  const ExtMultiSegment T = standard_form(S);
  LanglandsProgram prog;
  if (detail::first_case_applies(T)) {
    detail::emit_first_case(T, prog);
    return prog;
  }
  // find minimal non-negative integer shifts t_i with B_1 + t_1 >= 0 and
  // B_{i+1} + t_{i+1} > A_i + t_i
  ExtMultiSegment shifted(T.group);
  for (auto &[rho, part] : T.parts) {
    auto &ts = prog.shifts[rho];
    auto &out = shifted.parts[rho];
    HalfInt prevTopPlusShift; // A_i + t_i of the previous index
    for (std::size_t i = 0; i < part.size(); ++i) {
      const ExtSegment &e = part[i];
      std::int64_t t = 0;
      if (e.B < HalfInt(0))
        t = (-e.B).ceil();
      if (i > 0) {
        const HalfInt gap = prevTopPlusShift - e.B; // need t > gap
        if (gap >= HalfInt(0))
          t = std::max(t, gap.floor() + 1);
      }
      ts.push_back(t);
      out.emplace_back(e.A + HalfInt(t), e.B + HalfInt(t), e.mu);
      prevTopPlusShift = e.A + HalfInt(t);
    }
  }
  detail::emit_first_case(shifted, prog);
  // application order: per rho, inner index descending, shift descending
  for (auto it = T.parts.rbegin(); it != T.parts.rend(); ++it) {
    const auto &[rho, part] = *it;
    const auto &ts = prog.shifts[rho];
    for (std::size_t ii = part.size(); ii-- > 0;)
      for (std::int64_t t = ts[ii]; t >= 1; --t)
        prog.derivSteps.push_back(
            {rho, part[ii].B + HalfInt(t), part[ii].A + HalfInt(t)});
  }
  return prog;
}

} // namespace arthur
