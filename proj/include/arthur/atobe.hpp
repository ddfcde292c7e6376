#pragma once

#include "arthur/ext_multi_segment.hpp"

namespace arthur {

// Atobe's parametrization ([A,B]_rho, l, eta): l = (b - |mu|)/2,
// eta = delta_i sgn(mu) with sgn(0) = 1. When 2l = b the class
// representative is normalized to eta = +1.
struct AtobeSymbol {
  struct Entry {
    HalfInt A, B;
    std::int64_t l = 0;
    int eta = 1;
    friend bool operator==(const Entry &, const Entry &) = default;
  };
  GroupKind group = GroupKind::Symplectic;
  std::map<CuspidalLabel, std::vector<Entry>> parts;

  friend bool operator==(const AtobeSymbol &, const AtobeSymbol &) = default;
};

inline AtobeSymbol to_atobe(const ExtMultiSegment &S) {
  AtobeSymbol E;
  E.group = S.group;
  for (auto &[rho, part] : S.parts) {
    auto &out = E.parts[rho];
    for (std::size_t i = 0; i < part.size(); ++i) {
      const ExtSegment &e = part[i];
      if (!e.strict())
        throw calc_error("to_atobe needs |mu| <= b at " + e.str());
      const std::int64_t w = e.mu >= 0 ? e.mu : -e.mu;
      AtobeSymbol::Entry a;
      a.A = e.A;
      a.B = e.B;
      a.l = (e.b() - w) / 2;
      a.eta = delta_sign(part, i) * (e.mu >= 0 ? 1 : -1);
      if (2 * a.l == e.b())
        a.eta = 1; // equivalence-class representative at mu = 0
      out.push_back(a);
    }
  }
  return E;
}

inline ExtMultiSegment from_atobe(const AtobeSymbol &E) {
  ExtMultiSegment S(E.group);
  for (auto &[rho, part] : E.parts) {
    auto &out = S.parts[rho];
    for (auto &a : part) {
      const HalfInt A = a.A, B = a.B;
      const std::int64_t b = (A - B).twice / 2 + 1;
      if (a.l < 0 || 2 * a.l > b)
        throw calc_error("Atobe symbol needs 0 <= l <= b/2");
      const int delta = delta_sign(out, out.size());
      out.emplace_back(A, B, delta * a.eta * (b - 2 * a.l));
    }
  }
  return S;
}

// Eq. (nec): |A_i - A_{i-1}| + |B_i - B_{i-1}| >= |mu_i - mu_{i-1}| on
// consecutive pairs of every rho-part.
inline bool necessary_condition(const ExtMultiSegment &S) {
  for (auto &[rho, part] : S.parts)
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

// Lemma A.1: Atobe's per-case inequalities on F(S), an independent route to
// Eq. (nec) for non-negative S.
inline bool nec_atobe_cases(const ExtMultiSegment &S) {
  const ValidationReport rep = validate(S);
  if (!rep.nonNegative)
    throw calc_error("nec_atobe_cases is stated for non-negative multi-segments");
  const AtobeSymbol E = to_atobe(S);
  for (auto &[rho, part] : E.parts) {
    for (std::size_t i = 1; i < part.size(); ++i) {
      const auto &p = part[i - 1];
      const auto &q = part[i];
      const std::int64_t bp = (p.A - p.B).twice / 2 + 1;
      const std::int64_t bq = (q.A - q.B).twice / 2 + 1;
      // eps = eta_i eta_{i-1} (-1)^{b_{i-1}-1}; when a mu vanishes both
      // branches agree, so the normalized eta is safe to use.
      const int eps = p.eta * q.eta * (bp % 2 == 0 ? -1 : 1);
      bool ok = false;
      if (q.A >= p.A && q.B >= p.B) {
        if (eps == 1)
          ok = (q.A - HalfInt(q.l) >= p.A - HalfInt(p.l)) &&
               (q.B + HalfInt(q.l) >= p.B + HalfInt(p.l));
        else
          ok = q.B + HalfInt(q.l) >= p.A + HalfInt(1) - HalfInt(p.l);
      } else if (q.A >= p.A && q.B <= p.B) {
        if (eps == 1)
          ok = (q.l >= p.l) && (bq - bp >= q.l - p.l);
        else
          ok = p.l + q.l >= bp;
      } else if (q.A <= p.A && q.B >= p.B) {
        if (eps == 1)
          ok = (p.l >= q.l) && (bp - bq >= p.l - q.l);
        else
          ok = p.l + q.l >= bq;
      } else {
        throw calc_error("nec_atobe_cases hit a non-admissible adjacent pair");
      }
      if (!ok)
        return false;
    }
  }
  return true;
}

} // namespace arthur
