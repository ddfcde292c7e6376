#pragma once

#include "arthur/nonvanishing.hpp"

namespace arthur {

// Aubert dual at the parameter level: per rho-part reverse the order, send
// [A,B] to [A,-B] and mu to mu_hat, then standardize. Swaps (a,b) to (b,a)
// summand-wise on psi.
inline ExtMultiSegment aubert_dual(const ExtMultiSegment &S) {
  if (!in_srep(S))
    throw calc_error("aubert_dual needs S in Rep");
  const ExtMultiSegment T = standard_form(S);
  ExtMultiSegment raw(T.group);
  for (auto &[rho, part] : T.parts) {
    auto &out = raw.parts[rho];
    for (auto it = part.rbegin(); it != part.rend(); ++it)
      out.emplace_back(it->A, -it->B, it->mu_hat());
  }
  const ValidationReport rep = validate(raw);
  if (!rep.veryAdmissibleWhereNeeded)
    throw calc_error("aubert_dual: raw dual is not very admissible");
  if (!rep.is_extended_multi_segment())
    throw calc_error("aubert_dual: raw dual fails validation");
  return standard_form(raw);
}

// Deformation move of Appendix A.2 on the consecutive pair (k-1, k) of a
// rho-part, 1-based k >= 2, in the equality case
// |A_k - A_{k-1}| + |B_k - B_{k-1}| = |mu_k - mu_{k-1}|.
inline ExtMultiSegment deform(const ExtMultiSegment &S, const CuspidalLabel &rho,
                              std::int64_t k) {
  if (!in_srep(S))
    throw calc_error("deform needs S in Rep");
  auto it = S.parts.find(rho);
  if (it == S.parts.end() || k < 2 || static_cast<std::size_t>(k) > it->second.size())
    throw calc_error("deform: index out of range");
  const ExtSegment &p = it->second[static_cast<std::size_t>(k - 2)];
  const ExtSegment &q = it->second[static_cast<std::size_t>(k - 1)];
  if (!(q.A >= p.A && q.B >= p.B))
    throw calc_error("deform needs A_k >= A_{k-1} and B_k >= B_{k-1}");
  const std::int64_t lhs = (q.A - p.A).twice / 2 + (q.B - p.B).twice / 2;
  const std::int64_t dmu = q.mu - p.mu;
  if (lhs != (dmu >= 0 ? dmu : -dmu))
    throw calc_error("deform: the equality case |dA| + |dB| = |dmu| fails");
  const std::int64_t shift = (dmu >= 0 ? 1 : -1) * ((q.A - p.A).twice / 2);
  ExtMultiSegment out = S;
  auto &part = out.parts[rho];
  if (p.A < q.B)
    throw calc_error("deform: replacement segment [A_{k-1}, B_k] would be empty");
  part[static_cast<std::size_t>(k - 2)] = ExtSegment(q.A, p.B, p.mu - shift);
  part[static_cast<std::size_t>(k - 1)] = ExtSegment(p.A, q.B, q.mu - shift);
  if (!validate(out).is_extended_multi_segment())
    throw calc_error("deform: output fails validation");
  return out;
}

} // namespace arthur
