#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arthur/gl_calculus.hpp"
#include "arthur/insertion.hpp"

namespace arthur {

enum class Verdict { Irreducible, Reducible, Unknown };

inline std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Irreducible: return "irreducible";
  case Verdict::Reducible: return "reducible";
  default: return "unknown";
  }
}

enum class ConditionStatus { Pass, Fail, Unknown };

struct IrrVerdict {
  struct Condition {
    std::string what;
    ConditionStatus status = ConditionStatus::Unknown;
    std::string detail;
  };
  Verdict verdict = Verdict::Unknown;
  std::vector<Condition> conditions;
};

// Theorem 1.2 checker for u_1 x ... x u_r x pi(S). Pairwise GL conditions
// come from Tadic's criterion; u_i x pi is decided for unitary factors
// (good parity via |N| = 1, bad parity always irreducible) and left
// undecided otherwise unless the caller asserts a verdict. A bad-parity
// part of pi may be carried symbolically in `extras`; it never affects the
// computed conditions.
inline IrrVerdict
main_irreducibility(const std::vector<EssSpeh> &us, const ExtMultiSegment &S,
                    const std::vector<ArthurParam::Summand> &extras = {},
                    const std::vector<std::optional<bool>> &asserted = {}) {
  if (!in_srep(S))
    throw calc_error("main_irreducibility needs S in Rep");
  if (!asserted.empty() && asserted.size() != us.size())
    throw calc_error("main_irreducibility: asserted verdicts must match factors");
  for (auto &e : extras) {
    ArthurParam probe(S.group, {e});
    if (good_parity(probe))
      throw calc_error("main_irreducibility: extras must be bad-parity summands");
  }
  IrrVerdict out;
  bool any_fail = false, any_unknown = false;
  auto push = [&](std::string what, ConditionStatus st, std::string detail) {
    if (st == ConditionStatus::Fail)
      any_fail = true;
    if (st == ConditionStatus::Unknown)
      any_unknown = true;
    out.conditions.push_back({std::move(what), st, std::move(detail)});
  };

  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = i + 1; j < us.size(); ++j) {
      const bool red = tadic_reducible(us[i], us[j]);
      push("u" + std::to_string(i + 1) + " x u" + std::to_string(j + 1),
           red ? ConditionStatus::Fail : ConditionStatus::Pass,
           red ? "Tadic criterion: reducible" : "Tadic criterion: irreducible");
      const bool red_dual = tadic_reducible(us[i], us[j].contragredient());
      push("u" + std::to_string(i + 1) + " x u" + std::to_string(j + 1) + "^",
           red_dual ? ConditionStatus::Fail : ConditionStatus::Pass,
           red_dual ? "Tadic criterion: reducible" : "Tadic criterion: irreducible");
    }

  for (std::size_t i = 0; i < us.size(); ++i) {
    const std::string label = "u" + std::to_string(i + 1) + " x pi";
    if (!asserted.empty() && asserted[i].has_value()) {
      push(label, *asserted[i] ? ConditionStatus::Pass : ConditionStatus::Fail,
           "asserted by caller");
      continue;
    }
    // normalize s >= 0 via the contragredient reduction
    const EssSpeh u = us[i].s < HalfInt(0) ? us[i].contragredient() : us[i];
    if (classify_type(u) != SpehType::Unitary) {
      push(label, ConditionStatus::Unknown,
           to_string(classify_type(u)) +
               "-type factor: undecidable internally, assert a verdict to close");
      continue;
    }
    const SpehFactor f(u.rho, u.a, u.b);
    if (!good_parity(psi_with_doubled_factor(S, f))) {
      push(label, ConditionStatus::Pass, "doubled parameter of bad parity");
      continue;
    }
    const NuSet N = nu_set_single(S, f);
    push(label, N.singleton() ? ConditionStatus::Pass : ConditionStatus::Fail,
         "|N| = " + std::to_string(N.size()));
  }

  out.verdict = any_fail      ? Verdict::Reducible
                : any_unknown ? Verdict::Unknown
                              : Verdict::Irreducible;
  return out;
}

} // namespace arthur
