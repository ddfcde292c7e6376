#pragma once

#include <map>
#include <string>
#include <vector>

#include "arthur/arthur_param.hpp"
#include "arthur/half_int.hpp"

namespace arthur {

// ([A,B]_rho, mu): b = A - B + 1, mu = b mod 2. The strictness bound
// |mu| <= b is not enforced here; formal extended segments drop it.
struct ExtSegment {
  HalfInt A, B;
  std::int64_t mu = 0;

  ExtSegment() = default;
  ExtSegment(HalfInt A_, HalfInt B_, std::int64_t mu_) : A(A_), B(B_), mu(mu_) {
    if (!same_lattice(A, B))
      throw calc_error("extended segment [" + A.str() + "," + B.str() + "]: A - B not integral");
    if (A < B)
      throw calc_error("extended segment [" + A.str() + "," + B.str() + "]: A < B");
    if ((mu - b()) % 2 != 0)
      throw calc_error("extended segment: mu = " + std::to_string(mu) +
                       " must have the parity of b = " + std::to_string(b()));
  }

  std::int64_t a() const { return (A + B).twice / 2 + 1; }
  std::int64_t b() const { return (A - B).twice / 2 + 1; }
  bool strict() const { return mu <= b() && -mu <= b(); }

  // mu with the half-integral correction of Eq. (muhat).
  std::int64_t mu_hat() const { return B.integral() ? mu : mu - 1; }

  friend bool operator==(const ExtSegment &, const ExtSegment &) = default;
  friend auto operator<=>(const ExtSegment &, const ExtSegment &) = default;

  std::string str() const {
    return "([" + A.str() + "," + B.str() + "]," + std::to_string(mu) + ")";
  }
};

// delta_i = prod_{j<i} (-1)^(b_j - 1) over a rho-part prefix.
inline int delta_sign(const std::vector<ExtSegment> &part, std::size_t i) {
  int d = 1;
  for (std::size_t j = 0; j < i; ++j)
    if (part[j].b() % 2 == 0)
      d = -d;
  return d;
}

struct ValidationReport {
  bool admissibleOrder = true;
  bool nonNegative = true;          // all B_i >= 0
  bool sumNonNegative = true;       // all A_i + B_i >= 0
  bool goodParity = true;
  bool signCondition = true;
  bool strictMu = true;
  bool veryAdmissibleWhereNeeded = true;

  // membership in ExMult (the formal flag relaxes strictMu only)
  bool is_extended_multi_segment(bool formal = false) const {
    return admissibleOrder && sumNonNegative && goodParity && signCondition &&
           (formal || strictMu);
  }
  bool admissible(bool formal = false) const {
    return is_extended_multi_segment(formal) && veryAdmissibleWhereNeeded;
  }
};

// Per-rho sequences of extended segments together with the target group.
struct ExtMultiSegment {
  GroupKind group = GroupKind::Symplectic;
  std::map<CuspidalLabel, std::vector<ExtSegment>> parts;
  bool formal = false;

  ExtMultiSegment() = default;
  explicit ExtMultiSegment(GroupKind g) : group(g) {}

  ArthurParam psi() const {
    std::vector<ArthurParam::Summand> ss;
    for (auto &[rho, part] : parts)
      for (auto &e : part)
        ss.push_back({rho, e.a(), e.b()});
    return ArthurParam(group, std::move(ss));
  }

  std::int64_t dim() const { return psi().dim(); }

  std::int64_t total_segments() const {
    std::int64_t n = 0;
    for (auto &[rho, part] : parts)
      n += static_cast<std::int64_t>(part.size());
    return n;
  }

  friend bool operator==(const ExtMultiSegment &a, const ExtMultiSegment &b) {
    return a.group == b.group && a.parts == b.parts;
  }
  friend bool operator<(const ExtMultiSegment &a, const ExtMultiSegment &b) {
    if (a.group != b.group)
      return a.group < b.group;
    return a.parts < b.parts;
  }

  std::string str() const {
    std::string s = to_string(group) + "{";
    bool first_part = true;
    for (auto &[rho, part] : parts) {
      if (!first_part)
        s += "; ";
      first_part = false;
      s += rho.display() + ":";
      for (auto &e : part)
        s += e.str();
    }
    return s + "}";
  }
};

// Sign condition of Definition 3.1 (3e).
inline bool sign_condition(const ExtMultiSegment &S) {
  std::int64_t total = 0;
  for (auto &[rho, part] : S.parts) {
    std::int64_t bsum = 0; // sum of (b_j - 1) over j < i
    for (auto &e : part) {
      const std::int64_t fl = e.mu >= 0 ? e.mu / 2 : (e.mu - 1) / 2;
      total += fl + e.mu * bsum;
      bsum += e.b() - 1;
    }
  }
  return total % 2 == 0;
}

inline ValidationReport validate(const ExtMultiSegment &S) {
  ValidationReport rep;
  for (auto &[rho, part] : S.parts) {
    bool negative_B = false;
    bool very_admissible = true;
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (part[i].B < HalfInt(0)) {
        negative_B = true;
        rep.nonNegative = false;
      }
      if ((part[i].A + part[i].B) < HalfInt(0))
        rep.sumNonNegative = false;
      if (!part[i].strict())
        rep.strictMu = false;
      for (std::size_t j = i + 1; j < part.size(); ++j) {
        if (part[i].A > part[j].A && part[i].B > part[j].B)
          rep.admissibleOrder = false;
        if (part[i].B > part[j].B)
          very_admissible = false;
      }
      if (i + 1 < part.size() && !same_lattice(part[i].B, part[i + 1].B))
        rep.goodParity = false; // one line per rho-part
    }
    if (negative_B && !very_admissible)
      rep.veryAdmissibleWhereNeeded = false;
  }
  rep.goodParity = rep.goodParity && good_parity(S.psi());
  rep.signCondition = sign_condition(S);
  return rep;
}

// Standard: per rho-part, (B ascending, then A descending).
inline bool is_standard(const ExtMultiSegment &S) {
  for (auto &[rho, part] : S.parts)
    for (std::size_t i = 0; i + 1 < part.size(); ++i) {
      const auto &p = part[i];
      const auto &q = part[i + 1];
      if (q.B < p.B || (q.B == p.B && q.A > p.A))
        return false;
    }
  return true;
}

} // namespace arthur
