#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "arthur/half_int.hpp"

namespace arthur {

enum class GroupKind { OddOrthogonal, Symplectic };

inline std::string to_string(GroupKind g) {
  return g == GroupKind::OddOrthogonal ? "SO-odd" : "Sp";
}

enum class Duality { Orthogonal, Symplectic, NotSelfDual };

inline std::string to_string(Duality d) {
  switch (d) {
  case Duality::Orthogonal: return "orth";
  case Duality::Symplectic: return "symp";
  default: return "none";
  }
}

// A unitary supercuspidal of GL_d, known to the calculus only by name, rank
// and duality type. A non-self-dual rho and its contragredient are modeled as
// the label pair (name, name^) sharing d.
struct CuspidalLabel {
  std::string name;
  std::int64_t d = 1;
  Duality duality = Duality::Orthogonal;
  bool starred = false; // marks the vee-partner of a non-self-dual label

  CuspidalLabel() = default;
  CuspidalLabel(std::string n, std::int64_t rank, Duality dual, bool star = false)
      : name(std::move(n)), d(rank), duality(dual), starred(star) {
    if (d < 1)
      throw calc_error("cuspidal label " + name + ": d must be positive");
    if (duality != Duality::NotSelfDual && starred)
      throw calc_error("cuspidal label " + name + ": self-dual label cannot be starred");
  }

  bool self_dual() const { return duality != Duality::NotSelfDual; }

  CuspidalLabel dual() const {
    if (self_dual())
      return *this;
    CuspidalLabel c = *this;
    c.starred = !starred;
    return c;
  }

  std::string display() const { return starred ? name + "^" : name; }

  friend bool operator==(const CuspidalLabel &a, const CuspidalLabel &b) {
    return a.name == b.name && a.starred == b.starred;
  }
  friend auto operator<=>(const CuspidalLabel &a, const CuspidalLabel &b) {
    if (auto c = a.name <=> b.name; c != 0)
      return c;
    return a.starred <=> b.starred;
  }
};

} // namespace arthur
