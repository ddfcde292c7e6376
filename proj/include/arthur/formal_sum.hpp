#pragma once

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "arthur/ladder.hpp"

namespace arthur {

// sigma of the derivative definitions: a cuspidal twist rho|.|^z or Z_rho[0,1].
struct DerivativeSymbol {
  struct Cuspidal {
    CuspidalLabel rho;
    HalfInt z;
    friend bool operator==(const Cuspidal &, const Cuspidal &) = default;
  };
  struct Z01 {
    CuspidalLabel rho;
    friend bool operator==(const Z01 &, const Z01 &) = default;
  };

  std::variant<Cuspidal, Z01> v;

  static DerivativeSymbol cuspidal(CuspidalLabel rho, HalfInt z) {
    return DerivativeSymbol{Cuspidal{std::move(rho), z}};
  }
  static DerivativeSymbol z01(CuspidalLabel rho) {
    if (!rho.self_dual())
      throw calc_error("Z_rho[0,1] requires a self-dual rho");
    return DerivativeSymbol{Z01{std::move(rho)}};
  }

  bool is_z01() const { return std::holds_alternative<Z01>(v); }
  const CuspidalLabel &rho() const {
    return is_z01() ? std::get<Z01>(v).rho : std::get<Cuspidal>(v).rho;
  }

  friend bool operator==(const DerivativeSymbol &, const DerivativeSymbol &) = default;

  std::string str() const {
    if (is_z01())
      return "Z_" + rho().display() + "[0,1]";
    const auto &c = std::get<Cuspidal>(v);
    return c.rho.display() + "|.|^" + c.z.str();
  }
};

// One term of m*/M*: an unexpanded formal product of ladders tensor a ladder.
struct GLTerm {
  std::vector<Ladder> left;
  Ladder right;
  std::int64_t coeff = 1;

  GLTerm() = default;
  GLTerm(std::vector<Ladder> l, Ladder r, std::int64_t c = 1)
      : left(std::move(l)), right(std::move(r)), coeff(c) {
    prune();
  }

  void prune() {
    std::erase_if(left, [](const Ladder &f) { return f.empty(); });
  }

  std::int64_t rank() const {
    std::int64_t n = right.rank();
    for (auto &f : left)
      n += f.rank();
    return n;
  }

  friend bool operator==(const GLTerm &a, const GLTerm &b) {
    return a.left == b.left && a.right == b.right && a.coeff == b.coeff;
  }

  // content ordering, ignoring the coefficient
  static bool content_less(const GLTerm &a, const GLTerm &b) {
    if (a.left != b.left)
      return a.left < b.left;
    return a.right < b.right;
  }
  static bool content_eq(const GLTerm &a, const GLTerm &b) {
    return a.left == b.left && a.right == b.right;
  }

  std::string str() const {
    std::string s = coeff == 1 ? "" : std::to_string(coeff) + "*";
    if (left.empty())
      s += "1";
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (i)
        s += " x ";
      s += left[i].str();
    }
    return s + " (x) " + right.str();
  }
};

// Integer combination of GL terms; addition merges identical content.
struct FormalSum {
  std::vector<GLTerm> terms;

  void add(GLTerm t) {
    if (t.coeff != 0)
      terms.push_back(std::move(t));
  }

  FormalSum &canonicalize() {
    std::sort(terms.begin(), terms.end(), GLTerm::content_less);
    std::vector<GLTerm> merged;
    for (auto &t : terms) {
      if (!merged.empty() && GLTerm::content_eq(merged.back(), t))
        merged.back().coeff += t.coeff;
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const GLTerm &t) { return t.coeff == 0; });
    terms = std::move(merged);
    return *this;
  }

  std::int64_t total_count() const {
    std::int64_t n = 0;
    for (auto &t : terms)
      n += t.coeff;
    return n;
  }

  auto begin() const { return terms.begin(); }
  auto end() const { return terms.end(); }
  std::size_t size() const { return terms.size(); }

  friend bool operator==(const FormalSum &, const FormalSum &) = default;
};

} // namespace arthur
