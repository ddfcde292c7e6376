#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "arthur/arthur.hpp"

using namespace arthur;

namespace {

const CuspidalLabel rho("r1", 1, Duality::Orthogonal);

ExtMultiSegment homog(GroupKind g, std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> twice_abmu) {
  ExtMultiSegment S(g);
  for (auto &[A2, B2, mu] : twice_abmu)
    S.parts[rho].emplace_back(HalfInt::from_twice(A2), HalfInt::from_twice(B2), mu);
  return S;
}

// group making a homogeneous orth-rho part good parity for the given lattice:
// integral A needs a+b = 2A+2 even -> Sp; half-integral A -> SO-odd
GroupKind group_for_lattice(bool integral) {
  return integral ? GroupKind::Symplectic : GroupKind::OddOrthogonal;
}

// all mu grids over given segments, filtered to valid extended multi-segments
std::vector<ExtMultiSegment>
valid_grid(GroupKind g, const std::vector<std::pair<std::int64_t, std::int64_t>> &AB2) {
  std::vector<ExtMultiSegment> out;
  std::vector<std::int64_t> bs;
  for (auto &[A2, B2] : AB2)
    bs.push_back((A2 - B2) / 2 + 1);
  std::vector<std::int64_t> mu(AB2.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == AB2.size()) {
      ExtMultiSegment S(g);
      for (std::size_t r = 0; r < AB2.size(); ++r)
        S.parts[rho].emplace_back(HalfInt::from_twice(AB2[r].first),
                                  HalfInt::from_twice(AB2[r].second), mu[r]);
      if (validate(S).is_extended_multi_segment())
        out.push_back(std::move(S));
      return;
    }
    for (std::int64_t m = -bs[i]; m <= bs[i]; m += 2) {
      mu[i] = m;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

} // namespace

TEST_CASE("extended segment construction") {
  CHECK_THROWS_AS(ExtSegment(HalfInt(0), HalfInt(1), 0), calc_error);
  CHECK_THROWS_AS(ExtSegment(HalfInt::half(3), HalfInt(0), 0), calc_error);
  CHECK_THROWS_AS(ExtSegment(HalfInt(1), HalfInt(0), 1), calc_error); // b=2, mu odd
  const ExtSegment e(HalfInt(2), HalfInt(0), 5);
  CHECK(e.a() == 3);
  CHECK(e.b() == 3);
  CHECK(!e.strict());
  CHECK(ExtSegment(HalfInt(2), HalfInt(0), 3).strict());
  CHECK(ExtSegment(HalfInt::half(1), HalfInt::half(1), 1).mu_hat() == 0);
}

TEST_CASE("validation report: worked instances") {
  // single ([1,1], -1): floor(-1/2) = -1, sign condition fails
  auto S1 = homog(GroupKind::Symplectic, {{2, 2, -1}});
  CHECK(!validate(S1).signCondition);
  // adding ([2,2], -1) restores parity: -1 + -1 = -2
  auto S2 = homog(GroupKind::Symplectic, {{2, 2, -1}, {4, 4, -1}});
  CHECK(validate(S2).signCondition);
  CHECK(validate(S2).is_extended_multi_segment());
  // empty
  CHECK(validate(ExtMultiSegment(GroupKind::Symplectic)).is_extended_multi_segment());
  // wrong-parity group
  auto S3 = homog(GroupKind::OddOrthogonal, {{2, 2, -1}, {4, 4, -1}});
  CHECK(!validate(S3).goodParity);
  // inadmissible order
  auto S4 = homog(GroupKind::Symplectic, {{4, 4, 1}, {2, 2, 1}});
  CHECK(!validate(S4).admissibleOrder);
  // negative B without very admissible order
  auto S5 = homog(GroupKind::Symplectic, {{2, 0, 0}, {2, -2, -1}});
  CHECK(!validate(S5).veryAdmissibleWhereNeeded);
  CHECK(validate(S5).is_extended_multi_segment());
}

TEST_CASE("Atobe map: worked instance") {
  // (([2,0],1),([3,1],-3)) -> ((2,0,l=1,+1),(3,1,l=0,-1))
  auto S = homog(GroupKind::Symplectic, {{4, 0, 1}, {6, 2, -3}});
  const AtobeSymbol E = to_atobe(S);
  const auto &part = E.parts.at(rho);
  REQUIRE(part.size() == 2);
  CHECK(part[0].l == 1);
  CHECK(part[0].eta == 1);
  CHECK(part[1].l == 0);
  CHECK(part[1].eta == -1);
  CHECK(from_atobe(E) == S);

  auto T = homog(GroupKind::Symplectic, {{2, 2, 1}});
  const AtobeSymbol F = to_atobe(T);
  CHECK(F.parts.at(rho)[0].l == 0);
  CHECK(F.parts.at(rho)[0].eta == 1);
}

TEST_CASE("F and F^-1 round-trip with sign-condition transport") {
  std::mt19937 rng(123);
  std::uniform_int_distribution<std::int64_t> Bpick(0, 6), len(0, 5);
  std::uniform_int_distribution<int> par(0, 1), n(1, 4);
  for (int it = 0; it < 10000; ++it) {
    const int lattice = par(rng);
    ExtMultiSegment S(group_for_lattice(lattice == 0));
    const int k = n(rng);
    std::vector<std::pair<std::int64_t, std::int64_t>> keys;
    for (int i = 0; i < k; ++i) {
      const std::int64_t B2 = 2 * Bpick(rng) + lattice;
      const std::int64_t A2 = B2 + 2 * len(rng);
      keys.emplace_back(B2, -A2);
    }
    std::sort(keys.begin(), keys.end());
    for (auto &[B2, nA2] : keys) {
      const std::int64_t b = (-nA2 - B2) / 2 + 1;
      std::uniform_int_distribution<std::int64_t> mus(0, b);
      const std::int64_t w = mus(rng);
      const std::int64_t mu = (w % 2 == b % 2) ? w : w - 1 >= -b ? w - 1 : w + 1;
      S.parts[rho].emplace_back(HalfInt::from_twice(-nA2), HalfInt::from_twice(B2),
                                par(rng) ? mu : -mu);
    }
    CHECK(from_atobe(to_atobe(S)) == S);
    // sign condition transports through the symbol product formula
    const AtobeSymbol E = to_atobe(S);
    std::int64_t prod_exp = 0;
    for (auto &[r, part] : E.parts)
      for (auto &a : part) {
        const std::int64_t b = (a.A - a.B).twice / 2 + 1;
        prod_exp += b / 2 + a.l + (a.eta < 0 ? b : 0);
      }
    CHECK((prod_exp % 2 == 0) == validate(S).signCondition);
  }
}

TEST_CASE("reorder: worked instances") {
  // (([2,1],0),([3,0],2)) -> (([3,0],2*0-2),([2,1],0)) by case (1), Eq. (gamma)
  auto S = homog(GroupKind::Symplectic, {{4, 2, 0}, {6, 0, 2}});
  const ExtMultiSegment R = reorder(S, rho, 1);
  auto want = homog(GroupKind::Symplectic, {{6, 0, -2}, {4, 2, 0}});
  CHECK(R == want);
  CHECK(reorder(R, rho, 1) == S); // involution

  // case (3): identity
  auto T = homog(GroupKind::Symplectic, {{2, 0, 0}, {6, 2, 1}});
  CHECK(reorder(T, rho, 1) == T);

  // crossing pair: unavailable
  auto X = homog(GroupKind::Symplectic, {{6, 2, 1}, {2, 0, 0}});
  CHECK(!try_reorder(X, rho, 1).has_value());
  CHECK_THROWS_AS(reorder(X, rho, 1), calc_error);
  CHECK_THROWS_AS(reorder(S, rho, 2), calc_error); // out of range
}

TEST_CASE("reorder is an involution on random nested pairs") {
  std::mt19937 rng(606);
  std::uniform_int_distribution<std::int64_t> pick(0, 5);
  for (int it = 0; it < 2000; ++it) {
    const std::int64_t B1 = pick(rng), L1 = pick(rng);
    const std::int64_t B2 = pick(rng), L2 = pick(rng);
    auto mu_for = [&](std::int64_t b) {
      std::uniform_int_distribution<std::int64_t> m(-b, b);
      std::int64_t v = m(rng);
      if ((v - b) % 2 != 0)
        v = v + 1 > b ? v - 1 : v + 1;
      return v;
    };
    ExtMultiSegment S(GroupKind::Symplectic);
    S.parts[rho].emplace_back(HalfInt(B1 + L1), HalfInt(B1), mu_for(L1 + 1));
    S.parts[rho].emplace_back(HalfInt(B2 + L2), HalfInt(B2), mu_for(L2 + 1));
    auto r1 = try_reorder(S, rho, 1);
    if (!r1)
      continue;
    auto r2 = try_reorder(*r1, rho, 1);
    REQUIRE(r2.has_value());
    CHECK(*r2 == S);
  }
}

TEST_CASE("standard form: worked instances") {
  // (([2,1],0),([3,0],2)) is out of order; one case-(1) move sorts it
  auto S = homog(GroupKind::Symplectic, {{4, 2, 0}, {6, 0, 2}});
  const ExtMultiSegment T = standard_form(S);
  CHECK(T == homog(GroupKind::Symplectic, {{6, 0, -2}, {4, 2, 0}}));
  CHECK(is_standard(T));
  CHECK(standard_form(T) == T); // idempotent
  // an input already in standard order is untouched
  auto V = homog(GroupKind::Symplectic, {{6, 0, 2}, {4, 2, 0}});
  CHECK(is_standard(V));
  CHECK(standard_form(V) == V);

  // already standard
  auto U = homog(GroupKind::Symplectic, {{2, 0, 0}, {4, 2, 0}});
  CHECK(standard_form(U) == U);

  // duplicates stay put
  auto D = homog(GroupKind::Symplectic, {{2, 2, 1}, {2, 2, 1}});
  CHECK(standard_form(D) == D);
}

TEST_CASE("standard form is canonical on random admissible inputs") {
  std::mt19937 rng(0xA5);
  std::uniform_int_distribution<std::int64_t> pick(0, 4);
  std::uniform_int_distribution<int> n(1, 5);
  int done = 0;
  while (done < 3000) {
    ExtMultiSegment S(GroupKind::Symplectic);
    const int k = n(rng);
    for (int i = 0; i < k; ++i) {
      const std::int64_t B = pick(rng), L = pick(rng);
      const std::int64_t b = L + 1;
      std::uniform_int_distribution<std::int64_t> m(0, b);
      std::int64_t mu = m(rng);
      if ((mu - b) % 2 != 0)
        mu = mu > 0 ? mu - 1 : mu + 1;
      S.parts[rho].emplace_back(HalfInt(B + L), HalfInt(B), mu);
    }
    if (!validate(S).admissibleOrder)
      continue;
    ++done;
    const ExtMultiSegment T = standard_form(S);
    CHECK(is_standard(T));
    // the (A,B) multiset is preserved
    auto key = [](const ExtMultiSegment &X) {
      std::vector<std::pair<std::int64_t, std::int64_t>> ks;
      for (auto &e : X.parts.at(rho))
        ks.emplace_back(e.B.twice, -e.A.twice);
      std::sort(ks.begin(), ks.end());
      return ks;
    };
    CHECK(key(S) == key(T));
  }
}

TEST_CASE("necessary condition: worked instances") {
  CHECK(necessary_condition(homog(GroupKind::Symplectic, {{2, 0, 2}, {4, 2, 2}})));
  CHECK(!necessary_condition(homog(GroupKind::Symplectic, {{2, 0, 2}, {4, 2, -2}})));
  CHECK(necessary_condition(homog(GroupKind::Symplectic, {{2, 0, 2}})));
}

TEST_CASE("Lemma A.1: the Atobe-case route equals Eq. (nec) exhaustively") {
  // all non-negative two-segment parts with A <= 9/2 on both lattices
  for (int lattice = 0; lattice < 2; ++lattice) {
    const GroupKind g = group_for_lattice(lattice == 0);
    std::vector<std::pair<std::int64_t, std::int64_t>> segs; // (A2, B2)
    for (std::int64_t B2 = lattice; B2 <= 9; B2 += 2)
      for (std::int64_t A2 = B2; A2 <= 9; A2 += 2)
        segs.emplace_back(A2, B2);
    std::int64_t checked = 0;
    for (auto &[A2a, B2a] : segs)
      for (auto &[A2b, B2b] : segs) {
        // admissible order for the pair
        if (A2a > A2b && B2a > B2b)
          continue;
        const std::int64_t b1 = (A2a - B2a) / 2 + 1, b2 = (A2b - B2b) / 2 + 1;
        for (std::int64_t m1 = -b1; m1 <= b1; m1 += 2)
          for (std::int64_t m2 = -b2; m2 <= b2; m2 += 2) {
            ExtMultiSegment S(g);
            S.parts[rho].emplace_back(HalfInt::from_twice(A2a),
                                      HalfInt::from_twice(B2a), m1);
            S.parts[rho].emplace_back(HalfInt::from_twice(A2b),
                                      HalfInt::from_twice(B2b), m2);
            CHECK(nec_atobe_cases(S) == necessary_condition(S));
            ++checked;
          }
      }
    CHECK(checked > 2000);
  }
}

TEST_CASE("connected and delta: worked instances") {
  auto S = homog(GroupKind::Symplectic, {{6, 0, 2}, {4, 2, 0}, {6, 4, 2}});
  REQUIRE(is_standard(S));
  CHECK(connected(S, rho, 1, 2));
  CHECK(connected(S, rho, 2, 3));
  CHECK(connected(S, rho, 1, 3)); // A_2 = 2 is not between A_1 = 3 and A_3 = 3
  // Delta(mu1, mu3) = mu1 - 2 mu2 + mu3 (the m = 1 term flips sign)
  CHECK(delta_S(S, rho, 1, 3) == 2 - 2 * 0 + 2);
  CHECK(delta_S(S, rho, 1, 2) == -2);
  CHECK(delta_S(S, rho, 2, 1) == 2);
  CHECK(delta_S(S, rho, 2, 2) == 0);

  // blocking index: ascending A chain disconnects the ends
  auto T = homog(GroupKind::Symplectic, {{2, 0, 0}, {4, 2, 0}, {6, 4, 0}});
  CHECK(!connected(T, rho, 1, 3));

  CHECK_THROWS_AS(connected(S, rho, 0, 2), calc_error);
  CHECK_THROWS_AS(delta_S(S, rho, 1, 9), calc_error);
}

TEST_CASE("delta antisymmetry on random standard parts") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<std::int64_t> pick(0, 4);
  int done = 0;
  while (done < 500) {
    ExtMultiSegment S(GroupKind::Symplectic);
    for (int i = 0; i < 4; ++i) {
      const std::int64_t B = pick(rng), L = pick(rng);
      S.parts[rho].emplace_back(HalfInt(B + L), HalfInt(B), (L + 1) % 2 == 0 ? 0 : 1);
    }
    std::sort(S.parts[rho].begin(), S.parts[rho].end(),
              [](const ExtSegment &p, const ExtSegment &q) {
                if (p.B != q.B)
                  return p.B < q.B;
                return p.A > q.A;
              });
    if (!is_standard(S))
      continue;
    ++done;
    for (std::int64_t i = 1; i <= 4; ++i)
      for (std::int64_t j = 1; j <= 4; ++j)
        CHECK(delta_S(S, rho, i, j) == -delta_S(S, rho, j, i));
  }
}

TEST_CASE("in_srep: worked instances") {
  CHECK(in_srep(homog(GroupKind::Symplectic, {{2, 0, 2}, {4, 2, 2}})));
  // borderline |Delta| = 2 <= 2 passes on the adjacent pair
  auto S = homog(GroupKind::Symplectic, {{2, 0, 0}, {4, 2, 2}, {6, 4, 4}});
  if (validate(S).is_extended_multi_segment())
    CHECK(in_srep(S) == in_rep_bruteforce(S));
  // a (nec) violation in standard form
  CHECK(!in_srep(homog(GroupKind::Symplectic, {{2, 0, 2}, {4, 2, -2}})));
  // invalid input throws
  CHECK_THROWS_AS(in_srep(homog(GroupKind::Symplectic, {{2, 2, -1}})), calc_error);
}

TEST_CASE("non-vanishing: criterion equals the brute-force oracle") {
  // exhaustive homogeneous standard sweeps, n <= 3 here (acceptance pushes
  // further); both lattices
  for (int lattice = 0; lattice < 2; ++lattice) {
    const GroupKind g = group_for_lattice(lattice == 0);
    std::vector<std::pair<std::int64_t, std::int64_t>> segs;
    for (std::int64_t B2 = lattice; B2 <= 5; B2 += 2)
      for (std::int64_t A2 = B2; A2 <= 5; A2 += 2)
        segs.emplace_back(A2, B2);
    std::int64_t agree = 0;
    for (std::size_t i = 0; i < segs.size(); ++i)
      for (std::size_t j = i; j < segs.size(); ++j)
        for (std::size_t k = j; k < segs.size(); ++k) {
          std::vector<std::pair<std::int64_t, std::int64_t>> chosen = {segs[i], segs[j],
                                                                        segs[k]};
          std::sort(chosen.begin(), chosen.end(),
                    [](auto &p, auto &q) {
                      if (p.second != q.second)
                        return p.second < q.second;
                      return p.first > q.first;
                    });
          for (auto &S : valid_grid(g, chosen)) {
            if (!is_standard(S))
              continue;
            CHECK(in_srep(S) == in_rep_bruteforce(S));
            ++agree;
          }
        }
    CHECK(agree > 400);
  }
}

TEST_CASE("Lemma A.2: mu is well-defined per reachable order") {
  // nested families make every transposition available
  std::mt19937 rng(77);
  std::uniform_int_distribution<std::int64_t> pick(0, 2);
  int done = 0;
  while (done < 200) {
    ExtMultiSegment S(GroupKind::Symplectic);
    const int n = 4;
    for (int i = 0; i < n; ++i) {
      const std::int64_t B = pick(rng);
      const std::int64_t A = B + pick(rng);
      std::uniform_int_distribution<std::int64_t> m(0, (A - B) + 1);
      std::int64_t mu = m(rng);
      const std::int64_t b = A - B + 1;
      if ((mu - b) % 2 != 0)
        mu = mu > 0 ? mu - 1 : mu + 1;
      S.parts[rho].emplace_back(HalfInt(A), HalfInt(B), mu);
    }
    std::sort(S.parts[rho].begin(), S.parts[rho].end(),
              [](const ExtSegment &p, const ExtSegment &q) {
                if (p.B != q.B)
                  return p.B < q.B;
                return p.A > q.A;
              });
    if (!validate(S).is_extended_multi_segment() || !is_standard(S))
      continue;
    if (!in_srep(S))
      continue;
    ++done;
    const auto orbit = reorder_orbit(S.parts[rho], 100000);
    std::map<std::vector<std::pair<std::int64_t, std::int64_t>>,
             std::set<std::vector<std::int64_t>>>
        mus_per_order;
    for (auto &part : orbit) {
      std::vector<std::pair<std::int64_t, std::int64_t>> order;
      std::vector<std::int64_t> mus;
      for (auto &e : part) {
        order.emplace_back(e.A.twice, e.B.twice);
        mus.push_back(e.mu);
      }
      mus_per_order[order].insert(mus);
    }
    for (auto &[order, mus] : mus_per_order)
      CHECK(mus.size() == 1);
  }
}

TEST_CASE("reorder preserves the sign condition under (nec)") {
  std::mt19937 rng(88);
  std::uniform_int_distribution<std::int64_t> pick(0, 3);
  int done = 0;
  while (done < 1500) {
    ExtMultiSegment S(GroupKind::Symplectic);
    for (int i = 0; i < 3; ++i) {
      const std::int64_t B = pick(rng);
      const std::int64_t A = B + pick(rng);
      const std::int64_t b = A - B + 1;
      std::uniform_int_distribution<std::int64_t> m(-b, b);
      std::int64_t mu = m(rng);
      if ((mu - b) % 2 != 0)
        mu = mu + 1 > b ? mu - 1 : mu + 1;
      S.parts[rho].emplace_back(HalfInt(A), HalfInt(B), mu);
    }
    if (!necessary_condition(S))
      continue;
    for (std::int64_t i = 1; i <= 2; ++i) {
      auto r = try_reorder(S, rho, i);
      if (!r)
        continue;
      ++done;
      CHECK(sign_condition(*r) == sign_condition(S));
    }
  }
}
