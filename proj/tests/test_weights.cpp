#include "doctest.h"
#include "rsld/rng.hpp"
#include "rsld/weights.hpp"

#include <bit>

using namespace rsld;

namespace {

SetSystem random_system(Rng& rng, unsigned max_t, unsigned max_n) {
  unsigned t = 2 + static_cast<unsigned>(rng.below(max_t - 1));
  unsigned n = 1 + static_cast<unsigned>(rng.below(max_n));
  std::vector<std::vector<unsigned>> sets(t);
  for (auto& s : sets)
    for (unsigned e = 1; e <= n; ++e)
      if (rng.coin()) s.push_back(e);
  return SetSystem(n, std::move(sets));
}

}  // namespace

TEST_CASE("atom profiles") {
  // Pairwise-disjoint sets: only singleton atoms.
  SetSystem disjoint(6, {{1, 2}, {3}, {4, 5}});
  auto p = atoms(disjoint);
  CHECK(p[0b001] == 2);
  CHECK(p[0b010] == 1);
  CHECK(p[0b100] == 2);
  CHECK(p.count(0b011) == 0);

  SetSystem same(3, {{1, 2}, {1, 2}});
  auto p2 = atoms(same);
  CHECK(p2[0b11] == 2);
  CHECK(p2.count(0b01) == 0);
  CHECK(p2.count(0b10) == 0);

  SetSystem tri(3, {{1, 2}, {2, 3}, {1, 3}});
  auto p3 = atoms(tri);
  CHECK(p3[0b011] == 1);  // element 2
  CHECK(p3[0b101] == 1);  // element 1
  CHECK(p3[0b110] == 1);  // element 3
  CHECK(p3.count(0b111) == 0);
}

TEST_CASE("weights by definition") {
  SetSystem tri(3, {{1, 2}, {2, 3}, {1, 3}});
  // wt of a pair equals the intersection size.
  CHECK(weight(tri, 0b011) == 1);
  CHECK(weight(tri, 0b101) == 1);
  CHECK(weight(tri, 0b110) == 1);
  CHECK(weight_all(tri) == 3);          // 6 - 3
  CHECK(weight(tri, 0b001) == 0);       // singleton
  CHECK_THROWS(weight(tri, 0));
}

TEST_CASE("weight equals its atom form on random systems") {
  Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    auto s = random_system(rng, 5, 12);
    auto p = atoms(s);
    const IndexMask full = (IndexMask{1} << s.t()) - 1;
    for (IndexMask J = 1; J <= full; ++J)
      CHECK(weight(s, J) == weight_from_atoms(p, J));
  }
}

TEST_CASE("displayed weight identities on random atom profiles") {
  // wt(I_1,I_2) = x_12 + x_123 + x_124 + x_1234
  // wt(I_1,I_2,I_3) = x_12+x_13+x_23+x_124+x_134+x_234+2x_123+2x_1234
  // wt(full) = sum x_S + 2 sum x_T + 3 x_1234
  Rng rng(555);
  for (int trial = 0; trial < 200; ++trial) {
    AtomProfile p;
    for (IndexMask U = 1; U < 16; ++U) {
      unsigned v = static_cast<unsigned>(rng.below(4));
      if (v) p[U] = v;
    }
    auto x = [&](IndexMask U) -> int { return p.count(U) ? p[U] : 0; };
    CHECK(weight_from_atoms(p, 0b0011) ==
          x(0b0011) + x(0b0111) + x(0b1011) + x(0b1111));
    CHECK(weight_from_atoms(p, 0b0111) ==
          x(0b0011) + x(0b0101) + x(0b0110) + x(0b1011) + x(0b1101) +
              x(0b1110) + 2 * x(0b0111) + 2 * x(0b1111));
    int sum_pairs = 0, sum_triples = 0;
    for (IndexMask U = 1; U < 16; ++U) {
      if (std::popcount(U) == 2) sum_pairs += x(U);
      if (std::popcount(U) == 3) sum_triples += x(U);
    }
    CHECK(weight_from_atoms(p, 0b1111) ==
          sum_pairs + 2 * sum_triples + 3 * x(0b1111));
  }
}

TEST_CASE("weight lower bound") {
  // Sets covering [n] once each element: equality.
  SetSystem cover(4, {{1, 2}, {3}, {4}});
  CHECK(weight_lower_bound(cover) == 0);
  CHECK(weight_all(cover) == 0);
  // Union smaller than [n]: strict.
  SetSystem small(5, {{1}, {2}});
  CHECK(weight_lower_bound(small) == -3);
  CHECK(weight_all(small) == 0);
  Rng rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    auto s = random_system(rng, 5, 10);
    CHECK(weight_all(s) >= weight_lower_bound(s));
  }
}

TEST_CASE("hypothesis check") {
  // Triangle system: pair weights fine, full weight too big for k=1.
  SetSystem tri(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK_FALSE(check_weight_hypotheses(tri, 1));
  // One shared element: wt(full) = 2 = 2k at k=1.
  SetSystem point(1, {{1}, {1}, {1}});
  CHECK(check_weight_hypotheses(point, 1));
  // Oversized pair intersection violates the pair bound.
  SetSystem bigpair(4, {{1, 2, 3}, {1, 2, 3}, {4}});
  CHECK_FALSE(check_weight_hypotheses(bigpair, 1));
}

TEST_CASE("atoms stay at most k under the hypotheses") {
  Rng rng(4096);
  int hits = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    auto s = random_system(rng, 4, 8);
    if (s.t() < 3) continue;
    for (unsigned k = 1; k <= 3; ++k) {
      if (!check_weight_hypotheses(s, k)) continue;
      ++hits;
      for (const auto& [U, x] : atoms(s))
        if (std::popcount(U) >= 2) CHECK(x <= k);
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("single removal changes the full weight by at most one") {
  Rng rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    auto s = random_system(rng, 4, 8);
    int w = weight_all(s);
    for (unsigned i = 0; i < s.t(); ++i) {
      if (s.sets[i].empty()) continue;
      auto copy = s;
      copy.sets[i].erase(copy.sets[i].begin());
      int w2 = weight_all(copy);
      CHECK(w - w2 >= 0);
      CHECK(w - w2 <= 1);
    }
  }
}

TEST_CASE("trimming keeps already-tight systems unchanged") {
  // The pair bound wt <= k-1 makes k=1 and k=2 instances impossible at t=3
  // (max reachable full weight is 3(k-1) < 2k); k=3 is the smallest case.
  // k=3: pair weights 2 <= k-1, full weight 6 = 2k exactly.
  SetSystem w(6, {{1, 2, 3, 4}, {1, 2, 5, 6}, {3, 4, 5, 6}});
  CHECK(weight_all(w) == 6);
  auto rw = trim_to_minimal_t(w, 3);
  CHECK(rw.t_star == 3);
  CHECK(rw.trimmed.sets == w.sets);
  CHECK(check_weight_hypotheses(rw.trimmed, 3));
}

TEST_CASE("trimming removes overlap until exact equality") {
  // k=4: pairwise intersections of size 3 = k-1, empty triple intersection.
  // Full weight 9 exceeds the target 2k = 8 by one.
  SetSystem y(9, {{1, 2, 3, 7, 8, 9}, {1, 2, 3, 4, 5, 6}, {4, 5, 6, 7, 8, 9}});
  CHECK(weight_all(y) == 9);
  auto r = trim_to_minimal_t(y, 4);
  CHECK(r.t_star == 3);
  CHECK(weight_all(r.trimmed) == 8);
  CHECK(check_weight_hypotheses(r.trimmed, 4));
  // Deterministic choice: equal sizes, so the removal comes from set 0 and
  // is its lowest multi-occurrence element.
  CHECK(r.trimmed.sets[0] == std::vector<unsigned>{2, 3, 7, 8, 9});

  // Pair weight k violates the precondition.
  SetSystem bad(8, {{1, 2, 3, 4, 8}, {1, 2, 3, 4, 7}, {7, 8, 5}});
  CHECK_THROWS(trim_to_minimal_t(bad, 4));
}

TEST_CASE("trim output validates on randomized qualifying systems") {
  // Random atom profiles with pair weights <= k-1; accept those whose full
  // weight reaches (t-1)k, realize as sets, trim, re-validate.
  Rng rng(0x7717);
  int accepted = 0;
  for (int trial = 0; trial < 20000 && accepted < 60; ++trial) {
    unsigned t = 3 + static_cast<unsigned>(rng.below(2));  // 3 or 4
    unsigned k = 2 + static_cast<unsigned>(rng.below(5));  // 2..6
    const IndexMask full = (IndexMask{1} << t) - 1;
    AtomProfile prof;
    for (IndexMask U = 1; U <= full; ++U) {
      if (std::popcount(U) < 2) continue;
      unsigned v = static_cast<unsigned>(rng.below(k + 1));
      if (v) prof[U] = v;
    }
    bool pairs_ok = true;
    for (unsigned i = 0; i < t && pairs_ok; ++i)
      for (unsigned j = i + 1; j < t && pairs_ok; ++j)
        pairs_ok = weight_from_atoms(
                       prof, (IndexMask{1} << i) | (IndexMask{1} << j)) <=
                   static_cast<int>(k) - 1;
    if (!pairs_ok) continue;
    if (weight_from_atoms(prof, full) <
        static_cast<int>(t - 1) * static_cast<int>(k))
      continue;

    // Realize the profile with fresh elements.
    unsigned next_elem = 1;
    std::vector<std::vector<unsigned>> sets(t);
    for (const auto& [U, count] : prof)
      for (unsigned c = 0; c < count; ++c, ++next_elem)
        for (unsigned i = 0; i < t; ++i)
          if (U & (IndexMask{1} << i)) sets[i].push_back(next_elem);
    SetSystem sys(next_elem == 1 ? 1 : next_elem - 1, sets);

    auto r = trim_to_minimal_t(sys, k);
    ++accepted;
    CHECK(r.t_star >= 3);
    CHECK(r.t_star <= t);
    CHECK(check_weight_hypotheses(r.trimmed, k));
    // Minimality: no smaller selection reaches its bound in the original.
    for (unsigned smaller = 3; smaller < r.t_star; ++smaller) {
      for (IndexMask J = 1; J <= full; ++J) {
        if (std::popcount(J) != static_cast<int>(smaller)) continue;
        CHECK(weight(sys, J) <
              static_cast<int>(smaller - 1) * static_cast<int>(k));
      }
    }
  }
  CHECK(accepted >= 60);
}
