#include "doctest.h"
#include "rsld/cycles.hpp"
#include "rsld/rng.hpp"

using namespace rsld;

TEST_CASE("edge order is the max-then-min lexicographic order") {
  auto e3 = edge_order(3);
  CHECK(e3 == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
  auto e4 = edge_order(4);
  CHECK(e4 == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
  auto e5 = edge_order(5);
  CHECK(e5.size() == 10);
  CHECK(e5.back() == Edge{4, 5});
  for (size_t i = 0; i < e5.size(); ++i) CHECK(edge_index(5, e5[i]) == i);
  CHECK_THROWS(edge_order(1));
}

TEST_CASE("triangle basis matrices") {
  auto b3 = cycle_basis_matrix(3);
  REQUIRE(b3.size() == 1);
  CHECK(b3[0] == GraphVec{1, 1, 1});

  auto b4 = cycle_basis_matrix(4);
  REQUIRE(b4.size() == 3);
  CHECK(b4[0] == GraphVec{1, 0, 0, 1, 1, 0});
  CHECK(b4[1] == GraphVec{0, 1, 0, 1, 0, 1});
  CHECK(b4[2] == GraphVec{0, 0, 1, 0, 1, 1});

  auto b5 = cycle_basis_matrix(5);
  CHECK(b5.size() == 6);
  CHECK(b5[0].size() == 10);
  CHECK(gf2_rank(b5) == 6);
  CHECK_THROWS(cycle_basis_matrix(2));
}

TEST_CASE("basis rank is C(t-1,2) for t up to 7") {
  for (unsigned t = 3; t <= 7; ++t) {
    auto b = cycle_basis_matrix(t);
    CHECK(gf2_rank(b) == static_cast<size_t>(t - 1) * (t - 2) / 2);
  }
}

TEST_CASE("cycle space membership equals the even-degree test") {
  // Exhaustive for t <= 4.
  for (unsigned t = 3; t <= 4; ++t) {
    const size_t e = t * (t - 1) / 2;
    for (uint64_t mask = 0; mask < (uint64_t{1} << e); ++mask) {
      GraphVec g(e, 0);
      for (size_t i = 0; i < e; ++i) g[i] = (mask >> i) & 1;
      CHECK(is_in_cycle_space(g, t) == all_degrees_even(g, t));
    }
  }
  // Random for t in {5, 6}.
  Rng rng(1234);
  for (unsigned t = 5; t <= 6; ++t) {
    const size_t e = t * (t - 1) / 2;
    for (int trial = 0; trial < 10000; ++trial) {
      GraphVec g(e, 0);
      for (size_t i = 0; i < e; ++i) g[i] = rng.coin() ? 1 : 0;
      CHECK(is_in_cycle_space(g, t) == all_degrees_even(g, t));
    }
  }
}

TEST_CASE("membership basics") {
  GraphVec zero(6, 0);
  CHECK(is_in_cycle_space(zero, 4));
  // A single triangle.
  GraphVec tri(6, 0);
  tri[edge_index(4, {1, 2})] = 1;
  tri[edge_index(4, {1, 3})] = 1;
  tri[edge_index(4, {2, 3})] = 1;
  CHECK(is_in_cycle_space(tri, 4));
  // A single edge has odd degrees.
  GraphVec one_edge(6, 0);
  one_edge[0] = 1;
  CHECK_FALSE(is_in_cycle_space(one_edge, 4));
}

TEST_CASE("B4 column independence equals the no-common-vertex predicate") {
  CHECK(b4_columns_independent({Edge{1, 2}, Edge{1, 3}, Edge{2, 3}}));
  CHECK_FALSE(b4_columns_independent({Edge{1, 4}, Edge{2, 4}, Edge{3, 4}}));
  CHECK(b4_columns_independent({Edge{1, 2}, Edge{3, 4}, Edge{1, 3}}));
  CHECK_THROWS(b4_columns_independent({Edge{1, 2}, Edge{1, 2}, Edge{3, 4}}));

  // Exhaustive over all 20 triples.
  auto edges = edge_order(4);
  int checked = 0;
  for (size_t a = 0; a < 6; ++a)
    for (size_t b = a + 1; b < 6; ++b)
      for (size_t c = b + 1; c < 6; ++c) {
        bool common_vertex = false;
        for (unsigned v = 1; v <= 4; ++v) {
          auto touches = [&](Edge e) { return e.u == v || e.v == v; };
          if (touches(edges[a]) && touches(edges[b]) && touches(edges[c]))
            common_vertex = true;
        }
        CHECK(b4_columns_independent({edges[a], edges[b], edges[c]}) ==
              !common_vertex);
        ++checked;
      }
  CHECK(checked == 20);
}

TEST_CASE("XOR of Eulerian vectors stays Eulerian") {
  Rng rng(777);
  const unsigned t = 5;
  const size_t e = 10;
  auto basis = cycle_basis_matrix(t);
  for (int trial = 0; trial < 200; ++trial) {
    // Random combinations of basis rows are Eulerian by construction.
    GraphVec g1(e, 0), g2(e, 0);
    for (const auto& row : basis) {
      if (rng.coin())
        for (size_t i = 0; i < e; ++i) g1[i] ^= row[i];
      if (rng.coin())
        for (size_t i = 0; i < e; ++i) g2[i] ^= row[i];
    }
    GraphVec both(e, 0);
    for (size_t i = 0; i < e; ++i) both[i] = g1[i] ^ g2[i];
    CHECK(all_degrees_even(both, t));
  }
}
