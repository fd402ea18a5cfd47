#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rsld {

// Edge of the complete graph K_t, vertices 1-based.
struct Edge {
  unsigned u, v;  // u < v
  bool operator==(const Edge&) const = default;
};

// All 2-subsets of [t] in the order: {a,b} < {c,d} iff max < max, or equal
// maxima and min < min.  For t=4 this is
// {1,2} < {1,3} < {2,3} < {1,4} < {2,4} < {3,4}.
std::vector<Edge> edge_order(unsigned t);

// Position of an edge in edge_order(t).
size_t edge_index(unsigned t, Edge e);

// A subgraph of K_t as a binary vector over the lexicographic edge order.
using GraphVec = std::vector<uint8_t>;

// Rows are the triangles through vertex t: row (i,j) for 1 <= i < j <= t-1,
// ordered lexicographically by (i,j).  Shape C(t-1,2) x C(t,2).
std::vector<GraphVec> cycle_basis_matrix(unsigned t);

// Membership in the row space of cycle_basis_matrix(t); coincides with the
// all-degrees-even test.
bool is_in_cycle_space(const GraphVec& g, unsigned t);

// Even-degree predicate, kept separate as the independent oracle.
bool all_degrees_even(const GraphVec& g, unsigned t);

// GF(2) independence of the three B_4 columns with the given edge labels;
// equals "the three edges do not share one common vertex".
bool b4_columns_independent(const std::array<Edge, 3>& labels);

// Fixed text layout for golden-file tests.
std::string basis_matrix_to_string(const std::vector<GraphVec>& rows);

// GF(2) rank of a set of binary vectors.
size_t gf2_rank(std::vector<GraphVec> rows);

}  // namespace rsld
