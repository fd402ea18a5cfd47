#include "rsld/cycles.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rsld {

std::vector<Edge> edge_order(unsigned t) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  std::vector<Edge> edges;
  edges.reserve(t * (t - 1) / 2);
  for (unsigned hi = 2; hi <= t; ++hi)
    for (unsigned lo = 1; lo < hi; ++lo) edges.push_back({lo, hi});
  return edges;
}

size_t edge_index(unsigned t, Edge e) {
  if (e.u > e.v) std::swap(e.u, e.v);
  if (e.u == e.v || e.u < 1 || e.v > t)
    throw std::invalid_argument("not an edge of K_t");
  // Edges with maximum hi occupy a block of hi-1 positions.
  return static_cast<size_t>(e.v - 1) * (e.v - 2) / 2 + (e.u - 1);
}

std::vector<GraphVec> cycle_basis_matrix(unsigned t) {
  if (t < 3) throw std::invalid_argument("t must be at least 3");
  const size_t ecount = static_cast<size_t>(t) * (t - 1) / 2;
  std::vector<GraphVec> rows;
  for (unsigned i = 1; i + 1 <= t - 1; ++i)
    for (unsigned j = i + 1; j <= t - 1; ++j) {
      GraphVec row(ecount, 0);
      row[edge_index(t, {i, j})] = 1;
      row[edge_index(t, {i, t})] = 1;
      row[edge_index(t, {j, t})] = 1;
      rows.push_back(std::move(row));
    }
  return rows;
}

bool all_degrees_even(const GraphVec& g, unsigned t) {
  const auto edges = edge_order(t);
  if (g.size() != edges.size())
    throw std::invalid_argument("vector length does not match C(t,2)");
  std::vector<unsigned> deg(t + 1, 0);
  for (size_t i = 0; i < edges.size(); ++i) {
    if (g[i]) {
      ++deg[edges[i].u];
      ++deg[edges[i].v];
    }
  }
  for (unsigned v = 1; v <= t; ++v)
    if (deg[v] % 2) return false;
  return true;
}

size_t gf2_rank(std::vector<GraphVec> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
    size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c]) {
        for (size_t j = 0; j < cols; ++j) rows[r][j] ^= rows[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

bool is_in_cycle_space(const GraphVec& g, unsigned t) {
  auto basis = cycle_basis_matrix(t);
  if (g.size() != basis[0].size())
    throw std::invalid_argument("vector length does not match C(t,2)");
  size_t base_rank = gf2_rank(basis);
  basis.push_back(g);
  return gf2_rank(basis) == base_rank;
}

bool b4_columns_independent(const std::array<Edge, 3>& labels) {
  std::set<std::pair<unsigned, unsigned>> distinct;
  for (auto e : labels) {
    if (e.u > e.v) std::swap(e.u, e.v);
    distinct.insert({e.u, e.v});
  }
  if (distinct.size() != 3) throw std::invalid_argument("edges must be distinct");

  auto basis = cycle_basis_matrix(4);
  std::vector<GraphVec> cols;
  for (const auto& e : labels) {
    size_t idx = edge_index(4, e);
    GraphVec col(basis.size());
    for (size_t r = 0; r < basis.size(); ++r) col[r] = basis[r][idx];
    cols.push_back(std::move(col));
  }
  return gf2_rank(cols) == 3;
}

std::string basis_matrix_to_string(const std::vector<GraphVec>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) os << " ";
      os << (row[c] ? "1" : ".");
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace rsld
