#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "recolor/error.hpp"
#include "recolor/graph.hpp"

namespace recolor {

/// Vertex order v_1..v_n in which each vertex has at most `degeneracy()`
/// neighbours earlier in the order.
struct DegeneracyOrdering {
  std::vector<Vertex> order;     // order[i] = v_{i+1}
  std::vector<int> position;     // position[v] = index of v in `order`
  std::vector<int> back_degree;  // back_degree[v] = neighbours of v earlier in the order

  int degeneracy() const {
    return back_degree.empty() ? 0 : *std::max_element(back_degree.begin(), back_degree.end());
  }
};

/// Peels a minimum-degree vertex off the remaining graph n times, filling the
/// order from the back. Ties go to the lowest index. O(n^2 + m).
inline DegeneracyOrdering degeneracy_ordering(const Graph& g) {
  const int n = g.order();
  DegeneracyOrdering out;
  out.order.assign(static_cast<std::size_t>(n), 0);
  out.position.assign(static_cast<std::size_t>(n), 0);
  out.back_degree.assign(static_cast<std::size_t>(n), 0);

  std::vector<int> remaining(static_cast<std::size_t>(n));
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  for (Vertex v = 0; v < n; ++v) remaining[v] = g.degree(v);

  for (int slot = n - 1; slot >= 0; --slot) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && (best < 0 || remaining[v] < remaining[best])) best = v;
    alive[best] = 0;
    out.order[slot] = best;
    out.position[best] = slot;
    out.back_degree[best] = remaining[best];
    for (Vertex w : g.neighbours(best))
      if (alive[w]) --remaining[w];
  }
  return out;
}

inline int degeneracy(const Graph& g) { return degeneracy_ordering(g).degeneracy(); }

/// A connected graph that is not regular has degeneracy at most Delta-1.
/// Returns the degeneracy after confirming that bound.
inline int check_non_regular_degeneracy(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::GraphDisconnected, "graph is not connected");
  if (g.is_regular()) throw Error(ErrorCode::GraphIsRegular, "graph is regular");
  const int d = degeneracy(g);
  if (d > g.max_degree() - 1)
    throw std::logic_error("connected non-regular graph with degeneracy equal to max degree");
  return d;
}

/// Partition of V into parts whose induced subgraphs have degeneracy at most
/// the matching budget.
struct DegeneratePartition {
  std::vector<std::vector<Vertex>> parts;
  std::vector<int> budgets;
  std::vector<int> part_of;
  /// Neighbours already in the chosen part when each vertex was inserted.
  /// Vertices moved by augmentation record 0.
  std::vector<int> witness;

  int parts_count() const { return static_cast<int>(parts.size()); }
};

/// Inserts vertices along a degeneracy ordering into the first part where
/// they have at most that part's budget of already-placed neighbours.
/// Requires sum(budgets) == k - r + 1 and G k-degenerate.
inline DegeneratePartition degenerate_partition(const Graph& g, int k, std::span<const int> budgets) {
  const int r = static_cast<int>(budgets.size());
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "at least one part is required");
  for (int p : budgets)
    if (p < 0) throw Error(ErrorCode::InvalidArgument, "budgets must be non-negative");
  const int sum = std::accumulate(budgets.begin(), budgets.end(), 0);
  if (sum != k - r + 1)
    throw Error(ErrorCode::BudgetSumMismatch, "budgets sum to " + std::to_string(sum) +
                                                  ", expected k - r + 1 = " +
                                                  std::to_string(k - r + 1));
  const auto ordering = degeneracy_ordering(g);
  if (ordering.degeneracy() > k)
    throw Error(ErrorCode::NotKDegenerate, "graph has degeneracy " +
                                               std::to_string(ordering.degeneracy()) + " > " +
                                               std::to_string(k));

  const int n = g.order();
  DegeneratePartition out;
  out.parts.resize(static_cast<std::size_t>(r));
  out.budgets.assign(budgets.begin(), budgets.end());
  out.part_of.assign(static_cast<std::size_t>(n), -1);
  out.witness.assign(static_cast<std::size_t>(n), 0);

  // placed_in[v * r + t]: neighbours of v already placed in part t
  std::vector<int> placed_in(static_cast<std::size_t>(n) * r, 0);
  for (Vertex v : ordering.order) {
    int part = -1;
    for (int t = 0; t < r && part < 0; ++t)
      if (placed_in[static_cast<std::size_t>(v) * r + t] <= budgets[t]) part = t;
    if (part < 0) throw std::logic_error("no part accepts vertex; degeneracy bound violated");
    out.part_of[v] = part;
    out.witness[v] = placed_in[static_cast<std::size_t>(v) * r + part];
    out.parts[part].push_back(v);
    for (Vertex w : g.neighbours(v)) ++placed_in[static_cast<std::size_t>(w) * r + part];
  }
  for (auto& p : out.parts) std::sort(p.begin(), p.end());
  return out;
}

/// Grows part 0 (an independent set) to a maximal independent set by moving
/// vertices with no neighbour in it, scanning vertices in ascending order.
inline DegeneratePartition augment_to_maximal_independent(const Graph& g,
                                                          DegeneratePartition partition) {
  if (partition.parts.empty()) throw Error(ErrorCode::InvalidArgument, "empty partition");
  const int n = g.order();
  for (Vertex v : partition.parts[0])
    for (Vertex w : g.neighbours(v))
      if (partition.part_of[w] == 0)
        throw Error(ErrorCode::PartNotIndependent,
                    "part 0 contains edge " + std::to_string(v) + "-" + std::to_string(w));

  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (Vertex v : partition.parts[0])
    for (Vertex w : g.neighbours(v)) ++hits[w];

  bool moved = false;
  for (Vertex v = 0; v < n; ++v) {
    if (partition.part_of[v] == 0 || hits[v] > 0) continue;
    partition.part_of[v] = 0;
    partition.witness[v] = 0;
    for (Vertex w : g.neighbours(v)) ++hits[w];
    moved = true;
  }
  if (moved) {
    for (auto& p : partition.parts) p.clear();
    for (Vertex v = 0; v < n; ++v) partition.parts[partition.part_of[v]].push_back(v);
  }
  return partition;
}

}  // namespace recolor
