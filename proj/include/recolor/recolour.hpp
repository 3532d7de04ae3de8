#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "recolor/colouring.hpp"
#include "recolor/degeneracy.hpp"
#include "recolor/error.hpp"
#include "recolor/graph.hpp"
#include "recolor/sequence.hpp"

namespace recolor {

// ---------------------------------------------------------------------------
// Kempe swap through the scratch colour

/// Connected component of the subgraph induced by colours `first` and
/// `second`, containing some anchor vertex.
struct KempeComponent {
  Colour first = 1;
  Colour second = 2;
  std::vector<Vertex> vertices;  // sorted
};

inline KempeComponent kempe_component(const Graph& g, const Colouring& c, Vertex anchor,
                                      Colour first, Colour second) {
  check_size(g, c);
  KempeComponent comp{first, second, {}};
  if (c[anchor] != first && c[anchor] != second) return comp;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  comp.vertices.push_back(anchor);
  seen[anchor] = 1;
  for (std::size_t head = 0; head < comp.vertices.size(); ++head)
    for (Vertex w : g.neighbours(comp.vertices[head]))
      if (!seen[w] && (c[w] == first || c[w] == second)) {
        seen[w] = 1;
        comp.vertices.push_back(w);
      }
  std::sort(comp.vertices.begin(), comp.vertices.end());
  return comp;
}

/// Exchanges `first` and `second` on `comp` in three single-vertex phases:
/// second -> scratch, first -> second, scratch -> first. The scratch colour is
/// the top palette colour and must not touch any `second`-coloured vertex of
/// the component.
inline RecolouringSequence kempe_swap_via_scratch(const Graph& g, const Colouring& c,
                                                  const KempeComponent& comp) {
  check_size(g, c);
  const Colour scratch = c.palette();
  const Colour i = comp.first;
  const Colour j = comp.second;
  if (comp.vertices.empty()) return {};
  if (i == j || i < 1 || j < 1 || i > scratch || j > scratch)
    throw Error(ErrorCode::InvalidArgument, "component colours must be distinct palette colours");
  if (i == scratch || j == scratch)
    throw Error(ErrorCode::ScratchColourInUse, "component uses the scratch colour");

  std::vector<char> in_comp(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : comp.vertices) {
    if (v < 0 || v >= g.order()) throw Error(ErrorCode::VertexOutOfRange, std::to_string(v));
    if (c[v] != i && c[v] != j)
      throw Error(ErrorCode::InvalidArgument,
                  "vertex " + std::to_string(v) + " is not coloured " + std::to_string(i) +
                      " or " + std::to_string(j));
    in_comp[v] = 1;
  }
  if (kempe_component(g, c, comp.vertices.front(), i, j).vertices != comp.vertices)
    throw Error(ErrorCode::ComponentNotMaximal,
                "vertices are not a maximal connected two-coloured component");

  std::vector<Vertex> firsts, seconds;
  for (Vertex v : comp.vertices) (c[v] == i ? firsts : seconds).push_back(v);
  for (Vertex v : seconds)
    for (Vertex w : g.neighbours(v))
      if (c[w] == scratch)
        throw Error(ErrorCode::ScratchColourInUse,
                    "vertex " + std::to_string(v) + " has a neighbour coloured " +
                        std::to_string(scratch));

  RecolouringSequence seq;
  for (Vertex v : seconds) seq.push_back(v, scratch);
  for (Vertex v : firsts) seq.push_back(v, j);
  for (Vertex v : seconds) seq.push_back(v, i);
  return seq;
}

// ---------------------------------------------------------------------------
// Eliminating the top colour on graphs of low degeneracy

/// One elimination round: walk from the earliest top-coloured vertex v_h
/// through latest-in-order neighbours until a vertex with a missing colour is
/// found. The pairs are applied last to first.
struct EliminationPlan {
  int h = 0;  // position of the first top-coloured vertex in the ordering
  std::vector<std::pair<Vertex, Colour>> pairs;
};

struct EliminationResult {
  RecolouringSequence sequence;
  Colouring colouring;
  std::vector<EliminationPlan> rounds;
};

/// Removes the top palette colour k from a proper k-colouring of a graph with
/// maximum degree at most k-1 and degeneracy at most k-2. Each round recolours
/// every vertex at most once and none before v_h, so there are at most n
/// rounds and at most n^2 steps.
inline EliminationResult eliminate_top_colour(const Graph& g, const Colouring& c) {
  require_proper(g, c);
  const Colour top = c.palette();
  const int delta = top - 1;
  if (g.max_degree() > delta)
    throw Error(ErrorCode::PaletteTooSmall, "palette " + std::to_string(top) +
                                                " is below max degree + 1 = " +
                                                std::to_string(g.max_degree() + 1));
  EliminationResult out{{}, c, {}};
  if (!c.uses(top)) return out;

  const auto ordering = degeneracy_ordering(g);
  if (ordering.degeneracy() > delta - 1)
    throw Error(ErrorCode::DegeneracyTooHigh, "degeneracy " +
                                                  std::to_string(ordering.degeneracy()) +
                                                  " exceeds " + std::to_string(delta - 1));

  const int n = g.order();
  std::vector<Colour> cur(c.values().begin(), c.values().end());
  std::vector<char> used(static_cast<std::size_t>(top) + 1, 0);

  for (int h = 0; h < n; ++h) {
    if (cur[ordering.order[h]] != top) continue;
    EliminationPlan plan;
    plan.h = h;
    Vertex w = ordering.order[h];
    while (true) {
      std::fill(used.begin(), used.end(), 0);
      used[cur[w]] = 1;
      Vertex latest = -1;
      for (Vertex x : g.neighbours(w)) {
        used[cur[x]] = 1;
        if (latest < 0 || ordering.position[x] > ordering.position[latest]) latest = x;
      }
      Colour missing = 0;
      for (Colour x = 1; x <= top && !missing; ++x)
        if (!used[x]) missing = x;
      if (missing) {
        plan.pairs.emplace_back(w, missing);
        break;
      }
      // All top colours appear around w, so w has degree delta with distinct
      // neighbour colours and at least one neighbour later in the ordering.
      if (latest < 0 || ordering.position[latest] <= ordering.position[w])
        throw std::logic_error("elimination walk failed to advance");
      plan.pairs.emplace_back(w, cur[latest]);
      w = latest;
    }
    for (auto it = plan.pairs.rbegin(); it != plan.pairs.rend(); ++it) {
      cur[it->first] = it->second;
      out.sequence.push_back(it->first, it->second);
    }
    out.rounds.push_back(std::move(plan));
  }
  out.colouring = Colouring(top, std::move(cur));
  return out;
}

// ---------------------------------------------------------------------------
// Paths between colourings that avoid the top colour

namespace detail {

inline std::vector<Colour> restrict_to(std::span<const Colour> values,
                                       std::span<const Vertex> vertices) {
  std::vector<Colour> out;
  out.reserve(vertices.size());
  for (Vertex v : vertices) out.push_back(values[v]);
  return out;
}

inline void append_mapped(RecolouringSequence& out, const RecolouringSequence& seq,
                          std::span<const Vertex> to_parent) {
  for (const auto& s : seq) out.push_back(to_parent[s.vertex], s.colour);
}

/// Walk from `from` to `to` (both using colours 1..bound only) in which no
/// colour exceeds bound+1. Requires max degree <= bound and degeneracy
/// <= bound-1.
inline RecolouringSequence delta_path(const Graph& g, int bound, const std::vector<Colour>& from,
                                      const std::vector<Colour>& to) {
  if (from == to) return {};
  if (bound <= 1)
    throw std::logic_error("distinct colourings with a single colour");

  const Colour scratch = bound + 1;
  const int budgets[] = {0, bound - 2};
  auto partition = augment_to_maximal_independent(g, degenerate_partition(g, bound - 1, budgets));
  const auto& independent = partition.parts[0];
  const auto& rest = partition.parts[1];

  // Every vertex of `rest` now has a neighbour in `independent`, so the
  // remaining subgraph has max degree <= bound-1 and degeneracy <= bound-2.
  RecolouringSequence to_scratch_from, to_scratch_to;
  for (Vertex v : independent) {
    to_scratch_from.push_back(v, scratch);
    to_scratch_to.push_back(v, scratch);
  }

  const auto sub = induced_subgraph(g, rest);
  const Colouring from_rest(bound, restrict_to(from, rest));
  const Colouring to_rest(bound, restrict_to(to, rest));
  const auto elim_from = eliminate_top_colour(sub.graph, from_rest);
  const auto elim_to = eliminate_top_colour(sub.graph, to_rest);

  const auto as_vector = [](const Colouring& c) {
    return std::vector<Colour>(c.values().begin(), c.values().end());
  };
  const auto middle = delta_path(sub.graph, bound - 1, as_vector(elim_from.colouring),
                                 as_vector(elim_to.colouring));

  RecolouringSequence out = to_scratch_from;
  append_mapped(out, elim_from.sequence, sub.to_parent);
  append_mapped(out, middle, sub.to_parent);
  append_mapped(out, reverse_sequence(to_rest, elim_to.sequence), sub.to_parent);
  out.append(reverse_sequence(Colouring(scratch, to), to_scratch_to));
  return out;
}

}  // namespace detail

/// Walk in R_{Delta+1}(G) between two colourings that use only 1..Delta, where
/// Delta = palette - 1. G must have max degree <= Delta and degeneracy
/// <= Delta-1. Recurses on the graph left after pushing a maximal independent
/// set onto the scratch colour.
inline RecolouringSequence path_between_delta_colourings(const Graph& g, const Colouring& from,
                                                         const Colouring& to) {
  if (from.palette() != to.palette())
    throw Error(ErrorCode::InvalidArgument, "colourings use different palettes");
  require_proper(g, from, "first colouring");
  require_proper(g, to, "second colouring");
  const int delta = from.palette() - 1;
  if (from.uses(delta + 1) || to.uses(delta + 1))
    throw Error(ErrorCode::NotDeltaColouring, "colouring uses colour " + std::to_string(delta + 1));
  if (g.max_degree() > delta)
    throw Error(ErrorCode::PaletteTooSmall, "max degree exceeds palette - 1");
  if (from == to) return {};
  if (degeneracy(g) > delta - 1)
    throw Error(ErrorCode::DegeneracyTooHigh, "degeneracy exceeds " + std::to_string(delta - 1));
  return detail::delta_path(g, delta,
                            std::vector<Colour>(from.values().begin(), from.values().end()),
                            std::vector<Colour>(to.values().begin(), to.values().end()));
}

/// Walk between two (Delta+1)-colourings of a connected non-regular graph with
/// Delta >= 3: remove the top colour from both ends, then join the two
/// Delta-colourings.
inline RecolouringSequence find_path_non_regular(const Graph& g, const Colouring& a,
                                                 const Colouring& b) {
  if (!is_connected(g)) throw Error(ErrorCode::GraphDisconnected, "graph is not connected");
  if (g.max_degree() < 3)
    throw Error(ErrorCode::MaxDegreeTooSmall,
                "max degree " + std::to_string(g.max_degree()) + " < 3");
  if (g.is_regular()) throw Error(ErrorCode::GraphIsRegular, "graph is regular");
  const int k = g.max_degree() + 1;
  if (a.palette() != k || b.palette() != k)
    throw Error(ErrorCode::InvalidArgument, "colourings must use palette " + std::to_string(k));
  require_proper(g, a, "first colouring");
  require_proper(g, b, "second colouring");
  if (a == b) return {};

  const auto from_a = eliminate_top_colour(g, a);
  const auto from_b = eliminate_top_colour(g, b);
  RecolouringSequence out = from_a.sequence;
  out.append(path_between_delta_colourings(g, from_a.colouring, from_b.colouring));
  out.append(reverse_sequence(b, from_b.sequence));
  return out;
}

}  // namespace recolor
