#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "recolor/colouring.hpp"
#include "recolor/error.hpp"
#include "recolor/graph.hpp"
#include "recolor/sequence.hpp"

namespace recolor {

inline constexpr std::uint64_t kDefaultStateLimit = 2'000'000;

/// k^n, saturated just above `cap`.
inline std::uint64_t state_space(int n, int k, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > cap / static_cast<std::uint64_t>(std::max(k, 1))) return cap + 1;
    total *= static_cast<std::uint64_t>(k);
  }
  return total;
}

inline void require_state_space(int n, int k, std::uint64_t limit) {
  const auto states = state_space(n, k, limit);
  if (states > limit)
    throw Error(ErrorCode::StateSpaceExceedsLimit,
                std::to_string(k) + "^" + std::to_string(n) + " exceeds limit " +
                    std::to_string(limit));
}

/// All proper k-colourings in lexicographic order, by backtracking.
inline std::vector<Colouring> enumerate_colourings(const Graph& g, int k,
                                                   std::uint64_t limit = kDefaultStateLimit) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  require_state_space(g.order(), k, limit);
  const int n = g.order();
  std::vector<Colouring> out;
  std::vector<Colour> cur(static_cast<std::size_t>(n), 0);
  // Depth-first over vertices 0..n-1; only earlier neighbours constrain.
  auto fits = [&](Vertex v, Colour c) {
    for (Vertex w : g.neighbours(v))
      if (w < v && cur[w] == c) return false;
    return true;
  };
  Vertex v = 0;
  if (n == 0) {
    out.emplace_back(k, std::vector<Colour>{});
    return out;
  }
  while (v >= 0) {
    ++cur[v];
    while (cur[v] <= k && !fits(v, cur[v])) ++cur[v];
    if (cur[v] > k) {
      cur[v] = 0;
      --v;
      continue;
    }
    if (v == n - 1)
      out.emplace_back(k, cur);
    else
      ++v;
  }
  return out;
}

/// The reconfiguration graph R_k(G) over all proper k-colourings. Colourings
/// are interned as base-k integers (vertex 0 most significant), which keeps
/// the lexicographic order of the enumeration, and stored as flat bytes.
class ReconfigGraph {
 public:
  ReconfigGraph(const Graph& g, int k, std::uint64_t limit = kDefaultStateLimit)
      : graph_(g), k_(k), n_(g.order()) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
    if (k > 255) throw Error(ErrorCode::InvalidArgument, "k must be <= 255");
    require_state_space(n_, k, limit);
    enumerate();
    index_.assign(static_cast<std::size_t>(state_space(n_, k, limit)), -1);
    codes_.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      std::uint64_t code = 0;
      for (int v = 0; v < n_; ++v) code = code * static_cast<std::uint64_t>(k_) + (at(i, v) - 1u);
      codes_.push_back(code);
      index_[code] = static_cast<std::int32_t>(i);
    }
    mark_frozen();
    label_components();
  }

  const Graph& graph() const noexcept { return graph_; }
  int palette() const noexcept { return k_; }
  std::size_t size() const noexcept { return count_; }
  Colouring colouring(std::size_t i) const {
    const auto* p = &colours_[i * static_cast<std::size_t>(n_)];
    return Colouring(k_, std::vector<Colour>(p, p + n_));
  }
  Colour at(std::size_t i, Vertex v) const { return colours_[i * static_cast<std::size_t>(n_) + v]; }
  bool frozen(std::size_t i) const { return frozen_[i] != 0; }
  int component(std::size_t i) const { return component_[i]; }
  int component_count() const noexcept { return static_cast<int>(component_sizes_.size()); }
  int component_size(int c) const { return component_sizes_[c]; }

  std::optional<std::size_t> find(const Colouring& c) const {
    if (c.palette() != k_ || c.order() != n_) return std::nullopt;
    std::uint64_t code = 0;
    for (Colour x : c.values()) code = code * static_cast<std::uint64_t>(k_) + static_cast<std::uint64_t>(x - 1);
    const auto idx = index_[code];
    if (idx < 0) return std::nullopt;
    return static_cast<std::size_t>(idx);
  }

  std::size_t index_of(const Colouring& c) const {
    auto i = find(c);
    if (!i) throw Error(ErrorCode::ImproperColouring, "colouring is not a proper " +
                                                          std::to_string(k_) + "-colouring");
    return *i;
  }

  /// Colourings differing from colouring i on exactly one vertex.
  template <typename Fn>
  void for_each_neighbour(std::size_t i, Fn&& fn) const {
    const auto* c = &colours_[i * static_cast<std::size_t>(n_)];
    const auto code = codes_[i];
    std::uint64_t weight = 1;
    for (Vertex v = n_ - 1; v >= 0; --v, weight *= static_cast<std::uint64_t>(k_)) {
      std::uint64_t blocked = std::uint64_t{1} << c[v];
      for (Vertex w : graph_.neighbours(v)) blocked |= std::uint64_t{1} << c[w];
      for (Colour x = 1; x <= k_; ++x) {
        if (blocked >> x & 1) continue;
        const auto next = code + static_cast<std::uint64_t>(x) * weight -
                          static_cast<std::uint64_t>(c[v]) * weight;
        fn(static_cast<std::size_t>(index_[next]));
      }
    }
  }

  std::vector<std::size_t> neighbours(std::size_t i) const {
    std::vector<std::size_t> out;
    for_each_neighbour(i, [&](std::size_t j) { out.push_back(j); });
    std::sort(out.begin(), out.end());
    return out;
  }

  /// BFS distances from a set of sources; -1 where unreachable.
  std::vector<int> distances_from(const std::vector<std::size_t>& sources) const {
    std::vector<int> dist(size(), -1);
    std::vector<std::size_t> queue;
    queue.reserve(size());
    for (auto s : sources)
      if (dist[s] < 0) {
        dist[s] = 0;
        queue.push_back(s);
      }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto u = queue[head];
      for_each_neighbour(u, [&](std::size_t w) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      });
    }
    return dist;
  }

  /// Diameter of component c, by BFS from each of its members.
  int component_diameter(int c) const {
    int diameter = 0;
    std::vector<int> dist(size(), -1);
    std::vector<std::size_t> queue;
    for (std::size_t s = 0; s < size(); ++s) {
      if (component_[s] != c) continue;
      for (auto touched : queue) dist[touched] = -1;
      queue.assign(1, s);
      dist[s] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto u = queue[head];
        diameter = std::max(diameter, dist[u]);
        for_each_neighbour(u, [&](std::size_t w) {
          if (dist[w] < 0) {
            dist[w] = dist[u] + 1;
            queue.push_back(w);
          }
        });
      }
    }
    return diameter;
  }

 private:
  void enumerate() {
    if (n_ == 0) {
      count_ = 1;
      return;
    }
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(n_), 0);
    Vertex v = 0;
    while (v >= 0) {
      bool placed = false;
      while (!placed && ++cur[v] <= k_) {
        placed = true;
        for (Vertex w : graph_.neighbours(v))
          if (w < v && cur[w] == cur[v]) {
            placed = false;
            break;
          }
      }
      if (!placed) {
        cur[v] = 0;
        --v;
        continue;
      }
      if (v == n_ - 1) {
        colours_.insert(colours_.end(), cur.begin(), cur.end());
        ++count_;
      } else {
        ++v;
      }
    }
  }

  void mark_frozen() {
    frozen_.assign(size(), 0);
    const std::uint64_t all = ((std::uint64_t{1} << k_) - 1) << 1;
    for (std::size_t i = 0; i < size(); ++i) {
      const auto* c = &colours_[i * static_cast<std::size_t>(n_)];
      bool frozen = true;
      for (Vertex v = 0; v < n_ && frozen; ++v) {
        std::uint64_t seen = std::uint64_t{1} << c[v];
        for (Vertex w : graph_.neighbours(v)) seen |= std::uint64_t{1} << c[w];
        frozen = seen == all;
      }
      frozen_[i] = frozen;
    }
  }

  void label_components() {
    component_.assign(size(), -1);
    std::vector<std::size_t> queue;
    for (std::size_t s = 0; s < size(); ++s) {
      if (component_[s] >= 0) continue;
      const int label = static_cast<int>(component_sizes_.size());
      component_[s] = label;
      queue.assign(1, s);
      for (std::size_t head = 0; head < queue.size(); ++head)
        for_each_neighbour(queue[head], [&](std::size_t w) {
          if (component_[w] < 0) {
            component_[w] = label;
            queue.push_back(w);
          }
        });
      component_sizes_.push_back(static_cast<int>(queue.size()));
    }
  }

  Graph graph_;
  int k_;
  int n_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> colours_;
  std::vector<std::uint64_t> codes_;
  std::vector<std::int32_t> index_;
  std::vector<char> frozen_;
  std::vector<int> component_;
  std::vector<int> component_sizes_;
};

struct ComponentInfo {
  int size = 0;
  int diameter = 0;  // -1 when not computed
};

struct ReconfigGraphSummary {
  std::size_t total_colourings = 0;
  std::vector<ComponentInfo> components;  // in order of least member colouring
  int frozen_count = 0;
  int isolated_non_frozen = 0;

  int nontrivial_components() const {
    return static_cast<int>(std::count_if(components.begin(), components.end(),
                                          [](const ComponentInfo& c) { return c.size >= 2; }));
  }
};

inline ReconfigGraphSummary summarize(const ReconfigGraph& r, bool with_diameters = true) {
  ReconfigGraphSummary s;
  s.total_colourings = r.size();
  for (int c = 0; c < r.component_count(); ++c)
    s.components.push_back({r.component_size(c), with_diameters ? r.component_diameter(c) : -1});
  for (std::size_t i = 0; i < r.size(); ++i) {
    const bool frozen = r.frozen(i);
    const bool isolated = r.component_size(r.component(i)) == 1;
    if (frozen) ++s.frozen_count;
    if (isolated && !frozen) ++s.isolated_non_frozen;
  }
  return s;
}

inline ReconfigGraphSummary build_reconfig_graph(const Graph& g, int k,
                                                 std::uint64_t limit = kDefaultStateLimit,
                                                 bool with_diameters = true) {
  return summarize(ReconfigGraph(g, k, limit), with_diameters);
}

inline nlohmann::json to_json(const ReconfigGraphSummary& s) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : s.components) {
    nlohmann::json item{{"size", c.size}};
    item["diameter"] = c.diameter >= 0 ? nlohmann::json(c.diameter) : nlohmann::json(nullptr);
    comps.push_back(std::move(item));
  }
  return {{"totalColourings", s.total_colourings},
          {"components", std::move(comps)},
          {"frozenCount", s.frozen_count},
          {"isolatedNonFrozen", s.isolated_non_frozen}};
}

/// Shortest-path distance in R_k(G), or nullopt when a and b lie in different
/// components.
inline std::optional<int> oracle_distance(const Graph& g, int k, const Colouring& a,
                                          const Colouring& b,
                                          std::uint64_t limit = kDefaultStateLimit) {
  require_proper(g, a);
  require_proper(g, b);
  if (a.values().size() == b.values().size() &&
      std::equal(a.values().begin(), a.values().end(), b.values().begin()))
    return 0;
  ReconfigGraph r(g, k, limit);
  const auto ia = r.index_of(a.with_palette(k));
  const auto ib = r.index_of(b.with_palette(k));
  if (r.component(ia) != r.component(ib)) return std::nullopt;
  const int d = r.distances_from({ia})[ib];
  return d;
}

/// A shortest walk from colouring `from` to colouring `to` in R_k(G), or
/// nullopt when they lie in different components.
inline std::optional<RecolouringSequence> shortest_walk(const ReconfigGraph& r, std::size_t from,
                                                         std::size_t to) {
  if (r.component(from) != r.component(to)) return std::nullopt;
  const auto dist = r.distances_from({to});
  RecolouringSequence out;
  const int n = r.graph().order();
  for (std::size_t cur = from; cur != to;) {
    std::size_t next = cur;
    r.for_each_neighbour(cur, [&](std::size_t w) {
      if (next == cur && dist[w] == dist[cur] - 1) next = w;
    });
    for (Vertex v = 0; v < n; ++v)
      if (r.at(cur, v) != r.at(next, v)) out.push_back(v, r.at(next, v));
    cur = next;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive checks of the structural statements

struct VerifyReport {
  std::string check;
  bool skipped = false;
  std::string skip_reason;
  bool passed = true;
  std::size_t instances = 0;     // colourings (or colouring/path pairs) examined
  int max_distance = 0;
  double max_ratio = 0.0;        // max_distance / n (or n^2, per check)
  std::vector<std::string> counterexamples;
  std::vector<std::string> witnesses;

  static VerifyReport skip(std::string check, std::string reason) {
    VerifyReport r;
    r.check = std::move(check);
    r.skipped = true;
    r.skip_reason = std::move(reason);
    return r;
  }
};

inline nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json j{{"check", r.check}, {"skipped", r.skipped}, {"passed", r.passed},
                   {"instances", r.instances}, {"maxDistance", r.max_distance},
                   {"maxRatio", r.max_ratio}, {"counterexamples", r.counterexamples}};
  if (r.skipped) j["skipReason"] = r.skip_reason;
  if (!r.witnesses.empty()) j["witnesses"] = r.witnesses;
  return j;
}

/// For k = Delta+1: every non-frozen colouring reaches one that avoids colour
/// Delta+1. max_ratio is max distance / n^2.
inline std::optional<VerifyReport> theorem_delta_plus_one_skip(const Graph& g) {
  const char* name = "reach-delta-colouring";
  if (g.order() == 0 || !is_connected(g)) return VerifyReport::skip(name, "graph not connected");
  if (is_complete(g)) return VerifyReport::skip(name, "complete graph");
  if (is_cycle(g) && g.order() % 2 == 1) return VerifyReport::skip(name, "odd cycle");
  if (g.max_degree() < 1) return VerifyReport::skip(name, "max degree 0");
  return std::nullopt;
}

/// Same check on an already enumerated R_{Delta+1}(G).
inline VerifyReport verify_theorem_delta_plus_one(const ReconfigGraph& r) {
  const char* name = "reach-delta-colouring";
  const Graph& g = r.graph();
  if (auto skip = theorem_delta_plus_one_skip(g)) return *skip;
  const int k = g.max_degree() + 1;
  if (r.palette() != k) return VerifyReport::skip(name, "palette is not max degree + 1");
  std::vector<std::size_t> targets;
  for (std::size_t i = 0; i < r.size(); ++i) {
    bool uses_top = false;
    for (Vertex v = 0; v < g.order() && !uses_top; ++v) uses_top = r.at(i, v) == k;
    if (!uses_top) targets.push_back(i);
  }
  const auto dist = r.distances_from(targets);

  VerifyReport rep;
  rep.check = name;
  const double n2 = static_cast<double>(g.order()) * g.order();
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.frozen(i)) continue;
    ++rep.instances;
    if (dist[i] < 0) {
      rep.passed = false;
      if (rep.counterexamples.size() < 10) rep.counterexamples.push_back(to_string(r.colouring(i)));
      continue;
    }
    rep.max_distance = std::max(rep.max_distance, dist[i]);
  }
  rep.max_ratio = rep.max_distance / n2;
  return rep;
}

inline VerifyReport verify_theorem_delta_plus_one(const Graph& g,
                                                  std::uint64_t limit = kDefaultStateLimit) {
  if (auto skip = theorem_delta_plus_one_skip(g)) return *skip;
  const int k = g.max_degree() + 1;
  if (state_space(g.order(), k, limit) > limit)
    return VerifyReport::skip("reach-delta-colouring", "state space exceeds limit");
  return verify_theorem_delta_plus_one(ReconfigGraph(g, k, limit));
}

/// For k = Delta+1, Delta >= 3: isolated colourings are exactly the frozen
/// ones and at most one component has two or more colourings. With
/// `with_diameter`, max_distance is that component's diameter and max_ratio
/// is diameter / n^2.
inline VerifyReport verify_theorem_main(const ReconfigGraph& r, bool with_diameter = false) {
  const char* name = "frozen-structure";
  const Graph& g = r.graph();
  if (g.order() == 0 || !is_connected(g)) return VerifyReport::skip(name, "graph not connected");
  if (g.max_degree() < 3) return VerifyReport::skip(name, "max degree below 3");
  const int k = g.max_degree() + 1;
  if (r.palette() != k) return VerifyReport::skip(name, "palette is not max degree + 1");
  VerifyReport rep;
  rep.check = name;
  rep.instances = r.size();
  int big = -1;
  for (int c = 0; c < r.component_count(); ++c) {
    if (r.component_size(c) < 2) continue;
    if (big >= 0) {
      rep.passed = false;
      rep.counterexamples.push_back("second component of size " +
                                    std::to_string(r.component_size(c)));
    }
    big = c;
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    const bool isolated = r.component_size(r.component(i)) == 1;
    const bool frozen = r.frozen(i);
    if (isolated != frozen) {
      rep.passed = false;
      if (rep.counterexamples.size() < 10)
        rep.counterexamples.push_back((isolated ? "isolated non-frozen " : "frozen non-isolated ") +
                                      to_string(r.colouring(i)));
    }
  }
  if (with_diameter && big >= 0) {
    rep.max_distance = r.component_diameter(big);
    rep.max_ratio = rep.max_distance / (static_cast<double>(g.order()) * g.order());
  }
  return rep;
}

inline VerifyReport verify_theorem_main(const Graph& g, std::uint64_t limit = kDefaultStateLimit,
                                        bool with_diameter = false) {
  const char* name = "frozen-structure";
  if (g.order() == 0 || !is_connected(g)) return VerifyReport::skip(name, "graph not connected");
  if (g.max_degree() < 3) return VerifyReport::skip(name, "max degree below 3");
  const int k = g.max_degree() + 1;
  if (state_space(g.order(), k, limit) > limit)
    return VerifyReport::skip(name, "state space exceeds limit");
  return verify_theorem_main(ReconfigGraph(g, k, limit), with_diameter);
}

/// Reduced-form colourings with at least two vertices coloured Delta+1 that
/// are not frozen reach a colouring with fewer such vertices. max_ratio is
/// max distance / n.
inline VerifyReport verify_lemma_fewer_top(const ReconfigGraph& r) {
  const char* name = "reduce-top-count";
  const Graph& g = r.graph();
  if (g.order() == 0 || !is_connected(g)) return VerifyReport::skip(name, "graph not connected");
  if (g.max_degree() < 3) return VerifyReport::skip(name, "max degree below 3");
  const int k = g.max_degree() + 1;
  if (r.palette() != k) return VerifyReport::skip(name, "palette is not max degree + 1");
  VerifyReport rep;
  rep.check = name;
  std::vector<int> top_count(r.size());
  int most = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (Vertex v = 0; v < g.order(); ++v) top_count[i] += r.at(i, v) == k;
    most = std::max(most, top_count[i]);
  }
  // dist_below[t][i]: distance from i to any colouring with fewer than t top-coloured vertices
  for (int t = 2; t <= most; ++t) {
    std::vector<std::size_t> qualifying;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (top_count[i] == t && !r.frozen(i) && is_reduced_form(g, r.colouring(i)))
        qualifying.push_back(i);
    if (qualifying.empty()) continue;
    std::vector<std::size_t> sources;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (top_count[i] < t) sources.push_back(i);
    const auto dist = r.distances_from(sources);
    for (auto i : qualifying) {
      ++rep.instances;
      if (dist[i] < 0) {
        rep.passed = false;
        if (rep.counterexamples.size() < 10) rep.counterexamples.push_back(to_string(r.colouring(i)));
        continue;
      }
      if (dist[i] > rep.max_distance && rep.witnesses.size() < 10)
        rep.witnesses.push_back(to_string(r.colouring(i)) + " d=" + std::to_string(dist[i]));
      rep.max_distance = std::max(rep.max_distance, dist[i]);
    }
  }
  rep.max_ratio = g.order() ? static_cast<double>(rep.max_distance) / g.order() : 0.0;
  return rep;
}

inline VerifyReport verify_lemma_fewer_top(const Graph& g, std::uint64_t limit = kDefaultStateLimit) {
  const char* name = "reduce-top-count";
  if (g.order() == 0 || !is_connected(g)) return VerifyReport::skip(name, "graph not connected");
  if (g.max_degree() < 3) return VerifyReport::skip(name, "max degree below 3");
  const int k = g.max_degree() + 1;
  if (state_space(g.order(), k, limit) > limit)
    return VerifyReport::skip(name, "state space exceeds limit");
  return verify_lemma_fewer_top(ReconfigGraph(g, k, limit));
}

/// Endpoints of fully locked paths between top-coloured vertices, under c.
inline std::vector<Vertex> locked_path_endpoints(const Graph& g, const Colouring& c) {
  const Colour top = g.max_degree() + 1;
  const int n = g.order();
  std::vector<char> locked(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) locked[v] = is_locked(g, c, v);
  // Two top-coloured locked vertices joined through locked vertices lie in the
  // same component of the subgraph induced by locked vertices.
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int label = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (!locked[s] || comp[s] >= 0) continue;
    std::vector<Vertex> queue{s};
    comp[s] = label;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (Vertex w : g.neighbours(queue[head]))
        if (locked[w] && comp[w] < 0) {
          comp[w] = label;
          queue.push_back(w);
        }
    ++label;
  }
  std::vector<int> tops_in(static_cast<std::size_t>(label), 0);
  for (Vertex v = 0; v < n; ++v)
    if (locked[v] && c[v] == top) ++tops_in[comp[v]];
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (locked[v] && c[v] == top && tops_in[comp[v]] >= 2) out.push_back(v);
  return out;
}

/// A fully locked path with three edges starting at v, if any.
inline std::optional<std::vector<Vertex>> locked_path_of_length_three(const Graph& g,
                                                                      const Colouring& c,
                                                                      Vertex v) {
  const Colour top = g.max_degree() + 1;
  if (c[v] != top || !is_locked(g, c, v)) return std::nullopt;
  for (Vertex a : g.neighbours(v)) {
    if (!is_locked(g, c, a)) continue;
    for (Vertex b : g.neighbours(a)) {
      if (b == v || !is_locked(g, c, b)) continue;
      for (Vertex w : g.neighbours(b))
        if (w != v && w != a && c[w] == top && is_locked(g, c, w))
          return std::vector<Vertex>{v, a, b, w};
    }
  }
  return std::nullopt;
}

/// In reduced form, every endvertex of a fully locked path also ends a fully
/// locked path of length three.
inline VerifyReport verify_lemma_locked_paths(const ReconfigGraph& r) {
  const char* name = "locked-path-length-three";
  const Graph& g = r.graph();
  if (g.order() == 0) return VerifyReport::skip(name, "empty graph");
  const int k = g.max_degree() + 1;
  if (r.palette() != k) return VerifyReport::skip(name, "palette is not max degree + 1");
  VerifyReport rep;
  rep.check = name;
  for (std::size_t i = 0; i < r.size(); ++i) {
    bool uses_top = false;
    for (Vertex v = 0; v < g.order() && !uses_top; ++v) uses_top = r.at(i, v) == k;
    if (!uses_top) continue;
    const auto c = r.colouring(i);
    if (!is_reduced_form(g, c)) continue;
    for (Vertex v : locked_path_endpoints(g, c)) {
      ++rep.instances;
      auto path = locked_path_of_length_three(g, c, v);
      if (!path) {
        rep.passed = false;
        if (rep.counterexamples.size() < 10)
          rep.counterexamples.push_back(to_string(c) + " endpoint " + std::to_string(v));
      } else if (rep.witnesses.size() < 5) {
        std::string w = to_string(c) + " path";
        for (Vertex x : *path) w += " " + std::to_string(x);
        rep.witnesses.push_back(std::move(w));
      }
    }
  }
  return rep;
}

inline VerifyReport verify_lemma_locked_paths(const Graph& g,
                                              std::uint64_t limit = kDefaultStateLimit) {
  const char* name = "locked-path-length-three";
  if (g.order() == 0) return VerifyReport::skip(name, "empty graph");
  const int k = g.max_degree() + 1;
  if (state_space(g.order(), k, limit) > limit)
    return VerifyReport::skip(name, "state space exceeds limit");
  return verify_lemma_locked_paths(ReconfigGraph(g, k, limit));
}

}  // namespace recolor
