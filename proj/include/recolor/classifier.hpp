#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "recolor/colouring.hpp"
#include "recolor/error.hpp"
#include "recolor/explorer.hpp"
#include "recolor/graph.hpp"

namespace recolor {

enum class Answer { Yes, No, Inconclusive };

enum class DecisionReason {
  TrivialYes,     // Delta <= k-2, or a path with k = 3
  BothNonFrozen,  // Delta = k-1, k >= 4: neither colouring frozen
  FrozenEqual,    // a frozen colouring compared with itself
  FrozenDistinct, // a frozen colouring is isolated
  WindingNumber,  // k = 3 on a cycle: compare winding numbers
  OracleResult,   // answered by exhaustive search
  Inconclusive,   // hard regime and state space over the limit
};

inline std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

inline std::string_view to_string(DecisionReason r) {
  switch (r) {
    case DecisionReason::TrivialYes: return "TrivialYes";
    case DecisionReason::BothNonFrozen: return "BothNonFrozen";
    case DecisionReason::FrozenEqual: return "FrozenEqual";
    case DecisionReason::FrozenDistinct: return "FrozenDistinct";
    case DecisionReason::WindingNumber: return "WindingNumber";
    case DecisionReason::OracleResult: return "OracleResult";
    case DecisionReason::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

struct PathDecision {
  Answer answer = Answer::Inconclusive;
  DecisionReason reason = DecisionReason::Inconclusive;
  bool first_frozen = false;
  bool second_frozen = false;
  /// Vertices whose closed neighbourhood shows every colour, for a frozen side.
  std::vector<Vertex> frozen_witnesses;
};

inline nlohmann::json to_json(const PathDecision& d) {
  return {{"answer", std::string(to_string(d.answer))},
          {"reason", std::string(to_string(d.reason))},
          {"firstFrozen", d.first_frozen},
          {"secondFrozen", d.second_frozen},
          {"frozenWitnesses", d.frozen_witnesses}};
}

/// Sum over the cycle's edges, in traversal order, of +1 when the colour steps
/// up by one mod 3 and -1 when it steps down. Invariant under recolouring.
inline int winding_sum(const Graph& cycle, const Colouring& c) {
  int sum = 0;
  Vertex prev = -1;
  Vertex cur = 0;
  for (int i = 0; i < cycle.order(); ++i) {
    const auto nb = cycle.neighbours(cur);
    const Vertex next = (nb[0] != prev) ? nb[0] : nb[1];
    sum += ((c[next] - c[cur] + 3) % 3 == 1) ? 1 : -1;
    prev = cur;
    cur = next;
  }
  return sum;
}

namespace detail {

inline PathDecision decide_connected(const Graph& g, int k, const Colouring& a, const Colouring& b,
                                     std::uint64_t limit, const ReconfigGraph* oracle) {
  const int delta = g.max_degree();
  PathDecision d;
  const auto by_frozen = [&](PathDecision out) {
    out.first_frozen = is_frozen(g, a);
    out.second_frozen = is_frozen(g, b);
    if (out.first_frozen || out.second_frozen) {
      const bool same = a == b;
      out.answer = same ? Answer::Yes : Answer::No;
      out.reason = same ? DecisionReason::FrozenEqual : DecisionReason::FrozenDistinct;
      if (out.first_frozen)
        for (Vertex v = 0; v < g.order(); ++v) out.frozen_witnesses.push_back(v);
      return std::make_pair(true, out);
    }
    return std::make_pair(false, out);
  };

  if (delta <= k - 2) {
    d.answer = Answer::Yes;
    d.reason = DecisionReason::TrivialYes;
    return d;
  }
  if (k <= 2) {
    // Connected bipartite graph with an edge: both 2-colourings are frozen.
    return by_frozen(d).second;
  }
  if (delta == k - 1 && k >= 4) {
    auto [decided, out] = by_frozen(d);
    if (decided) return out;
    out.answer = Answer::Yes;
    out.reason = DecisionReason::BothNonFrozen;
    return out;
  }
  if (k == 3 && delta == 2) {
    if (!g.is_regular()) {
      d.answer = Answer::Yes;
      d.reason = DecisionReason::TrivialYes;
      return d;
    }
    auto [decided, out] = by_frozen(d);
    if (decided) return out;
    out.answer = winding_sum(g, a) == winding_sum(g, b) ? Answer::Yes : Answer::No;
    out.reason = DecisionReason::WindingNumber;
    return out;
  }
  if (oracle == nullptr && state_space(g.order(), k, limit) > limit) {
    d.answer = Answer::Inconclusive;
    d.reason = DecisionReason::Inconclusive;
    return d;
  }
  std::optional<ReconfigGraph> built;
  if (oracle == nullptr) oracle = &built.emplace(g, k, limit);
  const auto& r = *oracle;
  d.answer = r.component(r.index_of(a)) == r.component(r.index_of(b)) ? Answer::Yes : Answer::No;
  d.reason = DecisionReason::OracleResult;
  d.first_frozen = is_frozen(g, a);
  d.second_frozen = is_frozen(g, b);
  return d;
}

}  // namespace detail

/// Is there a walk in R_k(G) from a to b? Disconnected graphs are decided
/// component by component; the answer is yes only if every component says yes.
/// `oracle`, when given, must be R_k(G) and replaces enumeration on connected
/// graphs.
inline PathDecision decide_k_colour_path(const Graph& g, int k, const Colouring& a,
                                         const Colouring& b,
                                         std::uint64_t limit = kDefaultStateLimit,
                                         const ReconfigGraph* oracle = nullptr) {
  if (a.palette() != k || b.palette() != k)
    throw Error(ErrorCode::InvalidArgument, "colourings must use palette " + std::to_string(k));
  require_proper(g, a, "first colouring");
  require_proper(g, b, "second colouring");

  const auto comps = connected_components(g);
  if (comps.size() <= 1) return detail::decide_connected(g, k, a, b, limit, oracle);

  PathDecision combined;
  combined.answer = Answer::Yes;
  combined.reason = DecisionReason::TrivialYes;
  for (const auto& comp : comps) {
    const auto sub = induced_subgraph(g, comp);
    std::vector<Colour> ca, cb;
    for (Vertex v : comp) {
      ca.push_back(a[v]);
      cb.push_back(b[v]);
    }
    auto part =
        detail::decide_connected(sub.graph, k, Colouring(k, ca), Colouring(k, cb), limit, nullptr);
    if (part.answer == Answer::No) {
      for (Vertex& v : part.frozen_witnesses) v = sub.to_parent[v];
      return part;
    }
    if (part.answer == Answer::Inconclusive) combined = part;
    else if (combined.answer == Answer::Yes && combined.reason == DecisionReason::TrivialYes)
      combined.reason = part.reason;
  }
  combined.first_frozen = is_frozen(g, a);
  combined.second_frozen = is_frozen(g, b);
  return combined;
}

struct FrozenCensus {
  std::uint64_t count = 0;
  std::vector<Colouring> witnesses;  // at most 10
  bool analytic = false;
  std::string rule;
};

/// Number of frozen k-colourings. Skips enumeration when a degree or
/// divisibility argument already forces zero.
inline FrozenCensus frozen_census(const Graph& g, int k, std::uint64_t limit = kDefaultStateLimit) {
  FrozenCensus out;
  const int delta = g.max_degree();
  if (g.order() > 0 && k > delta + 1) {
    out.analytic = true;
    out.rule = "k > max degree + 1";
    return out;
  }
  if (g.order() > 0 && k == delta + 1 && !g.is_regular()) {
    out.analytic = true;
    out.rule = "not regular";
    return out;
  }
  if (g.order() > 0 && k == delta + 1 && g.order() % k != 0) {
    out.analytic = true;
    out.rule = "regular with n not divisible by max degree + 1";
    return out;
  }
  for (const auto& c : enumerate_colourings(g, k, limit)) {
    if (!is_frozen(g, c)) continue;
    ++out.count;
    if (out.witnesses.size() < 10) out.witnesses.push_back(c);
  }
  out.rule = "enumeration";
  return out;
}

inline nlohmann::json to_json(const FrozenCensus& f) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& c : f.witnesses) w.push_back(std::vector<int>(c.values().begin(), c.values().end()));
  return {{"count", f.count}, {"analytic", f.analytic}, {"rule", f.rule}, {"witnesses", w}};
}

struct TypeReport {
  std::string graph_id;
  int k = 0;
  int empirical_type = 0;  // 0 = inconclusive
  ReconfigGraphSummary evidence;
  double max_diameter_ratio = 0.0;  // largest component diameter / n^2
  std::string note;
};

inline nlohmann::json to_json(const TypeReport& t) {
  nlohmann::json j{{"graph", t.graph_id},
                   {"k", t.k},
                   {"maxDiameterRatio", t.max_diameter_ratio},
                   {"evidence", to_json(t.evidence)}};
  j["empiricalType"] = t.empirical_type ? nlohmann::json(t.empirical_type) : nlohmann::json("inconclusive");
  if (!t.note.empty()) j["note"] = t.note;
  return j;
}

/// Strongest of types 1-3 that the enumerated R_k(G) exhibits: 1 when
/// connected, 2 when at most one component is not a single colouring, 3
/// otherwise. Type 4 is never claimed from a single instance.
inline TypeReport classify_instance(const Graph& g, int k, std::string graph_id = {},
                                    std::uint64_t limit = kDefaultStateLimit) {
  TypeReport t;
  t.graph_id = std::move(graph_id);
  t.k = k;
  t.evidence = build_reconfig_graph(g, k, limit, true);
  if (t.evidence.total_colourings == 0) {
    t.note = "graph is not " + std::to_string(k) + "-colourable";
    return t;
  }
  int max_diameter = 0;
  for (const auto& c : t.evidence.components) max_diameter = std::max(max_diameter, c.diameter);
  const double n2 = std::max(1.0, static_cast<double>(g.order()) * g.order());
  t.max_diameter_ratio = max_diameter / n2;
  if (t.evidence.components.size() == 1)
    t.empirical_type = 1;
  else if (t.evidence.nontrivial_components() <= 1)
    t.empirical_type = 2;
  else
    t.empirical_type = 3;
  return t;
}

}  // namespace recolor
