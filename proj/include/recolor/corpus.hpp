#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "recolor/classifier.hpp"
#include "recolor/colouring.hpp"
#include "recolor/explorer.hpp"
#include "recolor/graph.hpp"
#include "recolor/recolour.hpp"
#include "recolor/sequence.hpp"

namespace recolor {

// ---------------------------------------------------------------------------
// Non-isomorphic graph generation

namespace detail {

inline int pair_bit(int i, int j, int n) {
  // row-major over the upper triangle, i < j
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Adjacency bits of g relabelled so that vertex perm[p] lands at position p.
inline std::uint64_t relabelled_code(const Graph& g, const std::vector<Vertex>& perm) {
  const int n = g.order();
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(perm[i], perm[j])) code |= std::uint64_t{1} << pair_bit(i, j, n);
  return code;
}

}  // namespace detail

/// Canonical labelling: vertices are first grouped by an isomorphism
/// invariant (degree, then sorted neighbour degrees), then every ordering
/// within groups is tried and the largest adjacency code wins. Exponential in
/// group sizes; intended for n <= 8.
inline std::uint64_t canonical_code(const Graph& g, std::vector<Vertex>* best_perm = nullptr) {
  const int n = g.order();
  if (n > 11) throw Error(ErrorCode::InvalidArgument, "canonical form supports n <= 11");
  std::vector<std::pair<std::vector<int>, Vertex>> keyed;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> key{-g.degree(v)};
    std::vector<int> nd;
    for (Vertex w : g.neighbours(v)) nd.push_back(-g.degree(w));
    std::sort(nd.begin(), nd.end());
    key.insert(key.end(), nd.begin(), nd.end());
    keyed.emplace_back(std::move(key), v);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Vertex> perm;
  std::vector<std::pair<int, int>> groups;  // [begin, end)
  for (int i = 0; i < n; ++i) {
    perm.push_back(keyed[i].second);
    if (i == 0 || keyed[i].first != keyed[i - 1].first) groups.emplace_back(i, i + 1);
    else groups.back().second = i + 1;
  }
  for (auto [b, e] : groups) std::sort(perm.begin() + b, perm.begin() + e);

  std::uint64_t best = 0;
  bool first = true;
  // Odometer over per-group permutations.
  while (true) {
    const auto code = detail::relabelled_code(g, perm);
    if (first || code > best) {
      best = code;
      first = false;
      if (best_perm) *best_perm = perm;
    }
    std::size_t gi = 0;
    for (; gi < groups.size(); ++gi) {
      auto [b, e] = groups[gi];
      if (std::next_permutation(perm.begin() + b, perm.begin() + e)) break;
    }
    if (gi == groups.size()) break;
  }
  return best;
}

inline Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (code >> detail::pair_bit(i, j, n) & 1) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline Graph canonical_form(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

/// All graphs on n vertices up to isomorphism, canonical, sorted by code.
inline std::vector<Graph> all_graphs(int n) {
  std::set<std::uint64_t> level{0};  // the single graph on 1 vertex (or 0)
  if (n <= 1) return {Graph(std::max(n, 0), std::vector<std::pair<Vertex, Vertex>>{})};
  for (int m = 2; m <= n; ++m) {
    std::set<std::uint64_t> next;
    for (auto code : level) {
      const Graph base = graph_from_code(m - 1, code);
      const auto base_edges = base.edges();
      for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
        auto edges = base_edges;
        for (int v = 0; v < m - 1; ++v)
          if (mask >> v & 1) edges.emplace_back(v, m - 1);
        next.insert(canonical_code(Graph(m, edges)));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto code : level) out.push_back(graph_from_code(n, code));
  return out;
}

struct CorpusGraph {
  std::string id;
  Graph graph;
};

inline std::string corpus_id(const Graph& g) {
  std::ostringstream os;
  os << "n" << g.order() << "-" << std::hex << canonical_code(g);
  return os.str();
}

/// Connected graphs with min_n <= n <= max_n, one per isomorphism class.
inline std::vector<CorpusGraph> generate_corpus(int min_n, int max_n) {
  std::vector<CorpusGraph> out;
  for (int n = std::max(min_n, 1); n <= max_n; ++n)
    for (auto& g : all_graphs(n))
      if (is_connected(g)) out.push_back({corpus_id(g), std::move(g)});
  return out;
}

// ---------------------------------------------------------------------------
// On-disk cache: <root>/<key>/manifest.txt plus one edge-list file per graph.

inline std::string corpus_cache_key(int min_n, int max_n) {
  const std::string tag =
      "recolor-corpus-v1:" + std::to_string(min_n) + ":" + std::to_string(max_n);
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char ch : tag) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace detail {

inline std::optional<std::vector<CorpusGraph>> read_corpus_dir(const std::filesystem::path& dir) {
  std::ifstream manifest(dir / "manifest.txt");
  if (!manifest) return std::nullopt;
  std::size_t count = 0;
  std::string header;
  if (!(manifest >> header >> count) || header != "graphs") return std::nullopt;
  std::vector<CorpusGraph> out;
  std::string id;
  while (manifest >> id) {
    std::ifstream in(dir / (id + ".txt"));
    if (!in) return std::nullopt;
    try {
      Graph g = parse_graph(in);
      if (corpus_id(g) != id) return std::nullopt;
      out.push_back({id, std::move(g)});
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  if (out.size() != count) return std::nullopt;
  return out;
}

}  // namespace detail

/// Loads the corpus from the cache, regenerating it when the cache is
/// missing or fails validation.
inline std::vector<CorpusGraph> load_corpus(int min_n, int max_n,
                                            const std::filesystem::path& cache_root,
                                            bool* regenerated = nullptr) {
  namespace fs = std::filesystem;
  const fs::path dir = cache_root / corpus_cache_key(min_n, max_n);
  if (auto cached = detail::read_corpus_dir(dir)) {
    if (regenerated) *regenerated = false;
    return std::move(*cached);
  }
  auto corpus = generate_corpus(min_n, max_n);
  std::error_code ec;
  fs::remove_all(dir, ec);
  fs::create_directories(dir, ec);
  if (!ec) {
    for (const auto& item : corpus) {
      std::ofstream out(dir / (item.id + ".txt"));
      write_graph(out, item.graph);
    }
    std::ofstream manifest(dir / "manifest.txt");
    manifest << "graphs " << corpus.size() << '\n';
    for (const auto& item : corpus) manifest << item.id << '\n';
  }
  if (regenerated) *regenerated = true;
  return corpus;
}

// ---------------------------------------------------------------------------
// Corpus verification

struct CorpusOptions {
  std::vector<int> decision_palettes{3, 4, 5};
  std::uint64_t seed = 1;
  int path_pairs = 50;      // colouring pairs per graph for path construction
  int decision_pairs = 20;  // random pairs per (graph, k) for the decision check
  std::uint64_t limit = kDefaultStateLimit;
  int jobs = 0;             // 0 = hardware concurrency
};

/// Seed for one graph, mixing the run seed with the graph id.
inline std::uint64_t graph_seed(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
  for (unsigned char ch : id) h = (h ^ ch) * 1099511628211ull;
  return h;
}

/// Builds walks between sampled pairs of (Delta+1)-colourings of a connected
/// non-regular graph with Delta >= 3 and checks them against the oracle.
/// max_ratio is the longest walk over n^2.
inline VerifyReport verify_path_construction(const ReconfigGraph& r, int pairs, std::uint64_t seed) {
  const char* name = "path-construction";
  const Graph& g = r.graph();
  if (!is_connected(g)) return VerifyReport::skip(name, "graph not connected");
  if (g.max_degree() < 3) return VerifyReport::skip(name, "max degree below 3");
  if (g.is_regular()) return VerifyReport::skip(name, "graph is regular");
  if (r.palette() != g.max_degree() + 1) return VerifyReport::skip(name, "palette mismatch");
  VerifyReport rep;
  rep.check = name;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, r.size() - 1);
  const int n = g.order();
  for (int p = 0; p < pairs; ++p) {
    const auto ia = pick(rng);
    const auto ib = pick(rng);
    const auto& a = r.colouring(ia);
    const auto& b = r.colouring(ib);
    ++rep.instances;
    std::string failure;
    try {
      const auto seq = find_path_non_regular(g, a, b);
      const auto end = apply_sequence(g, a, seq);
      if (!(end == b)) failure = "walk ends at " + to_string(end);
      else if (seq.size() > static_cast<std::size_t>(10 * n * n))
        failure = "walk length " + std::to_string(seq.size()) + " > 10n^2";
      else if (r.component(ia) != r.component(ib))
        failure = "oracle places endpoints in different components";
      rep.max_distance = std::max(rep.max_distance, static_cast<int>(seq.size()));
    } catch (const std::exception& e) {
      failure = e.what();
    }
    if (!failure.empty()) {
      rep.passed = false;
      if (rep.counterexamples.size() < 10)
        rep.counterexamples.push_back(to_string(a) + " -> " + to_string(b) + ": " + failure);
    }
  }
  rep.max_ratio = static_cast<double>(rep.max_distance) / (static_cast<double>(n) * n);
  return rep;
}

/// Compares decide_k_colour_path with oracle reachability on sampled pairs and
/// on every pair involving a frozen colouring.
inline VerifyReport verify_decision(const ReconfigGraph& r, int pairs, std::uint64_t seed) {
  VerifyReport rep;
  rep.check = "decision-vs-oracle";
  if (r.size() == 0) {
    rep.skipped = true;
    rep.skip_reason = "no proper colourings";
    return rep;
  }
  const Graph& g = r.graph();
  const int k = r.palette();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, r.size() - 1);
  std::vector<std::pair<std::size_t, std::size_t>> cases;
  for (int p = 0; p < pairs; ++p) cases.emplace_back(pick(rng), pick(rng));
  std::vector<std::size_t> frozen;
  for (std::size_t i = 0; i < r.size() && frozen.size() < 6; ++i)
    if (r.frozen(i)) frozen.push_back(i);
  for (auto f : frozen) {
    cases.emplace_back(f, f);
    cases.emplace_back(f, pick(rng));
    for (auto f2 : frozen) cases.emplace_back(f, f2);
  }
  // Same-component pairs exercise the "yes" side in sparse R_k(G).
  for (int p = 0; p < pairs; ++p) {
    const auto a = pick(rng);
    const auto nb = r.neighbours(a);
    if (!nb.empty()) cases.emplace_back(a, nb[pick(rng) % nb.size()]);
  }
  for (auto [ia, ib] : cases) {
    ++rep.instances;
    const bool truth = r.component(ia) == r.component(ib);
    const auto d = decide_k_colour_path(g, k, r.colouring(ia), r.colouring(ib), kDefaultStateLimit, &r);
    const bool agrees = d.answer == (truth ? Answer::Yes : Answer::No);
    if (!agrees) {
      rep.passed = false;
      if (rep.counterexamples.size() < 10)
        rep.counterexamples.push_back("k=" + std::to_string(k) + " " + to_string(r.colouring(ia)) +
                                      " vs " + to_string(r.colouring(ib)) + " decided " +
                                      std::string(to_string(d.answer)) + " (" +
                                      std::string(to_string(d.reason)) + ")");
    }
  }
  return rep;
}

/// Frozen census against enumeration, on regular graphs with k = Delta+1.
inline VerifyReport verify_frozen_census(const ReconfigGraph& r) {
  VerifyReport rep;
  rep.check = "frozen-census";
  const Graph& g = r.graph();
  std::uint64_t enumerated = 0;
  for (std::size_t i = 0; i < r.size(); ++i) enumerated += r.frozen(i);
  const auto census = frozen_census(g, r.palette());
  rep.instances = 1;
  rep.max_distance = static_cast<int>(enumerated);
  if (census.count != enumerated) {
    rep.passed = false;
    rep.counterexamples.push_back("census " + std::to_string(census.count) + " (" + census.rule +
                                  ") vs enumeration " + std::to_string(enumerated));
  }
  return rep;
}

struct GraphVerification {
  std::string id;
  Graph graph;
  std::vector<VerifyReport> reports;
};

/// Every check that applies to one corpus graph.
inline GraphVerification verify_graph(const CorpusGraph& item, const CorpusOptions& opt) {
  GraphVerification out{item.id, item.graph, {}};
  const Graph& g = item.graph;
  const auto seed = graph_seed(opt.seed, item.id);
  const int k = g.max_degree() + 1;
  if (state_space(g.order(), k, opt.limit) <= opt.limit) {
    const ReconfigGraph r(g, k, opt.limit);
    out.reports.push_back(verify_theorem_delta_plus_one(r));
    out.reports.push_back(verify_theorem_main(r));
    out.reports.push_back(verify_lemma_fewer_top(r));
    out.reports.push_back(verify_lemma_locked_paths(r));
    out.reports.push_back(verify_frozen_census(r));
    out.reports.push_back(verify_path_construction(r, opt.path_pairs, seed));
  } else {
    out.reports.push_back(VerifyReport::skip("reconfiguration-graph", "state space exceeds limit"));
  }
  for (int pk : opt.decision_palettes) {
    if (state_space(g.order(), pk, opt.limit) > opt.limit) continue;
    const ReconfigGraph r(g, pk, opt.limit);
    auto rep = verify_decision(r, opt.decision_pairs, seed + static_cast<std::uint64_t>(pk));
    out.reports.push_back(std::move(rep));
  }
  return out;
}

struct CheckTally {
  std::size_t graphs = 0;
  std::size_t skipped = 0;
  std::size_t instances = 0;
  std::size_t failures = 0;
  int max_distance = 0;
  double max_ratio = 0.0;
  std::vector<std::string> failing;  // "<graph id>: <detail>"
};

struct CorpusReport {
  std::vector<GraphVerification> graphs;  // sorted by id
  std::map<std::string, CheckTally> checks;

  bool passed() const {
    for (const auto& [name, t] : checks)
      if (t.failures) return false;
    return true;
  }
};

/// Runs verify_graph over the corpus on a bounded pool of worker threads.
inline CorpusReport verify_corpus(const std::vector<CorpusGraph>& corpus, const CorpusOptions& opt) {
  CorpusReport report;
  report.graphs.resize(corpus.size());
  int jobs = opt.jobs > 0 ? opt.jobs : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::clamp(jobs, 1, std::max(1, static_cast<int>(corpus.size())));
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        report.graphs[i] = verify_graph(corpus[i], opt);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  std::sort(report.graphs.begin(), report.graphs.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  for (const auto& gv : report.graphs)
    for (const auto& rep : gv.reports) {
      auto& t = report.checks[rep.check];
      ++t.graphs;
      if (rep.skipped) {
        ++t.skipped;
        continue;
      }
      t.instances += rep.instances;
      t.max_distance = std::max(t.max_distance, rep.max_distance);
      t.max_ratio = std::max(t.max_ratio, rep.max_ratio);
      if (!rep.passed) {
        ++t.failures;
        for (const auto& c : rep.counterexamples) t.failing.push_back(gv.id + ": " + c);
      }
    }
  return report;
}

inline nlohmann::json to_json(const CorpusReport& r) {
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& [name, t] : r.checks)
    checks[name] = {{"graphs", t.graphs},       {"skipped", t.skipped},
                    {"instances", t.instances}, {"failures", t.failures},
                    {"maxDistance", t.max_distance}, {"maxRatio", t.max_ratio},
                    {"failing", t.failing}};
  return {{"graphs", r.graphs.size()}, {"passed", r.passed()}, {"checks", checks}};
}

}  // namespace recolor
