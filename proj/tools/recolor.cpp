// recolor: command-line front end for the recolouring library.
//
// Exit codes: 0 success, 1 input error, 2 provable negative,
// 3 inconclusive or state space over the limit.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "recolor/recolor.hpp"

namespace {

using namespace recolor;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNegative = 2;
constexpr int kInconclusive = 3;

constexpr int kExhaustiveWarnOrder = 10;

struct RunConfig {
  std::string graph;
  std::string colouring_a;
  std::string colouring_b;
  std::string sequence;
  std::string out;
  std::string format = "text";
  int k = 0;  // 0 = take the palette from the colouring file
  std::uint64_t limit = 0;
  std::uint64_t seed = 1;
  bool diameters = false;
  // verify-corpus
  int min_n = 4;
  int max_n = 6;
  std::vector<int> palettes{3, 4, 5};
  int pairs = 50;
  int jobs = 0;
  std::string cache;
};

// --limit beats RECOLOR_LIMIT, which beats the built-in default.
std::uint64_t effective_limit(const RunConfig& cfg) {
  if (cfg.limit > 0) return cfg.limit;
  if (const char* env = std::getenv("RECOLOR_LIMIT")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring invalid RECOLOR_LIMIT='" << env << "'\n";
  }
  return kDefaultStateLimit;
}

std::string read_file(const std::string& path, const char* what) {
  if (path.empty()) throw Error(ErrorCode::InvalidArgument, std::string("missing ") + what + " file");
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, std::string("cannot open ") + what + " file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const RunConfig& cfg) { return parse_graph(read_file(cfg.graph, "graph")); }

Colouring load_colouring(const std::string& path, const char* what, const Graph& g, int k) {
  auto c = parse_colouring(read_file(path, what));
  check_size(g, c);
  return k > 0 && k != c.palette() ? c.with_palette(k) : c;
}

void warn_exhaustive(const Graph& g) {
  if (g.order() > kExhaustiveWarnOrder)
    std::cerr << "warning: exhaustive search on " << g.order() << " vertices may be slow\n";
}

void emit_json(const RunConfig& cfg, const json& j) {
  if (cfg.out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream out(cfg.out);
    out << j.dump(2) << '\n';
  }
}

void write_sequence_out(const RunConfig& cfg, const RecolouringSequence& seq) {
  if (cfg.out.empty()) {
    if (cfg.format != "json") write_sequence(std::cout, seq);
    return;
  }
  std::ofstream out(cfg.out);
  write_sequence(out, seq);
}

json sequence_json(const RecolouringSequence& seq) {
  json steps = json::array();
  for (const auto& s : seq) steps.push_back({s.vertex, s.colour});
  return steps;
}

// --------------------------------------------------------------------------

int cmd_path(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  const auto a = load_colouring(cfg.colouring_a, "first colouring", g, cfg.k);
  const auto b = load_colouring(cfg.colouring_b, "second colouring", g, cfg.k);
  if (a.palette() != b.palette())
    throw Error(ErrorCode::InvalidArgument, "colourings use different palettes; pass --k");
  const int k = a.palette();
  require_proper(g, a, "first colouring");
  require_proper(g, b, "second colouring");
  const auto limit = effective_limit(cfg);

  std::optional<RecolouringSequence> seq;
  std::string method;
  PathDecision decision;
  decision.answer = Answer::Yes;
  if (k == g.max_degree() + 1 && g.max_degree() >= 3 && is_connected(g) && !g.is_regular()) {
    seq = find_path_non_regular(g, a, b);
    method = "constructive";
  } else {
    decision = decide_k_colour_path(g, k, a, b, limit);
    if (decision.answer == Answer::Yes && state_space(g.order(), k, limit) <= limit) {
      warn_exhaustive(g);
      const ReconfigGraph r(g, k, limit);
      seq = shortest_walk(r, r.index_of(a), r.index_of(b));
      method = "oracle";
    }
  }

  json j{{"k", k}};
  int code = kOk;
  if (seq) {
    const auto end = apply_sequence(g, a, *seq);
    const bool valid = end == b;
    j["method"] = method;
    j["length"] = seq->size();
    j["valid"] = valid;
    if (!valid) throw std::logic_error("constructed walk does not end at the target");
    write_sequence_out(cfg, *seq);
    if (cfg.format == "json") {
      if (cfg.out.empty()) j["steps"] = sequence_json(*seq);
      std::cout << j.dump(2) << '\n';
    } else {
      std::cerr << "length " << seq->size() << ", valid (" << method << ")\n";
    }
    return kOk;
  }

  j["decision"] = to_json(decision);
  if (decision.answer == Answer::No) {
    code = kNegative;
  } else {
    code = kInconclusive;
  }
  if (cfg.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else if (code == kNegative) {
    std::cout << "no path (" << to_string(decision.reason) << ")\n";
  } else if (decision.answer == Answer::Yes) {
    std::cout << "path exists (" << to_string(decision.reason)
              << ") but the state space exceeds the limit for constructing it\n";
  } else {
    std::cout << "inconclusive: state space exceeds the limit\n";
  }
  return code;
}

int cmd_validate(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  const auto start = load_colouring(cfg.colouring_a, "colouring", g, cfg.k);
  const auto seq = parse_sequence(read_file(cfg.sequence, "sequence"));
  try {
    const auto end = apply_sequence(g, start, seq);
    if (cfg.format == "json")
      std::cout << json{{"valid", true}, {"steps", seq.size()}, {"end", to_string(end)}}.dump(2) << '\n';
    else
      std::cout << "valid: " << seq.size() << " steps, ends at " << to_string(end) << '\n';
    return kOk;
  } catch (const Error& e) {
    // Errors about the start colouring itself are input errors.
    if (!e.index()) throw;
    if (cfg.format == "json")
      std::cout << json{{"valid", false}, {"step", *e.index()}, {"error", std::string(to_string(e.code()))},
                        {"message", e.what()}}
                       .dump(2)
                << '\n';
    else
      std::cout << "invalid at step " << *e.index() << ": " << e.what() << '\n';
    return kNegative;
  }
}

int cmd_explore(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  if (cfg.k < 1) throw Error(ErrorCode::InvalidArgument, "--k is required");
  const auto limit = effective_limit(cfg);
  warn_exhaustive(g);
  const auto summary = build_reconfig_graph(g, cfg.k, limit, cfg.diameters);
  if (cfg.format == "json" || !cfg.out.empty()) {
    emit_json(cfg, to_json(summary));
  } else {
    std::cout << "colourings " << summary.total_colourings << ", components " << summary.components.size()
              << " (" << summary.nontrivial_components() << " with two or more), frozen " << summary.frozen_count
              << ", isolated non-frozen " << summary.isolated_non_frozen << '\n';
  }
  return kOk;
}

int cmd_decide(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  const auto a = load_colouring(cfg.colouring_a, "first colouring", g, cfg.k);
  const auto b = load_colouring(cfg.colouring_b, "second colouring", g, cfg.k);
  if (a.palette() != b.palette())
    throw Error(ErrorCode::InvalidArgument, "colourings use different palettes; pass --k");
  const auto d = decide_k_colour_path(g, a.palette(), a, b, effective_limit(cfg));
  if (cfg.format == "json")
    std::cout << to_json(d).dump(2) << '\n';
  else
    std::cout << to_string(d.answer) << " (" << to_string(d.reason) << ")\n";
  switch (d.answer) {
    case Answer::Yes: return kOk;
    case Answer::No: return kNegative;
    case Answer::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

int cmd_eliminate(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  const auto c = load_colouring(cfg.colouring_a, "colouring", g, cfg.k);
  const auto res = eliminate_top_colour(g, c);
  write_sequence_out(cfg, res.sequence);
  if (cfg.format == "json") {
    json j{{"length", res.sequence.size()}, {"rounds", res.rounds.size()}, {"result", to_string(res.colouring)}};
    if (cfg.out.empty()) j["steps"] = sequence_json(res.sequence);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cerr << "length " << res.sequence.size() << ", rounds " << res.rounds.size() << ", result "
              << to_string(res.colouring) << '\n';
  }
  return kOk;
}

int cmd_census(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  if (cfg.k < 1) throw Error(ErrorCode::InvalidArgument, "--k is required");
  warn_exhaustive(g);
  const auto f = frozen_census(g, cfg.k, effective_limit(cfg));
  if (cfg.format == "json")
    emit_json(cfg, to_json(f));
  else
    std::cout << "frozen " << f.count << " (" << f.rule << ")\n";
  return kOk;
}

int cmd_classify(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  if (cfg.k < 1) throw Error(ErrorCode::InvalidArgument, "--k is required");
  warn_exhaustive(g);
  const auto t = classify_instance(g, cfg.k, std::filesystem::path(cfg.graph).filename().string(),
                                   effective_limit(cfg));
  if (cfg.format == "json") {
    emit_json(cfg, to_json(t));
  } else if (t.empirical_type == 0) {
    std::cout << "inconclusive: " << t.note << '\n';
  } else {
    std::cout << "type " << t.empirical_type << " (max diameter / n^2 = " << t.max_diameter_ratio << ")\n";
  }
  return t.empirical_type == 0 ? kInconclusive : kOk;
}

int cmd_verify_corpus(const RunConfig& cfg) {
  if (cfg.min_n < 1 || cfg.max_n < cfg.min_n) throw Error(ErrorCode::InvalidArgument, "need 1 <= --min-n <= --max-n");
  if (cfg.max_n > 8) std::cerr << "warning: --max-n above 8 is very slow\n";
  const std::filesystem::path cache =
      cfg.cache.empty() ? std::filesystem::temp_directory_path() / "recolor-corpus" : std::filesystem::path(cfg.cache);
  bool regenerated = false;
  const auto start = std::chrono::steady_clock::now();
  const auto corpus = load_corpus(cfg.min_n, cfg.max_n, cache, &regenerated);

  CorpusOptions opt;
  opt.decision_palettes = cfg.palettes;
  opt.seed = cfg.seed;
  opt.path_pairs = cfg.pairs;
  opt.limit = effective_limit(cfg);
  opt.jobs = cfg.jobs;
  const auto report = verify_corpus(corpus, opt);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  auto j = to_json(report);
  j["seed"] = cfg.seed;
  j["minN"] = cfg.min_n;
  j["maxN"] = cfg.max_n;
  j["cacheRegenerated"] = regenerated;
  if (cfg.format == "json") {
    // Timing is left out so that the report is reproducible byte for byte.
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << report.graphs.size() << " graphs, n = " << cfg.min_n << ".." << cfg.max_n << ", " << seconds
              << " s\n";
    for (const auto& [name, t] : report.checks)
      std::cout << "  " << name << ": " << (t.failures ? "FAIL" : "ok") << "  graphs " << t.graphs << " (skipped "
                << t.skipped << "), instances " << t.instances << ", max " << t.max_distance << " (ratio "
                << t.max_ratio << ")\n";
  }
  if (report.passed()) return kOk;

  const std::string path = cfg.out.empty() ? "recolor-reproducer.txt" : cfg.out;
  std::ofstream out(path);
  for (const auto& gv : report.graphs)
    for (const auto& rep : gv.reports) {
      if (rep.skipped || rep.passed) continue;
      out << "# " << gv.id << " " << rep.check << "\n";
      for (const auto& c : rep.counterexamples) out << "# " << c << "\n";
      write_graph(out, gv.graph);
      out << "\n";
    }
  std::cerr << "counterexamples written to " << path << '\n';
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recolouring paths and reconfiguration graphs of graph colourings"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "Output file");
    sub->add_option("--limit", cfg.limit, "State-space limit (default: $RECOLOR_LIMIT or 2000000)")
        ->check(CLI::PositiveNumber);
  };
  const auto add_graph = [&](CLI::App* sub) { sub->add_option("--graph", cfg.graph, "Edge-list file")->required(); };
  const auto add_k = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--k", cfg.k, "Number of colours")->check(CLI::Range(1, 255));
    if (required) opt->required();
  };

  auto* path = app.add_subcommand("path", "Find a recolouring sequence between two colourings");
  add_graph(path);
  path->add_option("--colouring-a", cfg.colouring_a, "Start colouring")->required();
  path->add_option("--colouring-b", cfg.colouring_b, "Target colouring")->required();
  add_k(path, false);
  add_common(path);

  auto* validate = app.add_subcommand("validate", "Check a recolouring sequence step by step");
  add_graph(validate);
  validate->add_option("--colouring-a,--colouring", cfg.colouring_a, "Start colouring")->required();
  validate->add_option("--sequence", cfg.sequence, "Sequence file")->required();
  add_k(validate, false);
  add_common(validate);

  auto* explore = app.add_subcommand("explore", "Summarise the reconfiguration graph R_k(G)");
  add_graph(explore);
  add_k(explore, true);
  explore->add_flag("--diameters", cfg.diameters, "Compute component diameters");
  add_common(explore);

  auto* decide = app.add_subcommand("decide", "Decide whether two colourings are connected");
  add_graph(decide);
  decide->add_option("--colouring-a", cfg.colouring_a, "First colouring")->required();
  decide->add_option("--colouring-b", cfg.colouring_b, "Second colouring")->required();
  add_k(decide, false);
  add_common(decide);

  auto* eliminate = app.add_subcommand("eliminate", "Remove the top colour from a colouring");
  add_graph(eliminate);
  eliminate->add_option("--colouring-a,--colouring", cfg.colouring_a, "Colouring")->required();
  add_k(eliminate, false);
  add_common(eliminate);

  auto* census = app.add_subcommand("census", "Count frozen colourings");
  add_graph(census);
  add_k(census, true);
  add_common(census);

  auto* classify = app.add_subcommand("classify", "Report the empirical type of R_k(G)");
  add_graph(classify);
  add_k(classify, true);
  add_common(classify);

  auto* corpus = app.add_subcommand("verify-corpus", "Run every check over all small connected graphs");
  corpus->add_option("--min-n", cfg.min_n, "Smallest order")->check(CLI::Range(1, 11));
  corpus->add_option("--max-n", cfg.max_n, "Largest order")->check(CLI::Range(1, 11));
  corpus->add_option("--palettes", cfg.palettes, "Palettes for the decision cross-check")->delimiter(',');
  corpus->add_option("--pairs", cfg.pairs, "Colouring pairs per graph for path construction")
      ->check(CLI::NonNegativeNumber);
  corpus->add_option("--seed", cfg.seed, "Sampling seed");
  corpus->add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  corpus->add_option("--cache", cfg.cache, "Corpus cache directory");
  add_common(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*path) return cmd_path(cfg);
    if (*validate) return cmd_validate(cfg);
    if (*explore) return cmd_explore(cfg);
    if (*decide) return cmd_decide(cfg);
    if (*eliminate) return cmd_eliminate(cfg);
    if (*census) return cmd_census(cfg);
    if (*classify) return cmd_classify(cfg);
    if (*corpus) return cmd_verify_corpus(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::StateSpaceExceedsLimit ? kInconclusive : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
