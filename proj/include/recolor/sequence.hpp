#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "recolor/colouring.hpp"
#include "recolor/error.hpp"
#include "recolor/graph.hpp"

namespace recolor {

struct Step {
  Vertex vertex = 0;
  Colour colour = 1;

  friend bool operator==(const Step&, const Step&) = default;
};

/// Ordered single-vertex recolourings; a walk in the reconfiguration graph.
class RecolouringSequence {
 public:
  RecolouringSequence() = default;
  explicit RecolouringSequence(std::vector<Step> steps) : steps_(std::move(steps)) {}

  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  const Step& operator[](std::size_t i) const { return steps_[i]; }
  auto begin() const noexcept { return steps_.begin(); }
  auto end() const noexcept { return steps_.end(); }

  void push_back(Step s) { steps_.push_back(s); }
  void push_back(Vertex v, Colour c) { steps_.push_back({v, c}); }

  void append(const RecolouringSequence& other) {
    steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
  }

  friend bool operator==(const RecolouringSequence&, const RecolouringSequence&) = default;

 private:
  std::vector<Step> steps_;
};

inline RecolouringSequence concat(RecolouringSequence a, const RecolouringSequence& b) {
  a.append(b);
  return a;
}

/// Replays `seq` from `start`, checking every intermediate colouring. Throws
/// with the offending step index on the first violation.
inline Colouring apply_sequence(const Graph& g, const Colouring& start,
                                const RecolouringSequence& seq) {
  require_proper(g, start, "start colouring");
  std::vector<Colour> cur(start.values().begin(), start.values().end());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto [v, c] = seq[i];
    if (v < 0 || v >= g.order())
      throw Error(ErrorCode::VertexOutOfRange, "step " + std::to_string(i), i);
    if (c < 1 || c > start.palette())
      throw Error(ErrorCode::ColourOutOfRange, "step " + std::to_string(i), i);
    if (cur[v] == c)
      throw Error(ErrorCode::NoOpStep,
                  "step " + std::to_string(i) + " leaves vertex " + std::to_string(v) +
                      " at colour " + std::to_string(c),
                  i);
    for (Vertex w : g.neighbours(v))
      if (cur[w] == c)
        throw Error(ErrorCode::ImproperIntermediate,
                    "step " + std::to_string(i) + " gives " + std::to_string(v) + " the colour of " +
                        std::to_string(w),
                    i);
    cur[v] = c;
  }
  return Colouring(start.palette(), std::move(cur));
}

/// The same walk traversed backwards, to be applied from the end colouring.
inline RecolouringSequence reverse_sequence(const Colouring& start, const RecolouringSequence& seq) {
  std::vector<Colour> cur(start.values().begin(), start.values().end());
  std::vector<Step> back;
  back.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto [v, c] = seq[i];
    if (v < 0 || v >= start.order())
      throw Error(ErrorCode::VertexOutOfRange, "step " + std::to_string(i), i);
    if (c < 1 || c > start.palette())
      throw Error(ErrorCode::ColourOutOfRange, "step " + std::to_string(i), i);
    if (cur[v] == c) throw Error(ErrorCode::NoOpStep, "step " + std::to_string(i), i);
    back.push_back({v, cur[v]});
    cur[v] = c;
  }
  return RecolouringSequence(std::vector<Step>(back.rbegin(), back.rend()));
}

inline void write_sequence(std::ostream& out, const RecolouringSequence& seq) {
  out << "steps: " << seq.size() << '\n';
  for (const auto& s : seq) out << s.vertex << ' ' << s.colour << '\n';
}

inline RecolouringSequence parse_sequence(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      if (!out.empty() && out.back() == '\r') out.pop_back();
      if (out.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line(line)) throw Error(ErrorCode::MalformedLine, "expected \"steps: N\"", 1);
  long long count = -1;
  {
    std::istringstream ls(line);
    std::string tag, rest;
    if (!(ls >> tag) || tag != "steps:" || !(ls >> count) || (ls >> rest) || count < 0)
      throw Error(ErrorCode::MalformedLine, "bad header \"" + line + "\"", line_no);
  }
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    if (!next_line(line))
      throw Error(ErrorCode::MalformedLine, "expected " + std::to_string(count) + " steps",
                  line_no + 1);
    std::istringstream ls(line);
    long long v = 0, c = 0;
    std::string rest;
    if (!(ls >> v >> c) || (ls >> rest))
      throw Error(ErrorCode::MalformedLine, "bad step \"" + line + "\"", line_no);
    steps.push_back({static_cast<Vertex>(v), static_cast<Colour>(c)});
  }
  if (next_line(line)) throw Error(ErrorCode::MalformedLine, "trailing content", line_no);
  return RecolouringSequence(std::move(steps));
}

inline RecolouringSequence parse_sequence(const std::string& text) {
  std::istringstream in(text);
  return parse_sequence(in);
}

}  // namespace recolor
