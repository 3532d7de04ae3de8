#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "recolor/error.hpp"
#include "recolor/graph.hpp"

namespace recolor {

/// Total assignment of colours 1..k to vertices 0..n-1. Properness is a
/// separate query; a Colouring only guarantees every value is in range.
class Colouring {
 public:
  Colouring() = default;

  Colouring(int palette, std::vector<Colour> assignment)
      : palette_(palette), assignment_(std::move(assignment)) {
    if (palette_ < 1) throw Error(ErrorCode::InvalidArgument, "palette must be >= 1");
    for (std::size_t v = 0; v < assignment_.size(); ++v)
      if (assignment_[v] < 1 || assignment_[v] > palette_)
        throw Error(ErrorCode::ColourOutOfRange,
                    "vertex " + std::to_string(v) + " has colour " +
                        std::to_string(assignment_[v]) + " outside 1.." + std::to_string(palette_));
  }

  int palette() const noexcept { return palette_; }
  int order() const noexcept { return static_cast<int>(assignment_.size()); }
  Colour operator[](Vertex v) const { return assignment_[v]; }
  std::span<const Colour> values() const noexcept { return assignment_; }

  Colouring recoloured(Vertex v, Colour c) const {
    Colouring copy = *this;
    copy.assignment_.at(static_cast<std::size_t>(v)) = c;
    return copy;
  }

  /// Same assignment under a different palette size.
  Colouring with_palette(int palette) const { return Colouring(palette, assignment_); }

  int max_colour_used() const {
    return assignment_.empty() ? 0 : *std::max_element(assignment_.begin(), assignment_.end());
  }

  bool uses(Colour c) const {
    return std::find(assignment_.begin(), assignment_.end(), c) != assignment_.end();
  }

  int count(Colour c) const {
    return static_cast<int>(std::count(assignment_.begin(), assignment_.end(), c));
  }

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  int palette_ = 1;
  std::vector<Colour> assignment_;
};

inline void check_size(const Graph& g, const Colouring& c) {
  if (c.order() != g.order())
    throw Error(ErrorCode::SizeMismatch, "colouring has " + std::to_string(c.order()) +
                                             " entries for a graph on " +
                                             std::to_string(g.order()) + " vertices");
}

inline bool is_proper(const Graph& g, const Colouring& c) {
  check_size(g, c);
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) return false;
  return true;
}

inline void require_proper(const Graph& g, const Colouring& c, std::string_view what = "colouring") {
  if (!is_proper(g, c))
    throw Error(ErrorCode::ImproperColouring, std::string(what) + " is not proper");
}

/// Reads "k" on the first line and the n colours on the second.
inline Colouring parse_colouring(std::istream& in) {
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
  if (!next_line(line)) throw Error(ErrorCode::MalformedLine, "expected palette line \"k\"", 1);
  long long k = 0;
  {
    std::istringstream ls(line);
    std::string rest;
    if (!(ls >> k) || (ls >> rest) || k < 1)
      throw Error(ErrorCode::MalformedLine, "bad palette line \"" + line + "\"", line_no);
  }
  std::vector<Colour> values;
  if (next_line(line)) {
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size())
        throw Error(ErrorCode::MalformedLine, "bad colour \"" + token + "\"", line_no);
      if (value < 1 || value > k)
        throw Error(ErrorCode::ColourOutOfRange,
                    "colour " + token + " outside 1.." + std::to_string(k), line_no);
      values.push_back(static_cast<Colour>(value));
    }
    if (next_line(line))
      throw Error(ErrorCode::MalformedLine, "trailing content", line_no);
  }
  return Colouring(static_cast<int>(k), std::move(values));
}

inline Colouring parse_colouring(const std::string& text) {
  std::istringstream in(text);
  return parse_colouring(in);
}

inline void write_colouring(std::ostream& out, const Colouring& c) {
  out << c.palette() << '\n';
  for (int v = 0; v < c.order(); ++v) out << (v ? " " : "") << c[v];
  out << '\n';
}

inline std::string to_string(const Colouring& c) {
  std::string s = "(";
  for (int v = 0; v < c.order(); ++v) s += (v ? "," : "") + std::to_string(c[v]);
  return s + ")";
}

/// Number of distinct colours on the neighbours of v.
inline int distinct_neighbour_colours(const Graph& g, const Colouring& c, Vertex v) {
  std::vector<char> seen(static_cast<std::size_t>(c.palette()) + 1, 0);
  int distinct = 0;
  for (Vertex w : g.neighbours(v))
    if (!seen[c[w]]) {
      seen[c[w]] = 1;
      ++distinct;
    }
  return distinct;
}

/// Colours in 1..k used neither on v nor on any neighbour, ascending.
inline std::vector<Colour> absent_colours(const Graph& g, const Colouring& c, Vertex v) {
  std::vector<char> used(static_cast<std::size_t>(c.palette()) + 1, 0);
  used[c[v]] = 1;
  for (Vertex w : g.neighbours(v)) used[c[w]] = 1;
  std::vector<Colour> out;
  for (Colour x = 1; x <= c.palette(); ++x)
    if (!used[x]) out.push_back(x);
  return out;
}

struct VertexState {
  enum class Kind { Locked, Free, Superfree };

  Kind kind = Kind::Free;
  /// For Superfree: the colours other than the top colour that v could take.
  std::vector<Colour> available;

  bool locked() const noexcept { return kind == Kind::Locked; }
  bool free() const noexcept { return kind != Kind::Locked; }
  bool superfree() const noexcept { return kind == Kind::Superfree; }
};

/// Locked when the neighbours of v show Delta distinct colours. Superfree when
/// some colour other than Delta+1 is missing from v's closed neighbourhood.
inline VertexState vertex_state(const Graph& g, const Colouring& c, Vertex v) {
  check_size(g, c);
  const int delta = g.max_degree();
  VertexState state;
  if (distinct_neighbour_colours(g, c, v) == delta) {
    state.kind = VertexState::Kind::Locked;
    return state;
  }
  for (Colour x : absent_colours(g, c, v))
    if (x != delta + 1) state.available.push_back(x);
  state.kind = state.available.empty() ? VertexState::Kind::Free : VertexState::Kind::Superfree;
  return state;
}

inline bool is_locked(const Graph& g, const Colouring& c, Vertex v) {
  return distinct_neighbour_colours(g, c, v) == g.max_degree();
}

/// Every vertex sees all other k-1 colours among its neighbours.
inline bool is_frozen(const Graph& g, const Colouring& c) {
  check_size(g, c);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < c.palette() - 1) return false;
    auto seen = distinct_neighbour_colours(g, c, v);
    bool own_seen = false;
    for (Vertex w : g.neighbours(v)) own_seen |= c[w] == c[v];
    if (seen - (own_seen ? 1 : 0) != c.palette() - 1) return false;
  }
  return true;
}

/// Every vertex coloured Delta+1 is locked, and so are all its neighbours.
inline bool is_reduced_form(const Graph& g, const Colouring& c) {
  check_size(g, c);
  const Colour top = g.max_degree() + 1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (c[v] != top) continue;
    if (!is_locked(g, c, v)) return false;
    for (Vertex w : g.neighbours(v))
      if (!is_locked(g, c, w)) return false;
  }
  return true;
}

enum class PathClass { None, NearlyLocked, FullyLocked, Nice };

inline std::string_view to_string(PathClass p) {
  switch (p) {
    case PathClass::None: return "None";
    case PathClass::NearlyLocked: return "NearlyLocked";
    case PathClass::FullyLocked: return "FullyLocked";
    case PathClass::Nice: return "Nice";
  }
  return "None";
}

/// Which vertices, besides the endvertices, may be locked on a nice path:
/// the endvertices' neighbours along the path, or all their neighbours in G.
enum class NiceReading { PathNeighbours, GraphNeighbours };

/// Strongest class of `path` under c: FullyLocked, then Nice, then NearlyLocked.
inline PathClass classify_path(const Graph& g, const Colouring& c, std::span<const Vertex> path,
                               NiceReading reading = NiceReading::PathNeighbours) {
  check_size(g, c);
  for (Vertex v : path)
    if (v < 0 || v >= g.order()) throw Error(ErrorCode::VertexOutOfRange, std::to_string(v));
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.adjacent(path[i], path[i + 1]))
      throw Error(ErrorCode::PathNotConnected, std::to_string(path[i]) + " and " +
                                                   std::to_string(path[i + 1]) + " not adjacent");
  {
    std::vector<Vertex> sorted(path.begin(), path.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorCode::PathNotConnected, "path repeats a vertex");
  }
  if (path.size() < 2) return PathClass::None;

  const Colour top = g.max_degree() + 1;
  const Vertex first = path.front();
  const Vertex last = path.back();
  if (c[first] != top || c[last] != top || !is_locked(g, c, first) || !is_locked(g, c, last))
    return PathClass::None;

  bool all_locked = true;
  bool any_free = false;
  bool only_near_ends_locked = true;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const bool locked = is_locked(g, c, path[i]);
    all_locked &= locked;
    any_free |= !locked;
    if (!locked || i == 0 || i + 1 == path.size()) continue;
    bool allowed;
    if (reading == NiceReading::PathNeighbours)
      allowed = i == 1 || i + 2 == path.size();
    else
      allowed = g.adjacent(path[i], first) || g.adjacent(path[i], last);
    only_near_ends_locked &= allowed;
  }
  if (all_locked) return PathClass::FullyLocked;
  if (any_free && only_near_ends_locked) return PathClass::Nice;
  return PathClass::NearlyLocked;
}

}  // namespace recolor
