#pragma once

// Text formats.
//   graph:    "v e", then e lines "u v" (u < v, ascending), LF endings.
//   matching: |M| lines "u v" (u < v, ascending) against a companion graph.
//   classes:  one line per class, "class i: u v, u v, ...".
//   trace:    JSON array of steps.

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "antiforce/construction.hpp"
#include "antiforce/generators.hpp"
#include "antiforce/matching.hpp"

namespace antiforce {

namespace detail {

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos) {
    lines.pop_back();
  }
  return lines;
}

// Exactly `count` non-negative decimal integers separated by blanks.
inline std::vector<std::uint64_t> parse_numbers(const std::string& line, std::size_t lineno,
                                                std::size_t count) {
  std::vector<std::uint64_t> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (true) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    std::uint64_t x = 0;
    auto [next, ec] = std::from_chars(p, end, x);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t')) {
      throw ParseError(lineno, "expected " + std::to_string(count) + " non-negative integers, got \"" +
                                   line + "\"");
    }
    out.push_back(x);
    p = next;
  }
  if (out.size() != count) {
    throw ParseError(lineno, "expected " + std::to_string(count) + " integers, got " +
                                 std::to_string(out.size()));
  }
  return out;
}

inline std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

inline std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// Edge lines may come in any order; the result is canonical. Duplicate edges,
/// loops, out-of-range ids and a wrong edge count are errors.
inline Graph parse_graph(std::string_view text) {
  auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty graph file");
  auto header = detail::parse_numbers(lines[0], 1, 2);
  const auto n = header[0];
  const auto e = header[1];
  if (n > (1u << 16)) throw ParseError(1, "vertex count too large");
  if (lines.size() - 1 != e) {
    throw ParseError(std::min(lines.size(), static_cast<std::size_t>(e) + 1) + 1,
                     "header announces " + std::to_string(e) + " edges, file has " +
                         std::to_string(lines.size() - 1));
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto uv = detail::parse_numbers(lines[i], i + 1, 2);
    if (uv[0] >= n || uv[1] >= n) throw ParseError(i + 1, "vertex id out of range");
    if (uv[0] == uv[1]) throw ParseError(i + 1, "loop");
    auto edge = make_edge(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
    if (std::find(seen.begin(), seen.end(), edge) != seen.end()) {
      throw ParseError(i + 1, "duplicate edge");
    }
    seen.push_back(edge);
    pairs.emplace_back(edge.u, edge.v);
  }
  return Graph(n, pairs);
}

inline Graph read_graph(std::istream& in) { return parse_graph(detail::read_all(in)); }

inline std::string format_matching(const PerfectMatching& m) {
  std::string out;
  for (auto [u, v] : m.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// Each line must be an edge of g; together the lines must cover every vertex
/// exactly once.
inline PerfectMatching parse_matching(std::string_view text, const Graph& g) {
  auto lines = detail::split_lines(text);
  const auto n = g.vertex_count();
  constexpr Vertex kFree = InducedSubgraph::kNoVertex;
  std::vector<Vertex> partner(n, kFree);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto uv = detail::parse_numbers(lines[i], i + 1, 2);
    if (uv[0] >= n || uv[1] >= n) throw ParseError(i + 1, "vertex id out of range");
    auto u = static_cast<Vertex>(uv[0]);
    auto v = static_cast<Vertex>(uv[1]);
    if (u == v || !g.adjacent(u, v)) throw ParseError(i + 1, "not an edge of the graph");
    if (partner[u] != kFree || partner[v] != kFree) throw ParseError(i + 1, "vertex matched twice");
    partner[u] = v;
    partner[v] = u;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (partner[v] == kFree) {
      throw ParseError(lines.size() + 1, "vertex " + std::to_string(v) + " is unmatched");
    }
  }
  return PerfectMatching(std::move(partner));
}

inline PerfectMatching read_matching(std::istream& in, const Graph& g) {
  return parse_matching(detail::read_all(in), g);
}

inline std::string format_classes(const LabeledClasses& classes) {
  std::string out;
  for (const auto& [id, edges] : classes) {
    out += "class " + std::to_string(id) + ":";
    bool first = true;
    for (auto [u, v] : edges) {
      out += first ? " " : ", ";
      out += std::to_string(u) + " " + std::to_string(v);
      first = false;
    }
    out += "\n";
  }
  return out;
}

inline LabeledClasses parse_classes(std::string_view text) {
  LabeledClasses out;
  auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto colon = line.find(':');
    if (line.rfind("class ", 0) != 0 || colon == std::string::npos) {
      throw ParseError(i + 1, "expected \"class i: u v, ...\"");
    }
    auto id = detail::parse_numbers(line.substr(6, colon - 6), i + 1, 1)[0];
    std::vector<Edge> edges;
    std::string rest = line.substr(colon + 1);
    std::size_t start = 0;
    while (start < rest.size() && rest.find_first_not_of(" \t", start) != std::string::npos) {
      auto comma = rest.find(',', start);
      if (comma == std::string::npos) comma = rest.size();
      auto uv = detail::parse_numbers(rest.substr(start, comma - start), i + 1, 2);
      if (uv[0] == uv[1]) throw ParseError(i + 1, "loop");
      edges.push_back(make_edge(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])));
      start = comma + 1;
    }
    if (!out.emplace(static_cast<int>(id), EdgeSet(std::move(edges))).second) {
      throw ParseError(i + 1, "class listed twice");
    }
  }
  return out;
}

// Trace JSON.

inline nlohmann::json step_to_json(const ExpansionStep& s) {
  using nlohmann::json;
  switch (s.kind) {
    case StepKind::seed:
      return json{{"kind", "seed"}};
    case StepKind::op_i:
      return json{{"kind", "op_i"},
                  {"e1", {s.e1.u, s.e1.v}},
                  {"e2", {s.e2.u, s.e2.v}},
                  {"choice", s.choice == PairingChoice::parallel ? "parallel" : "crossed"}};
    case StepKind::op_ii: {
      json right = json::array();
      for (const auto& r : s.right) right.push_back(step_to_json(r));
      json join = json::array();
      for (auto [u, w] : s.join) join.push_back({u, w});
      return json{{"kind", "op_ii"}, {"right", std::move(right)}, {"join", std::move(join)}};
    }
    case StepKind::relabel:
      return json{{"kind", "relabel"}, {"labels", s.labels}};
  }
  return {};
}

inline nlohmann::json trace_to_json(const std::vector<ExpansionStep>& steps) {
  auto out = nlohmann::json::array();
  for (const auto& s : steps) out.push_back(step_to_json(s));
  return out;
}

inline ExpansionStep step_from_json(const nlohmann::json& j) {
  ExpansionStep s;
  try {
    const auto kind = j.at("kind").get<std::string>();
    auto edge = [](const nlohmann::json& a) {
      if (!a.is_array() || a.size() != 2) throw InvalidInput("trace: edge must be [u, v]");
      return Edge{a[0].get<Vertex>(), a[1].get<Vertex>()};
    };
    if (kind == "seed") {
      s.kind = StepKind::seed;
    } else if (kind == "op_i") {
      s.kind = StepKind::op_i;
      s.e1 = edge(j.at("e1"));
      s.e2 = edge(j.at("e2"));
      const auto c = j.at("choice").get<std::string>();
      if (c != "parallel" && c != "crossed") throw InvalidInput("trace: unknown choice " + c);
      s.choice = c == "parallel" ? PairingChoice::parallel : PairingChoice::crossed;
    } else if (kind == "op_ii") {
      s.kind = StepKind::op_ii;
      for (const auto& r : j.at("right")) s.right.push_back(step_from_json(r));
      for (const auto& p : j.at("join")) {
        auto e = edge(p);
        s.join.emplace_back(e.u, e.v);
      }
    } else if (kind == "relabel") {
      s.kind = StepKind::relabel;
      s.labels = j.at("labels").get<std::vector<Vertex>>();
    } else {
      throw InvalidInput("trace: unknown step kind " + kind);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("trace: ") + e.what());
  }
  return s;
}

inline std::vector<ExpansionStep> trace_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("trace: expected a JSON array of steps");
  std::vector<ExpansionStep> steps;
  for (const auto& s : j) steps.push_back(step_from_json(s));
  return steps;
}

}  // namespace antiforce
