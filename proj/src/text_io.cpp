#include "mixsep/text_io.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "mixsep/error.hpp"

namespace mixsep {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
    if (pos == s.size()) break;
    std::size_t end = pos;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t' && s[end] != '\r') ++end;
    out.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Calls fn(line_number, content) for each non-empty line with comments removed.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) fn(number, line);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
}

NodeId intern(Graph& g, std::string_view label) {
  if (auto id = g.find_node(label)) return *id;
  return g.add_node(std::string(label));
}

std::optional<EdgeKind> parse_edge_token(std::string_view tok) {
  if (tok == "--") return EdgeKind::Line;
  if (tok == "->") return EdgeKind::Arrow;
  if (tok == "<->") return EdgeKind::Arc;
  if (tok == "..") return EdgeKind::Dotted;
  return std::nullopt;
}

}  // namespace

const char* edge_token(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Line: return "--";
    case EdgeKind::Arrow: return "->";
    case EdgeKind::Arc: return "<->";
    case EdgeKind::Dotted: return "..";
  }
  return "?";
}

Graph parse_graph(std::string_view text) {
  Graph g;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    const auto tokens = split_whitespace(line);
    if (tokens.size() == 2 && tokens[0] == "node") {
      intern(g, tokens[1]);
      return;
    }
    if (tokens.size() != 3) {
      throw ParseError(number, "expected `a <edge> b` or `node a`");
    }
    const auto kind = parse_edge_token(tokens[1]);
    if (!kind) throw ParseError(number, "unknown edge token '" + std::string(tokens[1]) + "'");
    if (tokens[0] == tokens[2]) throw ParseError(number, "loops are not allowed");
    const NodeId a = intern(g, tokens[0]);
    const NodeId b = intern(g, tokens[2]);
    g.add_edge(a, b, *kind);
  });
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  for (NodeId v = 0; v < g.size(); ++v) out << "node " << g.label(v) << '\n';
  for (const Edge& e : g.edges()) {
    out << g.label(e.u) << ' ' << edge_token(e.kind) << ' ' << g.label(e.v) << '\n';
  }
  return out.str();
}

std::string format_walk(const Graph& g, const Walk& w) {
  std::ostringstream out;
  out << g.label(w.nodes.front());
  for (std::size_t m = 0; m < w.edges.size(); ++m) {
    const Edge& e = w.edges[m];
    const bool backwards = e.kind == EdgeKind::Arrow && e.v == w.nodes[m];
    out << " -[" << (backwards ? "<-" : edge_token(e.kind)) << "]- " << g.label(w.nodes[m + 1]);
  }
  return out.str();
}

std::string format_set(const std::vector<std::string>& labels, NodeSet set) {
  if (set.empty()) return "-";
  std::vector<std::string> names;
  for (NodeId v : set) names.push_back(labels.at(v));
  std::sort(names.begin(), names.end());
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ',';
    out += n;
  }
  return out;
}

std::string format_triple(const std::vector<std::string>& labels, const Triple& t) {
  return format_set(labels, t.lhs) + " | " + format_set(labels, t.rhs) + " | " +
         format_set(labels, t.given);
}

NodeSet parse_set(const std::vector<std::string>& labels, std::string_view text) {
  NodeSet out;
  text = trim(text);
  if (text.empty() || text == "-") return out;
  for (std::string_view name : split(text, ',')) {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) {
      throw Error(ErrorKind::NodeNotFound, "unknown node '" + std::string(name) + "'");
    }
    out.insert(static_cast<NodeId>(it - labels.begin()));
  }
  return out;
}

IndependenceModel parse_model(std::string_view text) {
  struct Row {
    std::size_t line;
    std::array<std::string_view, 3> parts;
  };
  std::vector<std::string> labels;
  std::vector<Row> rows;
  auto note = [&](std::size_t number, std::string_view name) {
    if (name.empty() || name.find_first_of(" \t|") != std::string_view::npos) {
      throw ParseError(number, "bad node label '" + std::string(name) + "'");
    }
    if (std::find(labels.begin(), labels.end(), name) == labels.end()) labels.emplace_back(name);
  };
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    if (line.rfind("nodes", 0) == 0 && line.find('|') == std::string_view::npos) {
      const std::string_view rest = trim(line.substr(5));
      if (rest.empty()) return;
      for (std::string_view name : split(rest, ',')) note(number, name);
      return;
    }
    const auto parts = split(line, '|');
    if (parts.size() != 3) throw ParseError(number, "expected `A | B | C`");
    for (std::string_view part : parts) {
      if (part.empty()) throw ParseError(number, "empty set must be written as '-'");
      if (part == "-") continue;
      for (std::string_view name : split(part, ',')) note(number, name);
    }
    rows.push_back(Row{number, {parts[0], parts[1], parts[2]}});
  });

  IndependenceModel m(labels);
  for (const Row& row : rows) {
    const Triple t{parse_set(labels, row.parts[0]), parse_set(labels, row.parts[1]),
                   parse_set(labels, row.parts[2])};
    if (!t.disjoint()) throw ParseError(row.line, "statement sets overlap");
    m.insert(t);
  }
  return m;
}

std::vector<std::string> model_lines(const IndependenceModel& m) {
  std::vector<std::string> lines;
  m.for_each([&](const Triple& t) { lines.push_back(format_triple(m.labels(), t)); });
  std::sort(lines.begin(), lines.end());
  return lines;
}

std::string serialize_model(const IndependenceModel& m) {
  std::string out;
  for (const auto& line : model_lines(m)) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace mixsep
