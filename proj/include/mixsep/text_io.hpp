#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixsep/graph.hpp"
#include "mixsep/independence_model.hpp"

namespace mixsep {

// Graph files: one statement per line, `#` starts a comment.
//
//   node a        declares a (possibly isolated) node
//   a -- b        line
//   a -> b        arrow from a to b
//   a <-> b       arc
//   a .. b        dotted line
//
// Nodes are numbered in order of first appearance. Repeated edges collapse.

/// Throws ParseError with the offending line number.
Graph parse_graph(std::string_view text);

/// `node` lines for every node in id order, then edges in canonical order.
std::string serialize_graph(const Graph& g);

/// Edge token used in graph files: "--", "->", "<->", "..".
const char* edge_token(EdgeKind kind);

/// `a -[->]- b -[--]- c`; arrows traversed against their direction print as `<-`.
std::string format_walk(const Graph& g, const Walk& w);

/// Comma-joined labels sorted as strings, or `-` for the empty set.
std::string format_set(const std::vector<std::string>& labels, NodeSet set);

/// `A | B | C`
std::string format_triple(const std::vector<std::string>& labels, const Triple& t);

/// Parses `a,b` or `-` against the given labels; throws NodeNotFound.
NodeSet parse_set(const std::vector<std::string>& labels, std::string_view text);

// Model files: one `A | B | C` statement per line, optionally preceded by a
// `nodes a,b,c` line fixing the ground set and its order. Other labels are
// appended in order of first appearance.

IndependenceModel parse_model(std::string_view text);

/// Sorted statement lines, each newline-terminated. Trivial statements are
/// implicit and not listed.
std::string serialize_model(const IndependenceModel& m);

/// Sorted statement lines without newline.
std::vector<std::string> model_lines(const IndependenceModel& m);

}  // namespace mixsep
