#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string_view>

#include "mixsep/graph.hpp"
#include "mixsep/text_io.hpp"

namespace mixsep::testing {

inline Graph g(std::string_view text) { return parse_graph(text); }

// Graph with all four edge kinds used for the j, h separation examples.
inline Graph four_kind_graph() {
  return g(R"(
j -> k
k <-> l
l -- r
r -- q
l -> p
h -> q
)");
}

// CMG where j and l cannot be separated although they are not adjacent.
inline Graph non_maximal_cmg() {
  return g(R"(
j <-> k
k -- p
l -> p
p -> q
q -> j
)");
}

/// Walk through the given labels; consecutive nodes must share exactly one edge.
inline Walk walk(const Graph& graph, std::initializer_list<std::string_view> labels) {
  auto it = labels.begin();
  Walk w = Walk::single(graph.node(*it));
  for (++it; it != labels.end(); ++it) {
    const NodeId next = graph.node(*it);
    std::optional<Edge> found;
    for (const Incidence& inc : graph.incident(w.back())) {
      if (inc.other != next) continue;
      if (found) throw std::invalid_argument("ambiguous step in test walk");
      found = inc.edge;
    }
    if (!found) throw std::invalid_argument("missing step in test walk");
    w.append(*found);
  }
  return w;
}

inline Graph path_12345() { return g("1 -- 2\n2 -- 3\n3 -- 4\n4 -- 5\n"); }

}  // namespace mixsep::testing
