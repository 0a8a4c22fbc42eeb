#pragma once

#include <optional>
#include <utility>

#include "mixsep/graph.hpp"

namespace mixsep {

/// A primitive inducing walk between `i` and `j`: an ij edge, or a walk whose
/// inner sections are all colliders, whose endpoint sections are single
/// nodes, and whose inner nodes lie in Ant({i, j}).
struct InducingWitness {
  NodeId i = 0;
  NodeId j = 0;
  Walk walk;
  bool head_at_i = false;
  bool head_at_j = false;
};

/// Returns an ij edge when i and j are adjacent. For non-adjacent pairs the
/// search prefers walks with a single endpoint arrowhead, so the edge that
/// closes the walk is an arrow whenever one fits.
std::optional<InducingWitness> find_primitive_inducing_walk(const Graph& g, NodeId i, NodeId j);

/// Literal check of the three primitive-inducing conditions on a walk.
bool is_primitive_inducing(const Graph& g, const Walk& w);

struct MaximalityReport {
  bool maximal = true;
  /// A non-adjacent pair joined by a primitive inducing walk, when not maximal.
  std::optional<std::pair<NodeId, NodeId>> offending;
};

/// Evaluates both characterisations (no primitive inducing walk between
/// non-adjacent nodes; ant({i, j}) separates every non-adjacent pair) and
/// throws std::logic_error if they disagree.
MaximalityReport is_maximal(const Graph& g);

/// Adds the endpoint-identical edge for every primitive inducing walk between
/// non-adjacent nodes until none remain. Never adds a line.
Graph maximalize(const Graph& g);

/// ant({i, j}) when it separates i from j; none otherwise.
/// Throws InvalidQuery when i and j are adjacent.
std::optional<NodeSet> separator_for(const Graph& g, NodeId i, NodeId j);

}  // namespace mixsep
