#include "mixsep/maximality.hpp"

#include <array>
#include <deque>
#include <stdexcept>
#include <vector>

#include "mixsep/classify.hpp"
#include "mixsep/error.hpp"
#include "mixsep/separation.hpp"

namespace mixsep {

namespace {

// Search state: the walk stands at `at`, inside an inner section entered
// through an arrowhead; `head_at_i` records the mark of the first edge at i.
struct Probe {
  NodeId at;
  bool head_at_i;
};

std::size_t index_of(const Probe& p) { return p.at * 2 + (p.head_at_i ? 1 : 0); }

struct Ending {
  std::size_t state;
  const Incidence* edge;
};

}  // namespace

std::optional<InducingWitness> find_primitive_inducing_walk(const Graph& g, NodeId i, NodeId j) {
  require_class(g, ClassId::CMG, "primitive inducing walks");
  g.require(i);
  g.require(j);
  if (i == j) throw Error(ErrorKind::InvalidQuery, "endpoints must differ");

  for (const Incidence& inc : g.incident(i)) {
    if (inc.other != j) continue;
    Walk w = Walk::single(i);
    w.append(inc.edge);
    return InducingWitness{i, j, w, inc.near == Mark::Head, inc.far == Mark::Head};
  }

  const NodeSet allowed = NodeSet{i, j} | anteriors(g, NodeSet{i, j});
  const std::size_t total = g.size() * 2;
  std::vector<bool> seen(total, false);
  std::vector<std::size_t> parent(total, 0);
  std::vector<const Incidence*> via(total, nullptr);
  std::vector<bool> is_root(total, false);
  // Accepting endings indexed by (head_at_i, head_at_j).
  std::array<std::array<std::optional<Ending>, 2>, 2> endings{};

  std::deque<Probe> queue;
  for (const Incidence& inc : g.incident(i)) {
    if (inc.edge.kind == EdgeKind::Line || inc.far != Mark::Head) continue;
    if (!allowed.contains(inc.other)) continue;
    const Probe p{inc.other, inc.near == Mark::Head};
    const std::size_t idx = index_of(p);
    if (seen[idx]) continue;
    seen[idx] = true;
    is_root[idx] = true;
    via[idx] = &inc;
    queue.push_back(p);
  }
  while (!queue.empty()) {
    const Probe cur = queue.front();
    queue.pop_front();
    const std::size_t cur_index = index_of(cur);
    for (const Incidence& inc : g.incident(cur.at)) {
      if (inc.edge.kind != EdgeKind::Line) {
        // Leaving the section: it must close as a collider.
        if (inc.near != Mark::Head) continue;
        if (inc.other == j) {
          auto& slot = endings[cur.head_at_i][inc.far == Mark::Head];
          if (!slot) slot = Ending{cur_index, &inc};
        }
        if (inc.far != Mark::Head) continue;
      }
      if (!allowed.contains(inc.other)) continue;
      const Probe next{inc.other, cur.head_at_i};
      const std::size_t idx = index_of(next);
      if (seen[idx]) continue;
      seen[idx] = true;
      parent[idx] = cur_index;
      via[idx] = &inc;
      queue.push_back(next);
    }
  }

  const std::array<std::pair<bool, bool>, 4> preference = {
      {{false, true}, {true, false}, {true, true}, {false, false}}};
  for (auto [hi, hj] : preference) {
    const auto& ending = endings[hi][hj];
    if (!ending) continue;
    std::vector<const Incidence*> steps{ending->edge};
    std::size_t idx = ending->state;
    while (true) {
      steps.push_back(via[idx]);
      if (is_root[idx]) break;
      idx = parent[idx];
    }
    Walk w = Walk::single(i);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) w.append((*it)->edge);
    return InducingWitness{i, j, std::move(w), hi, hj};
  }
  return std::nullopt;
}

bool is_primitive_inducing(const Graph& g, const Walk& w) {
  validate_walk(g, w);
  const NodeId i = w.front();
  const NodeId j = w.back();
  if (i == j || w.length() == 0) return false;
  if (w.length() == 1) return true;
  const SectionDecomposition sections = sections_of(g, w);
  if (sections.front().last != 0 || sections.back().first != w.nodes.size() - 1) return false;
  for (std::size_t s = 1; s + 1 < sections.size(); ++s) {
    if (!sections[s].collider) return false;
  }
  const NodeSet ends{i, j};
  const NodeSet allowed = ends | anteriors(g, ends);
  for (std::size_t p = 1; p + 1 < w.nodes.size(); ++p) {
    if (!allowed.contains(w.nodes[p])) return false;
  }
  return true;
}

std::optional<NodeSet> separator_for(const Graph& g, NodeId i, NodeId j) {
  require_class(g, ClassId::CMG, "separator_for");
  g.require(i);
  g.require(j);
  if (i == j || g.adjacent(i, j)) {
    throw Error(ErrorKind::InvalidQuery, "separator_for needs two distinct non-adjacent nodes");
  }
  const NodeSet candidate = anteriors(g, NodeSet{i, j});
  if (connecting_walk_exists(g, i, j, candidate)) return std::nullopt;
  return candidate;
}

MaximalityReport is_maximal(const Graph& g) {
  require_class(g, ClassId::CMG, "is_maximal");
  MaximalityReport report;
  for (NodeId i = 0; i < g.size(); ++i) {
    for (NodeId j = i + 1; j < g.size(); ++j) {
      if (g.adjacent(i, j)) continue;
      const bool inducing = find_primitive_inducing_walk(g, i, j).has_value();
      const bool separable = separator_for(g, i, j).has_value();
      if (inducing == separable) {
        throw std::logic_error("maximality characterisations disagree on " + g.label(i) + ", " +
                               g.label(j));
      }
      if (inducing && report.maximal) {
        report.maximal = false;
        report.offending = std::make_pair(i, j);
      }
    }
  }
  return report;
}

Graph maximalize(const Graph& g) {
  require_class(g, ClassId::CMG, "maximalize");
  Graph out = g;
  while (true) {
    std::vector<Edge> additions;
    for (NodeId i = 0; i < out.size(); ++i) {
      for (NodeId j = i + 1; j < out.size(); ++j) {
        if (out.adjacent(i, j)) continue;
        const auto witness = find_primitive_inducing_walk(out, i, j);
        if (!witness) continue;
        if (witness->head_at_i && witness->head_at_j) {
          additions.push_back(Edge::make(i, j, EdgeKind::Arc));
        } else if (witness->head_at_j) {
          additions.push_back(Edge::make(i, j, EdgeKind::Arrow));
        } else if (witness->head_at_i) {
          additions.push_back(Edge::make(j, i, EdgeKind::Arrow));
        } else {
          throw std::logic_error("primitive inducing walk without endpoint arrowheads between "
                                 "non-adjacent nodes");
        }
      }
    }
    if (additions.empty()) return out;
    for (const Edge& e : additions) out.add_edge(e);
  }
}

}  // namespace mixsep
