#include "mixsep/separation.hpp"

#include <array>
#include <deque>
#include <functional>
#include <string>
#include <vector>

#include "mixsep/classify.hpp"
#include "mixsep/error.hpp"

namespace mixsep {

namespace {

constexpr std::size_t kStatesPerNode = kEntryCount * 2;

std::size_t index_of(const EngineState& s) {
  return s.at * kStatesPerNode + static_cast<std::size_t>(s.entry) * 2 + (s.touched ? 1 : 0);
}

void check_pair(const Graph& g, NodeId i, NodeId j, NodeSet given) {
  g.require(i);
  g.require(j);
  g.require(given);
  if (i == j) throw Error(ErrorKind::InvalidQuery, "endpoints must differ");
  if (given.contains(i) || given.contains(j)) {
    throw Error(ErrorKind::InvalidQuery, "endpoints must lie outside the conditioning set");
  }
}

struct SearchResult {
  std::vector<bool> seen;
  std::vector<std::size_t> parent;
  std::vector<const Incidence*> via;
  std::optional<std::size_t> accepted;
};

// Breadth-first search over engine states starting at i. Stops early at the
// first accepting state at `stop_at` when given.
SearchResult search(const Graph& g, NodeId i, NodeSet given, std::optional<NodeId> stop_at) {
  const std::size_t total = g.size() * kStatesPerNode;
  SearchResult r{std::vector<bool>(total, false), std::vector<std::size_t>(total, 0),
                 std::vector<const Incidence*>(total, nullptr), std::nullopt};
  const EngineState start{i, Entry::WalkStart, false};
  std::deque<EngineState> queue{start};
  r.seen[index_of(start)] = true;
  while (!queue.empty()) {
    const EngineState cur = queue.front();
    queue.pop_front();
    const std::size_t cur_index = index_of(cur);
    for (const Incidence& inc : g.incident(cur.at)) {
      const auto next = step(cur, inc, given);
      if (!next) continue;
      const std::size_t idx = index_of(*next);
      if (r.seen[idx]) continue;
      r.seen[idx] = true;
      r.parent[idx] = cur_index;
      r.via[idx] = &inc;
      if (stop_at && next->at == *stop_at && !next->touched) {
        r.accepted = idx;
        return r;
      }
      queue.push_back(*next);
    }
  }
  return r;
}

// Section-level prefix check used to prune the brute-force enumeration: every
// closed section must already satisfy the definition, and an open section that
// can no longer become a collider must avoid C.
bool prefix_viable(const Graph& g, const Walk& w, NodeSet given) {
  const SectionDecomposition sections = sections_of(g, w);
  for (std::size_t s = 0; s + 1 < sections.size(); ++s) {
    const bool meets = section_nodes(w, sections[s]).intersects(given);
    if (sections[s].collider != meets) return false;
  }
  const Section& open = sections.back();
  const bool forced_non_collider = !open.left || *open.left == Mark::Tail;
  return !(forced_non_collider && section_nodes(w, open).intersects(given));
}

// State of a walk prefix, computed without rejecting anything.
EngineState raw_step(const EngineState& from, const Incidence& inc, NodeSet given) {
  if (inc.edge.kind == EdgeKind::Line) {
    return {inc.other, from.entry, from.touched || given.contains(inc.other)};
  }
  return {inc.other, entry_from(inc.far), given.contains(inc.other)};
}

bool brute_force_dfs(const Graph& g, NodeId j, NodeSet given, Walk& walk, EngineState state,
                     std::vector<bool>& on_stack) {
  if (walk.back() == j && is_connecting(g, walk, given)) return true;
  for (const Incidence& inc : g.incident(walk.back())) {
    const EngineState next = raw_step(state, inc, given);
    const std::size_t idx = index_of(next);
    if (on_stack[idx]) continue;
    walk.append(inc.edge);
    if (prefix_viable(g, walk, given)) {
      on_stack[idx] = true;
      const bool found = brute_force_dfs(g, j, given, walk, next, on_stack);
      on_stack[idx] = false;
      if (found) return true;
    }
    walk.nodes.pop_back();
    walk.edges.pop_back();
  }
  return false;
}

// Depth-first enumeration of simple paths from i to j. `accept_inner(prev,
// k, next)` judges inner node k given the edges on either side of it.
bool any_simple_path(
    const Graph& g, NodeId i, NodeId j,
    const std::function<bool(const Edge&, NodeId, const Edge&)>& accept_inner) {
  NodeSet visited = NodeSet::single(i);
  std::vector<const Incidence*> edges;
  std::function<bool(NodeId)> extend = [&](NodeId at) -> bool {
    for (const Incidence& inc : g.incident(at)) {
      if (visited.contains(inc.other)) continue;
      if (!edges.empty() && !accept_inner(edges.back()->edge, at, inc.edge)) continue;
      if (inc.other == j) return true;
      visited.insert(inc.other);
      edges.push_back(&inc);
      const bool found = extend(inc.other);
      edges.pop_back();
      visited.erase(inc.other);
      if (found) return true;
    }
    return false;
  };
  return extend(i);
}

}  // namespace

Entry entry_from(Mark mark) {
  switch (mark) {
    case Mark::Tail: return Entry::Tail;
    case Mark::Head: return Entry::Head;
    case Mark::DottedEnd: return Entry::DottedEnd;
    case Mark::LineEnd: break;
  }
  throw Error(ErrorKind::InvalidQuery, "a line never opens a new section");
}

bool closes_as_collider(Entry entry, Mark exit) {
  const bool entry_arrowish = entry == Entry::Head || entry == Entry::DottedEnd;
  const bool exit_arrowish = exit == Mark::Head || exit == Mark::DottedEnd;
  if (!entry_arrowish || !exit_arrowish) return false;
  return !(entry == Entry::DottedEnd && exit == Mark::DottedEnd);
}

std::optional<EngineState> step(const EngineState& from, const Incidence& inc, NodeSet given) {
  if (inc.edge.kind == EdgeKind::Line) {
    return EngineState{inc.other, from.entry, from.touched || given.contains(inc.other)};
  }
  if (closes_as_collider(from.entry, inc.near) != from.touched) return std::nullopt;
  return EngineState{inc.other, entry_from(inc.far), given.contains(inc.other)};
}

bool connecting_walk_exists(const Graph& g, NodeId i, NodeId j, NodeSet given) {
  check_pair(g, i, j, given);
  return search(g, i, given, j).accepted.has_value();
}

std::optional<Walk> find_connecting_walk(const Graph& g, NodeId i, NodeId j, NodeSet given) {
  check_pair(g, i, j, given);
  const SearchResult r = search(g, i, given, j);
  if (!r.accepted) return std::nullopt;
  std::vector<const Incidence*> steps;
  const std::size_t start = index_of(EngineState{i, Entry::WalkStart, false});
  for (std::size_t idx = *r.accepted; idx != start; idx = r.parent[idx]) steps.push_back(r.via[idx]);
  Walk w = Walk::single(i);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) w.append((*it)->edge);
  return w;
}

NodeSet connected_to(const Graph& g, NodeId i, NodeSet given) {
  g.require(i);
  g.require(given);
  if (given.contains(i)) throw Error(ErrorKind::InvalidQuery, "endpoint lies in the conditioning set");
  const SearchResult r = search(g, i, given, std::nullopt);
  NodeSet out;
  for (NodeId n = 0; n < g.size(); ++n) {
    if (n == i) continue;
    for (std::size_t e = 0; e < kEntryCount; ++e) {
      if (r.seen[n * kStatesPerNode + e * 2]) {
        out.insert(n);
        break;
      }
    }
  }
  return out;
}

bool separated(const Graph& g, const SeparationQuery& q) {
  g.require(q.lhs | q.rhs | q.given);
  if (q.lhs.intersects(q.rhs) || q.lhs.intersects(q.given) || q.rhs.intersects(q.given)) {
    throw Error(ErrorKind::InvalidQuery, "separation sets must be pairwise disjoint");
  }
  for (NodeId i : q.lhs) {
    if (connected_to(g, i, q.given).intersects(q.rhs)) return false;
  }
  return true;
}

bool is_connecting(const Graph& g, const Walk& w, NodeSet given) {
  for (const Section& s : sections_of(g, w)) {
    if (section_nodes(w, s).intersects(given) != s.collider) return false;
  }
  return true;
}

bool brute_force_connected(const Graph& g, NodeId i, NodeId j, NodeSet given,
                           std::size_t node_limit) {
  check_pair(g, i, j, given);
  if (g.size() > node_limit) {
    throw Error(ErrorKind::SizeLimit, "brute-force enumeration is limited to " +
                                          std::to_string(node_limit) + " nodes");
  }
  std::vector<bool> on_stack(g.size() * kStatesPerNode, false);
  const EngineState start{i, Entry::WalkStart, false};
  on_stack[index_of(start)] = true;
  Walk walk = Walk::single(i);
  return brute_force_dfs(g, j, given, walk, start, on_stack);
}

bool m_separated(const Graph& g, NodeId i, NodeId j, NodeSet given) {
  check_pair(g, i, j, given);
  require_class(g, ClassId::SG, "m-separation");
  const NodeSet an_given = given | ancestors(g, given);
  return !any_simple_path(g, i, j, [&](const Edge& prev, NodeId k, const Edge& next) {
    const bool collider = prev.mark_at(k) == Mark::Head && next.mark_at(k) == Mark::Head;
    return collider ? an_given.contains(k) : !given.contains(k);
  });
}

bool z_separated(const Graph& g, NodeId i, NodeId j, NodeSet given) {
  check_pair(g, i, j, given);
  require_class(g, ClassId::MAMP, "z-separation");
  const NodeSet an_given = given | ancestors(g, given);
  return !any_simple_path(g, i, j, [&](const Edge& prev, NodeId k, const Edge& next) {
    if (is_collider(prev.mark_at(k), next.mark_at(k))) return an_given.contains(k);
    if (!given.contains(k)) return true;
    if (prev.kind != EdgeKind::Dotted || next.kind != EdgeKind::Dotted) return false;
    const Relations r = relations(g, k);
    return !r.sp.empty() || !(r.pa - given).empty();
  });
}

bool dag_d_separated(const Graph& g, NodeId i, NodeId j, NodeSet given) {
  check_pair(g, i, j, given);
  require_class(g, ClassId::DAG, "d-separation");
  NodeSet keep = given;
  keep.insert(i);
  keep.insert(j);
  keep |= ancestors(g, keep);

  std::vector<NodeSet> moral(g.size());
  auto link = [&](NodeId a, NodeId b) {
    moral[a].insert(b);
    moral[b].insert(a);
  };
  for (NodeId n : keep) {
    const NodeSet parents = relations(g, n).pa;
    for (NodeId p : parents) {
      link(p, n);
      for (NodeId q : parents) {
        if (p < q) link(p, q);
      }
    }
  }
  NodeSet reached = NodeSet::single(i);
  std::vector<NodeId> stack{i};
  while (!stack.empty()) {
    const NodeId cur = stack.back();
    stack.pop_back();
    for (NodeId nb : moral[cur] - given - reached) {
      if (nb == j) return false;
      reached.insert(nb);
      stack.push_back(nb);
    }
  }
  return true;
}

bool ug_separated(const Graph& g, NodeId i, NodeId j, NodeSet given) {
  check_pair(g, i, j, given);
  require_class(g, ClassId::UG, "vertex-cut separation");
  NodeSet reached = NodeSet::single(i);
  std::vector<NodeId> stack{i};
  while (!stack.empty()) {
    const NodeId cur = stack.back();
    stack.pop_back();
    for (NodeId nb : relations(g, cur).ne - given - reached) {
      if (nb == j) return false;
      reached.insert(nb);
      stack.push_back(nb);
    }
  }
  return true;
}

}  // namespace mixsep
