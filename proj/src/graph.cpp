#include "mixsep/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <utility>

#include "mixsep/error.hpp"

namespace mixsep {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NodeNotFound: return "NodeNotFound";
    case ErrorKind::MalformedWalk: return "MalformedWalk";
    case ErrorKind::InvalidQuery: return "InvalidQuery";
    case ErrorKind::ClassViolation: return "ClassViolation";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnsatisfiableSpec: return "UnsatisfiableSpec";
  }
  return "?";
}

const char* to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Line: return "line";
    case EdgeKind::Arrow: return "arrow";
    case EdgeKind::Arc: return "arc";
    case EdgeKind::Dotted: return "dotted";
  }
  return "?";
}

const char* to_string(Mark mark) {
  switch (mark) {
    case Mark::Tail: return "tail";
    case Mark::Head: return "head";
    case Mark::LineEnd: return "line";
    case Mark::DottedEnd: return "dotted";
  }
  return "?";
}

int KindSet::size() const { return std::popcount(bits_); }

Edge Edge::make(NodeId a, NodeId b, EdgeKind kind) {
  if (kind != EdgeKind::Arrow && b < a) std::swap(a, b);
  return Edge{a, b, kind};
}

Mark Edge::mark_at(NodeId at) const {
  switch (kind) {
    case EdgeKind::Line: return Mark::LineEnd;
    case EdgeKind::Dotted: return Mark::DottedEnd;
    case EdgeKind::Arc: return Mark::Head;
    case EdgeKind::Arrow: return at == v ? Mark::Head : Mark::Tail;
  }
  return Mark::LineEnd;
}

Graph::Graph(std::vector<std::string> labels) {
  for (auto& l : labels) add_node(std::move(l));
}

Graph Graph::with_size(std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(std::to_string(i));
  return g;
}

NodeId Graph::add_node(std::string label) {
  if (labels_.size() >= kMaxNodes) {
    throw Error(ErrorKind::SizeLimit, "graphs are limited to 64 nodes");
  }
  if (find_node(label)) throw Error(ErrorKind::InvalidQuery, "duplicate node label '" + label + "'");
  labels_.push_back(std::move(label));
  adjacency_.emplace_back();
  return static_cast<NodeId>(labels_.size() - 1);
}

bool Graph::add_edge(NodeId a, NodeId b, EdgeKind kind) {
  require(a);
  require(b);
  if (a == b) throw Error(ErrorKind::InvalidQuery, "loops are not allowed (" + label(a) + ")");
  Edge e = Edge::make(a, b, kind);
  if (!edges_.insert(e).second) return false;
  adjacency_[e.u].push_back(Incidence{e.v, e.mark_at(e.u), e.mark_at(e.v), e});
  adjacency_[e.v].push_back(Incidence{e.u, e.mark_at(e.v), e.mark_at(e.u), e});
  return true;
}

bool Graph::add_edge(std::string_view a, std::string_view b, EdgeKind kind) {
  return add_edge(node(a), node(b), kind);
}

bool Graph::remove_edge(const Edge& e) {
  if (edges_.erase(e) == 0) return false;
  for (NodeId end : {e.u, e.v}) {
    auto& list = adjacency_[end];
    std::erase_if(list, [&](const Incidence& inc) { return inc.edge == e; });
  }
  return true;
}

const std::string& Graph::label(NodeId id) const {
  require(id);
  return labels_[id];
}

std::optional<NodeId> Graph::find_node(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<NodeId>(it - labels_.begin());
}

NodeId Graph::node(std::string_view label) const {
  if (auto id = find_node(label)) return *id;
  throw Error(ErrorKind::NodeNotFound, "unknown node '" + std::string(label) + "'");
}

NodeSet Graph::node_set(std::initializer_list<std::string_view> labels) const {
  NodeSet out;
  for (auto l : labels) out.insert(node(l));
  return out;
}

bool Graph::has_edge(NodeId a, NodeId b, EdgeKind kind) const {
  return edges_.contains(Edge::make(a, b, kind));
}

bool Graph::adjacent(NodeId a, NodeId b) const {
  for (const Incidence& inc : incident(a)) {
    if (inc.other == b) return true;
  }
  return false;
}

bool Graph::has_kind(EdgeKind kind) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.kind == kind; });
}

void Graph::require(NodeId id) const {
  if (id >= size()) {
    throw Error(ErrorKind::NodeNotFound, "node id " + std::to_string(id) + " out of range");
  }
}

void Graph::require(NodeSet set) const {
  if (!set.subset_of(nodes())) throw Error(ErrorKind::NodeNotFound, "node set exceeds graph");
}

Relations relations(const Graph& g, NodeId j) {
  g.require(j);
  Relations r;
  for (const Incidence& inc : g.incident(j)) {
    switch (inc.edge.kind) {
      case EdgeKind::Line: r.ne.insert(inc.other); break;
      case EdgeKind::Arc: r.sp.insert(inc.other); break;
      case EdgeKind::Dotted: r.pt.insert(inc.other); break;
      case EdgeKind::Arrow:
        if (inc.near == Mark::Head) {
          r.pa.insert(inc.other);
        } else {
          r.ch.insert(inc.other);
        }
        break;
    }
  }
  return r;
}

namespace {

// Nodes that reach `targets` by walks whose every edge passes `step`, where
// step(inc) says whether the edge may be traversed from inc.other to the
// owning node.
template <typename Step>
NodeSet reverse_reach(const Graph& g, NodeSet targets, Step step) {
  g.require(targets);
  NodeSet seen = targets;
  std::vector<NodeId> stack(targets.begin(), targets.end());
  while (!stack.empty()) {
    NodeId cur = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(cur)) {
      if (!seen.contains(inc.other) && step(inc)) {
        seen.insert(inc.other);
        stack.push_back(inc.other);
      }
    }
  }
  return seen - targets;
}

bool quotient_has_cycle(const Graph& g, KindSet merged) {
  const std::vector<int> comp = components(g, merged);
  const int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<int>> out(count);
  std::vector<int> indegree(count, 0);
  for (const Edge& e : g.edges()) {
    if (e.kind != EdgeKind::Arrow) continue;
    const int a = comp[e.u];
    const int b = comp[e.v];
    if (a == b) return true;
    out[a].push_back(b);
    ++indegree[b];
  }
  std::vector<int> ready;
  for (int c = 0; c < count; ++c) {
    if (indegree[c] == 0) ready.push_back(c);
  }
  int removed = 0;
  while (!ready.empty()) {
    int c = ready.back();
    ready.pop_back();
    ++removed;
    for (int d : out[c]) {
      if (--indegree[d] == 0) ready.push_back(d);
    }
  }
  return removed != count;
}

}  // namespace

NodeSet anteriors(const Graph& g, NodeSet a) {
  return reverse_reach(g, a, [](const Incidence& inc) {
    return inc.edge.kind == EdgeKind::Line || inc.edge.kind == EdgeKind::Dotted ||
           (inc.edge.kind == EdgeKind::Arrow && inc.near == Mark::Head);
  });
}

NodeSet ancestors(const Graph& g, NodeSet a) {
  return reverse_reach(g, a, [](const Incidence& inc) {
    return inc.edge.kind == EdgeKind::Arrow && inc.near == Mark::Head;
  });
}

std::vector<int> components(const Graph& g, KindSet kinds) {
  std::vector<int> comp(g.size(), -1);
  int next = 0;
  for (NodeId start = 0; start < g.size(); ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = next;
    std::vector<NodeId> stack{start};
    while (!stack.empty()) {
      NodeId cur = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.incident(cur)) {
        if (kinds.contains(inc.edge.kind) && comp[inc.other] < 0) {
          comp[inc.other] = next;
          stack.push_back(inc.other);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool has_semi_directed_cycle(const Graph& g) {
  return quotient_has_cycle(g, {EdgeKind::Line, EdgeKind::Dotted});
}

bool has_quasi_directed_cycle(const Graph& g) {
  return quotient_has_cycle(g, {EdgeKind::Line, EdgeKind::Dotted, EdgeKind::Arc});
}

bool has_directed_cycle(const Graph& g) { return quotient_has_cycle(g, {}); }

Graph induced_subgraph(const Graph& g, NodeSet d) {
  g.require(d);
  std::vector<NodeId> remap(g.size(), 0);
  Graph out;
  for (NodeId id : d) remap[id] = out.add_node(g.label(id));
  for (const Edge& e : g.edges()) {
    if (d.contains(e.u) && d.contains(e.v)) out.add_edge(remap[e.u], remap[e.v], e.kind);
  }
  return out;
}

bool Walk::is_path() const {
  NodeSet seen;
  for (NodeId n : nodes) {
    if (seen.contains(n)) return false;
    seen.insert(n);
  }
  return true;
}

void validate_walk(const Graph& g, const Walk& w) {
  if (w.nodes.empty() || w.nodes.size() != w.edges.size() + 1) {
    throw Error(ErrorKind::MalformedWalk, "walk needs exactly one more node than edges");
  }
  for (NodeId n : w.nodes) {
    if (n >= g.size()) throw Error(ErrorKind::MalformedWalk, "walk visits an unknown node");
  }
  for (std::size_t m = 0; m < w.edges.size(); ++m) {
    const Edge& e = w.edges[m];
    const NodeId a = w.nodes[m];
    const NodeId b = w.nodes[m + 1];
    if (!g.has_edge(e) || a == b || !e.has_endpoint(a) || e.other(a) != b) {
      throw Error(ErrorKind::MalformedWalk, "edge " + std::to_string(m + 1) +
                                                " does not join consecutive walk nodes");
    }
  }
}

bool is_collider(std::optional<Mark> left, std::optional<Mark> right) {
  if (!left || !right) return false;
  auto arrowish = [](Mark m) { return m == Mark::Head || m == Mark::DottedEnd; };
  if (!arrowish(*left) || !arrowish(*right)) return false;
  return !(*left == Mark::DottedEnd && *right == Mark::DottedEnd);
}

SectionDecomposition sections_of(const Graph& g, const Walk& w) {
  validate_walk(g, w);
  SectionDecomposition out;
  Section current;
  current.first = 0;
  for (std::size_t m = 0; m < w.edges.size(); ++m) {
    const Edge& e = w.edges[m];
    if (e.kind == EdgeKind::Line) continue;
    current.last = m;
    current.right = e.mark_at(w.nodes[m]);
    current.collider = is_collider(current.left, current.right);
    out.push_back(current);
    current = Section{};
    current.first = m + 1;
    current.left = e.mark_at(w.nodes[m + 1]);
  }
  current.last = w.nodes.size() - 1;
  current.right.reset();
  current.collider = false;
  out.push_back(current);
  return out;
}

NodeSet section_nodes(const Walk& w, const Section& s) {
  NodeSet out;
  for (std::size_t p = s.first; p <= s.last; ++p) out.insert(w.nodes[p]);
  return out;
}

}  // namespace mixsep
