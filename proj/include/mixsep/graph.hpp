#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mixsep/node_set.hpp"

namespace mixsep {

/// The four edge types. Arrow is the only oriented one.
enum class EdgeKind : std::uint8_t { Line = 0, Arrow = 1, Arc = 2, Dotted = 3 };

inline constexpr EdgeKind kAllEdgeKinds[] = {EdgeKind::Line, EdgeKind::Arrow, EdgeKind::Arc,
                                             EdgeKind::Dotted};

const char* to_string(EdgeKind kind);

/// Small bitmask over EdgeKind.
class KindSet {
 public:
  constexpr KindSet() = default;
  constexpr KindSet(std::initializer_list<EdgeKind> kinds) {
    for (EdgeKind k : kinds) bits_ |= bit(k);
  }
  static constexpr KindSet all() { return KindSet(0xF); }

  constexpr bool contains(EdgeKind k) const { return (bits_ & bit(k)) != 0; }
  constexpr void insert(EdgeKind k) { bits_ |= bit(k); }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;
  friend constexpr bool operator==(KindSet, KindSet) = default;

 private:
  constexpr explicit KindSet(std::uint8_t bits) : bits_(bits) {}
  static constexpr std::uint8_t bit(EdgeKind k) { return std::uint8_t(1U << unsigned(k)); }
  std::uint8_t bits_ = 0;
};

/// The mark an edge presents at one of its endpoints.
enum class Mark : std::uint8_t { Tail, Head, LineEnd, DottedEnd };

const char* to_string(Mark mark);

/// Canonical edge. For Arrow, u is the tail and v the head; the symmetric
/// kinds are stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  EdgeKind kind = EdgeKind::Line;

  static Edge make(NodeId a, NodeId b, EdgeKind kind);

  bool has_endpoint(NodeId x) const { return x == u || x == v; }
  NodeId other(NodeId x) const { return x == u ? v : u; }
  /// Mark at endpoint `at`, which must be u or v.
  Mark mark_at(NodeId at) const;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// One edge as seen from one of its endpoints.
struct Incidence {
  NodeId other;
  Mark near;  // mark at the owning node
  Mark far;   // mark at `other`
  Edge edge;
};

/// Graph with lines, arrows, arcs and dotted lines. No loops; at most one edge
/// per (pair, kind), and per ordered pair for arrows. Node ids are dense.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> labels);
  /// Nodes labelled "0", ..., "n-1".
  static Graph with_size(std::size_t n);

  NodeId add_node(std::string label);
  /// Returns false when the edge was already present.
  bool add_edge(NodeId a, NodeId b, EdgeKind kind);
  bool add_edge(std::string_view a, std::string_view b, EdgeKind kind);
  bool add_edge(const Edge& e) { return add_edge(e.u, e.v, e.kind); }
  bool remove_edge(const Edge& e);

  std::size_t size() const { return labels_.size(); }
  NodeSet nodes() const { return NodeSet::first(size()); }
  const std::string& label(NodeId id) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<NodeId> find_node(std::string_view label) const;
  /// Throws NodeNotFound when the label is unknown.
  NodeId node(std::string_view label) const;
  NodeSet node_set(std::initializer_list<std::string_view> labels) const;

  const std::set<Edge>& edges() const { return edges_; }
  std::span<const Incidence> incident(NodeId id) const { return adjacency_.at(id); }
  bool has_edge(const Edge& e) const { return edges_.contains(e); }
  bool has_edge(NodeId a, NodeId b, EdgeKind kind) const;
  bool adjacent(NodeId a, NodeId b) const;
  bool has_kind(EdgeKind kind) const;

  /// Throws NodeNotFound unless every member of `set` is a node.
  void require(NodeSet set) const;
  void require(NodeId id) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> labels_;
  std::set<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

struct Relations {
  NodeSet ne;  // line neighbours
  NodeSet pa;  // arrow sources into the node
  NodeSet ch;  // arrow targets out of the node
  NodeSet sp;  // arc partners
  NodeSet pt;  // dotted partners
};

Relations relations(const Graph& g, NodeId j);

/// ant(A): nodes outside A with an anterior walk (lines, dotted lines and
/// forward arrows) into A.
NodeSet anteriors(const Graph& g, NodeSet a);
/// an(A): nodes outside A with a directed walk into A.
NodeSet ancestors(const Graph& g, NodeSet a);

bool has_semi_directed_cycle(const Graph& g);
bool has_quasi_directed_cycle(const Graph& g);
/// Has a cycle made of forward arrows only.
bool has_directed_cycle(const Graph& g);

/// Component index per node, connecting nodes through edges of `kinds`
/// (arrows count in either direction). Indices follow first node order.
std::vector<int> components(const Graph& g, KindSet kinds);

/// Node ids of D are renumbered in increasing order.
Graph induced_subgraph(const Graph& g, NodeSet d);

/// ⟨node0, edge1, node1, ..., edgeN, nodeN⟩ with explicit edge references.
struct Walk {
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;

  static Walk single(NodeId start) { return Walk{{start}, {}}; }

  NodeId front() const { return nodes.front(); }
  NodeId back() const { return nodes.back(); }
  std::size_t length() const { return edges.size(); }
  void append(const Edge& e) {
    nodes.push_back(e.other(nodes.back()));
    edges.push_back(e);
  }
  bool is_path() const;

  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Throws MalformedWalk unless every edge is in g and joins consecutive nodes.
void validate_walk(const Graph& g, const Walk& w);

/// A maximal run of lines on a walk, as positions [first, last] into
/// Walk::nodes. A missing flank mark means the section holds a walk endpoint.
struct Section {
  std::size_t first = 0;
  std::size_t last = 0;
  std::optional<Mark> left;
  std::optional<Mark> right;
  bool collider = false;

  bool endpoint() const { return !left || !right; }
};

using SectionDecomposition = std::vector<Section>;

/// Collider iff two arrowheads meet, or an arrowhead meets a dotted end.
bool is_collider(std::optional<Mark> left, std::optional<Mark> right);

SectionDecomposition sections_of(const Graph& g, const Walk& w);

/// Node set covered by a section.
NodeSet section_nodes(const Walk& w, const Section& s);

}  // namespace mixsep
