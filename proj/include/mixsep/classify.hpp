#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mixsep/graph.hpp"

namespace mixsep {

/// Graph classes of the four-edge-type hierarchy.
enum class ClassId : std::uint8_t {
  UG,               // lines only
  BG,               // arcs only
  DG,               // dotted lines only
  DAG,              // arrows only, acyclic
  UCG,              // chain graph, line components
  BCG,              // chain graph, arc components
  DCG,              // chain graph, dotted components
  ChainGraph,
  RegressionGraph,
  MAMP,             // marginal AMP graph
  AADMG,            // alternative ADMG: arrows and dotted lines
  ADMG,
  SG,               // summary graph
  AG,               // ancestral graph
  AnG,              // anterial graph
  CMG,              // chain mixed graph
  Any,              // every graph; only meaningful as a generator target
};

inline constexpr std::size_t kClassCount = 16;  // excludes Any

const char* to_string(ClassId id);
std::optional<ClassId> parse_class(std::string_view name);
std::array<ClassId, kClassCount> all_classes();

/// Membership record over every class.
class GraphClass {
 public:
  bool has(ClassId id) const { return id == ClassId::Any || flags_[index(id)]; }
  void set(ClassId id, bool value) { flags_[index(id)] = value; }
  std::vector<ClassId> members() const;

  friend bool operator==(const GraphClass&, const GraphClass&) = default;

 private:
  static std::size_t index(ClassId id) { return static_cast<std::size_t>(id); }
  std::array<bool, kClassCount> flags_{};
};

/// Direct sub-class → super-class links of the hierarchy, as derived from the
/// class definitions. Read transitively.
const std::vector<std::pair<ClassId, ClassId>>& class_implications();

struct ChainDecomposition {
  std::vector<NodeSet> components;
  /// Edge kind inside each component; empty for singletons.
  std::vector<std::optional<EdgeKind>> kinds;
  std::vector<int> component_of;
  /// Arrows between components, as (from, to) component indices, deduplicated.
  std::vector<std::pair<int, int>> quotient;
};

struct NotAChainGraph {
  enum class Reason { MixedComponent, ArrowWithinComponent, QuotientCycle };
  Reason reason;
  std::string detail;
};

std::variant<ChainDecomposition, NotAChainGraph> chain_components(const Graph& g);

GraphClass classify(const Graph& g);

/// Membership in a single class, without computing the others where possible.
bool is_member(const Graph& g, ClassId id);

/// Throws ClassViolation unless g belongs to `id`. `what` names the caller.
void require_class(const Graph& g, ClassId id, std::string_view what);

/// Replaces every dotted line of a DG by a line.
Graph dg_to_ug(const Graph& g);

}  // namespace mixsep
