#pragma once

#include <cstdint>
#include <optional>

#include "mixsep/graph.hpp"

namespace mixsep {

/// How the walk entered the section it is currently in.
enum class Entry : std::uint8_t { WalkStart, Tail, Head, DottedEnd };

inline constexpr std::size_t kEntryCount = 4;

/// Finite quotient of a walk prefix: where it is, how its current section was
/// entered, and whether that section has met the conditioning set so far.
struct EngineState {
  NodeId at = 0;
  Entry entry = Entry::WalkStart;
  bool touched = false;

  friend bool operator==(const EngineState&, const EngineState&) = default;
};

/// Whether closing a section entered with `entry` through an edge whose mark
/// at the section is `exit` makes it a collider.
bool closes_as_collider(Entry entry, Mark exit);

Entry entry_from(Mark mark);

/// The state reached from `from` after traversing `inc` (an incidence of
/// from.at), or nothing when the step would close a section illegally.
std::optional<EngineState> step(const EngineState& from, const Incidence& inc, NodeSet given);

/// A ⊥ B | C query. Empty A or B is vacuously separated.
struct SeparationQuery {
  NodeSet lhs;
  NodeSet rhs;
  NodeSet given;
};

/// Is there a walk between i and j that is connecting given C?
/// Throws InvalidQuery when i == j or either endpoint lies in C.
bool connecting_walk_exists(const Graph& g, NodeId i, NodeId j, NodeSet given);

/// As above, returning one connecting walk when one exists.
std::optional<Walk> find_connecting_walk(const Graph& g, NodeId i, NodeId j, NodeSet given);

/// Every j ∉ C ∪ {i} joined to i by a connecting walk given C.
NodeSet connected_to(const Graph& g, NodeId i, NodeSet given);

/// Throws InvalidQuery when the three sets overlap.
bool separated(const Graph& g, const SeparationQuery& q);

/// Literal check of the connecting-walk definition through its sections.
bool is_connecting(const Graph& g, const Walk& w, NodeSet given);

// ---------------------------------------------------------------------------
// Independent oracles. Each decides the same question a different way and is
// only valid on its own graph class.

inline constexpr std::size_t kBruteForceLimit = 6;

/// Exhaustive walk enumeration, checked with is_connecting.
bool brute_force_connected(const Graph& g, NodeId i, NodeId j, NodeSet given,
                           std::size_t node_limit = kBruteForceLimit);

/// m-separation over simple paths; summary graphs only.
bool m_separated(const Graph& g, NodeId i, NodeId j, NodeSet given);

/// z-separation over simple paths; MAMPs only.
bool z_separated(const Graph& g, NodeId i, NodeId j, NodeSet given);

/// d-separation via the moral graph of An({i, j} ∪ C); DAGs only.
bool dag_d_separated(const Graph& g, NodeId i, NodeId j, NodeSet given);

/// Vertex-cut separation; UGs only.
bool ug_separated(const Graph& g, NodeId i, NodeId j, NodeSet given);

}  // namespace mixsep
