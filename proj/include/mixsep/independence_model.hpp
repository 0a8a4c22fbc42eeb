#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mixsep/graph.hpp"

namespace mixsep {

/// ⟨A, B | C⟩ over the node ids of a model's ground set. Ordered: ⟨A,B|C⟩ and
/// ⟨B,A|C⟩ are distinct statements, tied together only by symmetry (S1).
struct Triple {
  NodeSet lhs;
  NodeSet rhs;
  NodeSet given;

  bool disjoint() const {
    return !lhs.intersects(rhs) && !lhs.intersects(given) && !rhs.intersects(given);
  }
  bool trivial() const { return lhs.empty() || rhs.empty(); }
  Triple swapped() const { return {rhs, lhs, given}; }

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Size bounds for the exponential model computations. The model bitmap
/// holds 4^n entries; closure work grows roughly like 8^n.
struct Limits {
  std::size_t model_nodes = 7;
  std::size_t closure_nodes = 6;
};

inline constexpr std::size_t kModelHardLimit = 12;

/// Finite set of independence statements over a fixed ground set. Statements
/// with an empty side are always members and never stored.
class IndependenceModel {
 public:
  IndependenceModel() = default;
  explicit IndependenceModel(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  NodeSet nodes() const { return NodeSet::first(size()); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Throws InvalidQuery for overlapping sets or nodes outside the ground set.
  bool contains(const Triple& t) const;
  /// Adds a non-trivial statement; returns whether it was new.
  bool insert(const Triple& t);
  /// Number of stored (non-trivial) statements.
  std::size_t count() const { return count_; }

  /// Stored statements in encoding order.
  std::vector<Triple> triples() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t idx = 0; idx < bits_.size(); ++idx) {
      if (bits_[idx]) fn(decode(idx));
    }
  }

  friend bool operator==(const IndependenceModel& a, const IndependenceModel& b) {
    return a.labels_ == b.labels_ && a.bits_ == b.bits_;
  }

 private:
  void check(const Triple& t) const;
  std::size_t encode(const Triple& t) const;
  Triple decode(std::size_t index) const;

  std::vector<std::string> labels_;
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

// ---------------------------------------------------------------------------
// Axioms

enum class Axiom : std::uint8_t {
  Symmetry = 1,      // S1
  Decomposition,     // S2
  WeakUnion,         // S3
  Contraction,       // S4
  Intersection,      // S5
  Composition,       // S6
};

inline constexpr std::array<Axiom, 6> kAllAxioms = {Axiom::Symmetry,    Axiom::Decomposition,
                                                    Axiom::WeakUnion,   Axiom::Contraction,
                                                    Axiom::Intersection, Axiom::Composition};

/// "s1".."s6"
std::string to_string(Axiom axiom);
std::optional<Axiom> parse_axiom(std::string_view name);

class AxiomSet {
 public:
  AxiomSet() = default;
  AxiomSet(std::initializer_list<Axiom> axioms) {
    for (Axiom a : axioms) insert(a);
  }
  static AxiomSet all() { return {kAllAxioms.begin(), kAllAxioms.end()}; }
  template <typename It>
  AxiomSet(It first, It last) {
    for (; first != last; ++first) insert(*first);
  }
  void insert(Axiom a) { bits_ |= std::uint8_t(1U << unsigned(a)); }
  bool contains(Axiom a) const { return (bits_ >> unsigned(a)) & 1U; }

 private:
  std::uint8_t bits_ = 0;
};

/// One instantiation of an axiom whose premises hold but whose conclusion
/// `missing` is absent. D is unused by symmetry.
struct AxiomViolation {
  Axiom axiom;
  NodeSet a, b, c, d;
  Triple missing;
};

/// All violations of `which` over disjoint A, B, C, D, up to `limit`.
std::vector<AxiomViolation> check_axiom(const IndependenceModel& m, Axiom which,
                                        std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Least model containing m that is closed under `axioms`.
IndependenceModel closure(const IndependenceModel& m, AxiomSet axioms, const Limits& limits = {});

/// Keeps the statements that avoid `removed`, re-indexed over V \ removed.
IndependenceModel marginalize(const IndependenceModel& m, NodeSet removed);

// ---------------------------------------------------------------------------
// Graph-induced models

/// J(G): every ⟨A, B | C⟩ with A ⊥ B | C.
IndependenceModel global_model(const Graph& g, const Limits& limits = {});

/// ⟨i, j | ant({i, j})⟩ for each non-adjacent pair i < j of a CMG.
IndependenceModel pairwise_statements(const Graph& g);

struct GlobalCheck {
  bool holds = true;
  /// A separation of the graph that the model lacks, when one exists.
  std::optional<Triple> witness;
};

GlobalCheck satisfies_global(const IndependenceModel& m, const Graph& g, const Limits& limits = {});

/// Statement in exactly one of the two models, smallest first; none when equal.
std::optional<Triple> first_difference(const IndependenceModel& a, const IndependenceModel& b);

/// Relabels g2 onto g1's node order; throws InvalidQuery when the label sets differ.
bool markov_equivalent(const Graph& g1, const Graph& g2, const Limits& limits = {});

/// g with its nodes reordered to follow `labels` (same label set required).
Graph reorder_nodes(const Graph& g, const std::vector<std::string>& labels);

}  // namespace mixsep
