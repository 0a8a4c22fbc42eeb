#pragma once

#include <cstdint>
#include <optional>

#include "mixsep/classify.hpp"
#include "mixsep/graph.hpp"

namespace mixsep {

struct GenSpec {
  std::size_t n = 1;
  ClassId target = ClassId::Any;
  /// Probability of attempting each (pair, kind) slot; arrows count once per
  /// orientation.
  double density = 0.5;
  std::uint64_t seed = 0;
};

/// Edge kinds a class may contain.
KindSet admissible_kinds(ClassId target);

/// Seeded random member of spec.target. Slots are visited in a shuffled order
/// and kept only while the graph stays in the class; MAMP targets are closed
/// under the dotted-triple condition after every accepted slot.
/// Throws UnsatisfiableSpec for n == 0, n > 64 or density outside [0, 1].
Graph random_graph(const GenSpec& spec);

/// Every graph on nodes "0".."n-1" whose edges use `kinds`, each (pair, kind)
/// slot present or absent independently; arrows have one slot per direction.
class GraphEnumerator {
 public:
  /// Throws SizeLimit when n > 4.
  GraphEnumerator(std::size_t n, KindSet kinds);

  std::uint64_t count() const { return std::uint64_t{1} << slots_.size(); }
  /// Graph number `index` in canonical order (index < count()).
  Graph at(std::uint64_t index) const;

  class iterator {
   public:
    iterator(const GraphEnumerator* owner, std::uint64_t index) : owner_(owner), index_(index) {}
    Graph operator*() const { return owner_->at(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    bool operator==(const iterator& o) const { return index_ == o.index_; }

   private:
    const GraphEnumerator* owner_;
    std::uint64_t index_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count()}; }

 private:
  std::size_t n_;
  std::vector<Edge> slots_;
};

inline constexpr std::size_t kEnumerationLimit = 4;

}  // namespace mixsep
