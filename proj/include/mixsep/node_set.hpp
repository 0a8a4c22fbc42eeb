#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>

namespace mixsep {

using NodeId = std::uint32_t;

inline constexpr std::size_t kMaxNodes = 64;

/// Set of node ids below kMaxNodes, stored as a 64-bit mask.
class NodeSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = NodeId;
    using difference_type = std::ptrdiff_t;
    using pointer = const NodeId*;
    using reference = NodeId;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    NodeId operator*() const { return static_cast<NodeId>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}
  NodeSet(std::initializer_list<NodeId> ids) {
    for (NodeId id : ids) insert(id);
  }

  /// {0, ..., n-1}
  static constexpr NodeSet first(std::size_t n) {
    return NodeSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr NodeSet single(NodeId id) { return NodeSet(std::uint64_t{1} << id); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  constexpr bool contains(NodeId id) const { return (bits_ >> id) & 1U; }
  constexpr bool intersects(NodeSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr bool subset_of(NodeSet other) const { return (bits_ & ~other.bits_) == 0; }

  void insert(NodeId id) { bits_ |= std::uint64_t{1} << id; }
  void erase(NodeId id) { bits_ &= ~(std::uint64_t{1} << id); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  friend constexpr NodeSet operator|(NodeSet a, NodeSet b) { return NodeSet(a.bits_ | b.bits_); }
  friend constexpr NodeSet operator&(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & b.bits_); }
  friend constexpr NodeSet operator-(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & ~b.bits_); }
  NodeSet& operator|=(NodeSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  NodeSet& operator&=(NodeSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  NodeSet& operator-=(NodeSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  friend constexpr bool operator==(NodeSet, NodeSet) = default;
  friend constexpr auto operator<=>(NodeSet a, NodeSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Calls fn(sub) for every subset of `set`, including the empty set and `set`
/// itself, in increasing mask order.
template <typename Fn>
void for_each_subset(NodeSet set, Fn&& fn) {
  const std::uint64_t full = set.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(NodeSet(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

}  // namespace mixsep
