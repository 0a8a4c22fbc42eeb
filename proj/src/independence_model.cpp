#include "mixsep/independence_model.hpp"

#include <algorithm>
#include <deque>

#include "mixsep/classify.hpp"
#include "mixsep/error.hpp"
#include "mixsep/separation.hpp"

namespace mixsep {

namespace {

constexpr unsigned kLhs = 1;
constexpr unsigned kRhs = 2;
constexpr unsigned kGiven = 3;

void require_size(std::size_t n, std::size_t bound, const char* what) {
  if (n > bound) {
    throw Error(ErrorKind::SizeLimit, std::string(what) + " is limited to " + std::to_string(bound) +
                                          " nodes (got " + std::to_string(n) + ")");
  }
}

int weight(const Triple& t) { return t.lhs.size() + t.rhs.size() + t.given.size(); }

// Calls fn(sub) for every non-empty subset of `set`.
template <typename Fn>
void for_each_nonempty_subset(NodeSet set, Fn&& fn) {
  for_each_subset(set, [&](NodeSet sub) {
    if (!sub.empty()) fn(sub);
  });
}

}  // namespace

IndependenceModel::IndependenceModel(std::vector<std::string> labels) : labels_(std::move(labels)) {
  require_size(labels_.size(), kModelHardLimit, "an independence model");
  bits_.assign(std::size_t{1} << (2 * labels_.size()), false);
}

void IndependenceModel::check(const Triple& t) const {
  if (!(t.lhs | t.rhs | t.given).subset_of(nodes())) {
    throw Error(ErrorKind::InvalidQuery, "statement mentions nodes outside the ground set");
  }
  if (!t.disjoint()) throw Error(ErrorKind::InvalidQuery, "statement sets must be disjoint");
}

std::size_t IndependenceModel::encode(const Triple& t) const {
  std::size_t idx = 0;
  for (NodeId v : t.lhs) idx |= std::size_t{kLhs} << (2 * v);
  for (NodeId v : t.rhs) idx |= std::size_t{kRhs} << (2 * v);
  for (NodeId v : t.given) idx |= std::size_t{kGiven} << (2 * v);
  return idx;
}

Triple IndependenceModel::decode(std::size_t index) const {
  Triple t;
  for (NodeId v = 0; v < size(); ++v) {
    switch ((index >> (2 * v)) & 3U) {
      case kLhs: t.lhs.insert(v); break;
      case kRhs: t.rhs.insert(v); break;
      case kGiven: t.given.insert(v); break;
      default: break;
    }
  }
  return t;
}

bool IndependenceModel::contains(const Triple& t) const {
  check(t);
  return t.trivial() || bits_[encode(t)];
}

bool IndependenceModel::insert(const Triple& t) {
  check(t);
  if (t.trivial()) return false;
  auto ref = bits_[encode(t)];
  if (ref) return false;
  ref = true;
  ++count_;
  return true;
}

std::vector<Triple> IndependenceModel::triples() const {
  std::vector<Triple> out;
  out.reserve(count_);
  for_each([&](const Triple& t) { out.push_back(t); });
  return out;
}

std::string to_string(Axiom axiom) { return "s" + std::to_string(static_cast<int>(axiom)); }

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (Axiom a : kAllAxioms) {
    const std::string canonical = to_string(a);
    if (name.size() == 2 && std::tolower(static_cast<unsigned char>(name[0])) == 's' &&
        name[1] == canonical[1]) {
      return a;
    }
  }
  return std::nullopt;
}

std::vector<AxiomViolation> check_axiom(const IndependenceModel& m, Axiom which,
                                        std::size_t limit) {
  std::vector<AxiomViolation> out;
  const std::size_t n = m.size();
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= 5;

  auto has = [&](NodeSet a, NodeSet b, NodeSet c) { return m.contains(Triple{a, b, c}); };
  for (std::size_t code = 0; code < total && out.size() < limit; ++code) {
    NodeSet a, b, c, d;
    std::size_t rest = code;
    for (NodeId v = 0; v < n; ++v, rest /= 5) {
      switch (rest % 5) {
        case 1: a.insert(v); break;
        case 2: b.insert(v); break;
        case 3: c.insert(v); break;
        case 4: d.insert(v); break;
        default: break;
      }
    }
    auto report = [&](Triple missing) {
      if (out.size() < limit && !m.contains(missing)) {
        out.push_back(AxiomViolation{which, a, b, c, d, missing});
      }
    };
    switch (which) {
      case Axiom::Symmetry:
        if (d.empty() && has(a, b, c)) report({b, a, c});
        break;
      case Axiom::Decomposition:
        if (has(a, b | d, c)) {
          report({a, b, c});
          report({a, d, c});
        }
        break;
      case Axiom::WeakUnion:
        if (has(a, b | d, c)) {
          report({a, b, c | d});
          report({a, d, c | b});
        }
        break;
      case Axiom::Contraction:
        if (has(a, b, c | d) && has(a, d, c)) report({a, b | d, c});
        if (has(a, b | d, c)) {
          report({a, b, c | d});
          report({a, d, c});
        }
        break;
      case Axiom::Intersection:
        if (has(a, b, c | d) && has(a, d, c | b)) report({a, b | d, c});
        break;
      case Axiom::Composition:
        if (has(a, b, c) && has(a, d, c)) report({a, b | d, c});
        break;
    }
  }
  return out;
}

IndependenceModel closure(const IndependenceModel& m, AxiomSet axioms, const Limits& limits) {
  require_size(m.size(), limits.closure_nodes, "closure");
  IndependenceModel out = m;
  std::deque<Triple> work;
  m.for_each([&](const Triple& t) { work.push_back(t); });
  auto add = [&](const Triple& t) {
    if (out.insert(t)) work.push_back(t);
  };
  auto has = [&](const Triple& t) { return out.contains(t); };

  const NodeSet all = m.nodes();
  const bool splits = axioms.contains(Axiom::Decomposition) || axioms.contains(Axiom::Contraction);
  const bool shifts = axioms.contains(Axiom::WeakUnion) || axioms.contains(Axiom::Contraction);

  while (!work.empty()) {
    const Triple t = work.front();
    work.pop_front();
    const NodeSet a = t.lhs;
    const NodeSet x = t.rhs;
    const NodeSet z = t.given;

    if (axioms.contains(Axiom::Symmetry)) add(t.swapped());

    // Consequences of ⟨A, B ∪ D | Z⟩ for each split of the right-hand side.
    if (splits || shifts) {
      for_each_nonempty_subset(x, [&](NodeSet b) {
        if (b == x) return;
        if (splits) add({a, b, z});
        if (shifts) add({a, b, z | (x - b)});
      });
    }

    if (axioms.contains(Axiom::Contraction)) {
      // t = ⟨A, B | C ∪ D⟩ as first premise, partner ⟨A, D | C⟩.
      for_each_nonempty_subset(z, [&](NodeSet d) {
        if (has({a, d, z - d})) add({a, x | d, z - d});
      });
      // t = ⟨A, D | C⟩ as second premise, partner ⟨A, B | C ∪ D⟩.
      for_each_nonempty_subset(all - a - x - z, [&](NodeSet b) {
        if (has({a, b, z | x})) add({a, b | x, z});
      });
    }

    if (axioms.contains(Axiom::Intersection)) {
      // t = ⟨A, B | C ∪ D⟩, partner ⟨A, D | C ∪ B⟩; both premises share this
      // shape, so treating t as the first one covers every pairing.
      for_each_nonempty_subset(z, [&](NodeSet d) {
        const NodeSet c = z - d;
        if (has({a, d, c | x})) add({a, x | d, c});
      });
    }

    if (axioms.contains(Axiom::Composition)) {
      for_each_nonempty_subset(all - a - x - z, [&](NodeSet d) {
        if (has({a, d, z})) add({a, x | d, z});
      });
    }
  }
  return out;
}

IndependenceModel marginalize(const IndependenceModel& m, NodeSet removed) {
  if (!removed.subset_of(m.nodes())) {
    throw Error(ErrorKind::NodeNotFound, "marginalized set exceeds the ground set");
  }
  std::vector<std::string> labels;
  std::vector<NodeId> remap(m.size(), 0);
  for (NodeId v : m.nodes() - removed) {
    remap[v] = static_cast<NodeId>(labels.size());
    labels.push_back(m.labels()[v]);
  }
  auto move = [&](NodeSet s) {
    NodeSet r;
    for (NodeId v : s) r.insert(remap[v]);
    return r;
  };
  IndependenceModel out(std::move(labels));
  m.for_each([&](const Triple& t) {
    if ((t.lhs | t.rhs | t.given).intersects(removed)) return;
    out.insert({move(t.lhs), move(t.rhs), move(t.given)});
  });
  return out;
}

IndependenceModel global_model(const Graph& g, const Limits& limits) {
  require_size(g.size(), std::min(limits.model_nodes, kModelHardLimit), "global_model");
  IndependenceModel out(g.labels());
  const NodeSet all = g.nodes();
  std::vector<NodeSet> reach(g.size());
  for_each_subset(all, [&](NodeSet given) {
    const NodeSet free = all - given;
    for (NodeId i : free) reach[i] = connected_to(g, i, given);
    for_each_subset(free, [&](NodeSet lhs) {
      if (lhs.empty()) return;
      NodeSet blocked = lhs | given;
      for (NodeId i : lhs) blocked |= reach[i];
      for_each_subset(all - blocked, [&](NodeSet rhs) {
        if (!rhs.empty()) out.insert({lhs, rhs, given});
      });
    });
  });
  return out;
}

IndependenceModel pairwise_statements(const Graph& g) {
  require_class(g, ClassId::CMG, "the pairwise Markov property");
  IndependenceModel out(g.labels());
  for (NodeId i = 0; i < g.size(); ++i) {
    for (NodeId j = i + 1; j < g.size(); ++j) {
      if (g.adjacent(i, j)) continue;
      const NodeSet pair{i, j};
      out.insert({NodeSet::single(i), NodeSet::single(j), anteriors(g, pair)});
    }
  }
  return out;
}

std::optional<Triple> first_difference(const IndependenceModel& a, const IndependenceModel& b) {
  if (a.labels() != b.labels()) {
    throw Error(ErrorKind::InvalidQuery, "models are over different ground sets");
  }
  std::optional<Triple> best;
  auto consider = [&](const Triple& t, const IndependenceModel& other) {
    if (other.contains(t)) return;
    if (!best || weight(t) < weight(*best)) best = t;
  };
  a.for_each([&](const Triple& t) { consider(t, b); });
  b.for_each([&](const Triple& t) { consider(t, a); });
  return best;
}

GlobalCheck satisfies_global(const IndependenceModel& m, const Graph& g, const Limits& limits) {
  if (m.labels() != g.labels()) {
    throw Error(ErrorKind::InvalidQuery, "model and graph have different node sets");
  }
  GlobalCheck result;
  global_model(g, limits).for_each([&](const Triple& t) {
    if (m.contains(t)) return;
    result.holds = false;
    if (!result.witness || weight(t) < weight(*result.witness)) result.witness = t;
  });
  return result;
}

Graph reorder_nodes(const Graph& g, const std::vector<std::string>& labels) {
  if (labels.size() != g.size()) {
    throw Error(ErrorKind::InvalidQuery, "graphs have different node sets");
  }
  Graph out(labels);
  std::vector<NodeId> remap(g.size(), 0);
  for (NodeId v = 0; v < g.size(); ++v) {
    const auto target = out.find_node(g.label(v));
    if (!target) throw Error(ErrorKind::InvalidQuery, "graphs have different node sets");
    remap[v] = *target;
  }
  for (const Edge& e : g.edges()) out.add_edge(remap[e.u], remap[e.v], e.kind);
  return out;
}

bool markov_equivalent(const Graph& g1, const Graph& g2, const Limits& limits) {
  const Graph aligned = reorder_nodes(g2, g1.labels());
  return global_model(g1, limits) == global_model(aligned, limits);
}

}  // namespace mixsep
