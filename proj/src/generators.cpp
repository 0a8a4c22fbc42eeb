#include "mixsep/generators.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "mixsep/error.hpp"

namespace mixsep {

namespace {

std::vector<Edge> slots_for(std::size_t n, KindSet kinds) {
  std::vector<Edge> slots;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      for (EdgeKind k : kAllEdgeKinds) {
        if (!kinds.contains(k)) continue;
        slots.push_back(Edge::make(i, j, k));
        if (k == EdgeKind::Arrow) slots.push_back(Edge::make(j, i, k));
      }
    }
  }
  return slots;
}

// Adds i..k whenever i..j..k and j has a spouse. Returns the added edges.
std::vector<Edge> close_dotted_triples(Graph& g) {
  std::vector<Edge> added;
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId j = 0; j < g.size(); ++j) {
      const Relations r = relations(g, j);
      if (r.sp.empty()) continue;
      for (NodeId i : r.pt) {
        for (NodeId k : r.pt) {
          if (i < k && g.add_edge(i, k, EdgeKind::Dotted)) {
            added.push_back(Edge::make(i, k, EdgeKind::Dotted));
            changed = true;
          }
        }
      }
    }
  }
  return added;
}

}  // namespace

KindSet admissible_kinds(ClassId target) {
  using K = EdgeKind;
  switch (target) {
    case ClassId::UG: return {K::Line};
    case ClassId::BG: return {K::Arc};
    case ClassId::DG: return {K::Dotted};
    case ClassId::DAG: return {K::Arrow};
    case ClassId::UCG: return {K::Line, K::Arrow};
    case ClassId::BCG: return {K::Arc, K::Arrow};
    case ClassId::DCG: return {K::Dotted, K::Arrow};
    case ClassId::RegressionGraph:
    case ClassId::CMG:
    case ClassId::SG:
    case ClassId::AG:
    case ClassId::AnG: return {K::Line, K::Arc, K::Arrow};
    case ClassId::ADMG: return {K::Arc, K::Arrow};
    case ClassId::AADMG: return {K::Dotted, K::Arrow};
    case ClassId::MAMP: return {K::Dotted, K::Arc, K::Arrow};
    case ClassId::ChainGraph:
    case ClassId::Any: return KindSet::all();
  }
  return KindSet::all();
}

Graph random_graph(const GenSpec& spec) {
  if (spec.n == 0 || spec.n > kMaxNodes) {
    throw Error(ErrorKind::UnsatisfiableSpec, "node count must lie in [1, 64]");
  }
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
    throw Error(ErrorKind::UnsatisfiableSpec, "density must lie in [0, 1]");
  }
  std::mt19937_64 rng(spec.seed);
  std::bernoulli_distribution attempt(spec.density);
  Graph g = Graph::with_size(spec.n);
  std::vector<Edge> slots = slots_for(spec.n, admissible_kinds(spec.target));
  std::shuffle(slots.begin(), slots.end(), rng);

  for (const Edge& slot : slots) {
    if (!attempt(rng)) continue;
    if (!g.add_edge(slot)) continue;
    std::vector<Edge> added{slot};
    if (spec.target == ClassId::MAMP) {
      for (const Edge& e : close_dotted_triples(g)) added.push_back(e);
    }
    if (!is_member(g, spec.target)) {
      for (const Edge& e : added) g.remove_edge(e);
    }
  }
  return g;
}

GraphEnumerator::GraphEnumerator(std::size_t n, KindSet kinds) : n_(n) {
  if (n > kEnumerationLimit) {
    throw Error(ErrorKind::SizeLimit, "exhaustive enumeration is limited to 4 nodes");
  }
  slots_ = slots_for(n, kinds);
}

Graph GraphEnumerator::at(std::uint64_t index) const {
  Graph g = Graph::with_size(n_);
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    if ((index >> s) & 1U) g.add_edge(slots_[s]);
  }
  return g;
}

}  // namespace mixsep
