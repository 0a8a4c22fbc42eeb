#include "mixsep/classify.hpp"

#include <algorithm>
#include <set>

#include "mixsep/error.hpp"

namespace mixsep {

namespace {

constexpr std::array<const char*, kClassCount + 1> kNames = {
    "UG",  "BG",    "DG",   "DAG", "UCG", "BCG", "DCG", "CG",  "RG",
    "MAMP", "AADMG", "ADMG", "SG",  "AG",  "AnG", "CMG", "ANY"};

KindSet kinds_present(const Graph& g) {
  KindSet out;
  for (const Edge& e : g.edges()) out.insert(e.kind);
  return out;
}

bool only(const Graph& g, KindSet allowed) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return allowed.contains(e.kind); });
}

// No arrowhead (arrow head or arc end) at a node that is an endpoint of a line.
bool no_head_at_lines(const Graph& g) {
  for (NodeId n = 0; n < g.size(); ++n) {
    bool line = false;
    bool head = false;
    for (const Incidence& inc : g.incident(n)) {
      line = line || inc.edge.kind == EdgeKind::Line;
      head = head || inc.near == Mark::Head;
    }
    if (line && head) return false;
  }
  return true;
}

template <typename Closure>
bool arcs_unrelated(const Graph& g, Closure closure) {
  for (const Edge& e : g.edges()) {
    if (e.kind != EdgeKind::Arc) continue;
    if (closure(g, NodeSet::single(e.v)).contains(e.u)) return false;
    if (closure(g, NodeSet::single(e.u)).contains(e.v)) return false;
  }
  return true;
}

bool is_cmg(const Graph& g) { return !g.has_kind(EdgeKind::Dotted) && !has_semi_directed_cycle(g); }

bool is_sg(const Graph& g) { return is_cmg(g) && no_head_at_lines(g); }

bool mamp_no_dotted_arc_cycle(const Graph& g) {
  const std::vector<int> dotted = components(g, {EdgeKind::Dotted});
  for (const Edge& e : g.edges()) {
    if (e.kind == EdgeKind::Arc && dotted[e.u] == dotted[e.v]) return false;
  }
  return true;
}

bool mamp_dotted_closure(const Graph& g) {
  for (NodeId j = 0; j < g.size(); ++j) {
    const Relations r = relations(g, j);
    if (r.sp.empty()) continue;
    for (NodeId i : r.pt) {
      for (NodeId k : r.pt) {
        if (i < k && !g.has_edge(i, k, EdgeKind::Dotted)) return false;
      }
    }
  }
  return true;
}

bool is_mamp(const Graph& g) {
  return !g.has_kind(EdgeKind::Line) && !has_quasi_directed_cycle(g) &&
         mamp_no_dotted_arc_cycle(g) && mamp_dotted_closure(g);
}

bool chain_kinds_within(const ChainDecomposition& d, EdgeKind kind) {
  return std::all_of(d.kinds.begin(), d.kinds.end(),
                     [&](const std::optional<EdgeKind>& k) { return !k || *k == kind; });
}

}  // namespace

const char* to_string(ClassId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<ClassId> parse_class(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    std::string_view candidate = kNames[i];
    if (candidate.size() != name.size()) continue;
    if (std::equal(candidate.begin(), candidate.end(), name.begin(), [](char a, char b) {
          return std::tolower(static_cast<unsigned char>(a)) ==
                 std::tolower(static_cast<unsigned char>(b));
        })) {
      return static_cast<ClassId>(i);
    }
  }
  return std::nullopt;
}

std::array<ClassId, kClassCount> all_classes() {
  std::array<ClassId, kClassCount> out{};
  for (std::size_t i = 0; i < kClassCount; ++i) out[i] = static_cast<ClassId>(i);
  return out;
}

std::vector<ClassId> GraphClass::members() const {
  std::vector<ClassId> out;
  for (ClassId id : all_classes()) {
    if (has(id)) out.push_back(id);
  }
  return out;
}

const std::vector<std::pair<ClassId, ClassId>>& class_implications() {
  using C = ClassId;
  static const std::vector<std::pair<ClassId, ClassId>> links = {
      {C::UG, C::UCG},          {C::UG, C::RegressionGraph}, {C::BG, C::BCG},
      {C::DG, C::DCG},          {C::DG, C::AADMG},           {C::DAG, C::UCG},
      {C::DAG, C::BCG},         {C::DAG, C::DCG},            {C::DAG, C::ADMG},
      {C::DAG, C::AADMG},       {C::UCG, C::ChainGraph},     {C::BCG, C::ChainGraph},
      {C::DCG, C::ChainGraph},  {C::UCG, C::CMG},            {C::UCG, C::AnG},
      {C::BCG, C::RegressionGraph}, {C::RegressionGraph, C::ChainGraph},
      {C::RegressionGraph, C::AG},  {C::DCG, C::MAMP},       {C::ADMG, C::SG},
      {C::AG, C::SG},           {C::AG, C::AnG},             {C::SG, C::CMG},
      {C::AnG, C::CMG},
  };
  return links;
}

std::variant<ChainDecomposition, NotAChainGraph> chain_components(const Graph& g) {
  using Reason = NotAChainGraph::Reason;
  ChainDecomposition d;
  d.component_of = components(g, {EdgeKind::Line, EdgeKind::Arc, EdgeKind::Dotted});
  const int count =
      d.component_of.empty() ? 0 : *std::max_element(d.component_of.begin(), d.component_of.end()) + 1;
  d.components.assign(count, NodeSet{});
  d.kinds.assign(count, std::nullopt);
  for (NodeId n = 0; n < g.size(); ++n) d.components[d.component_of[n]].insert(n);

  std::set<std::pair<int, int>> quotient;
  for (const Edge& e : g.edges()) {
    const int a = d.component_of[e.u];
    const int b = d.component_of[e.v];
    if (e.kind == EdgeKind::Arrow) {
      if (a == b) {
        return NotAChainGraph{Reason::ArrowWithinComponent,
                              "arrow " + g.label(e.u) + " -> " + g.label(e.v) +
                                  " lies inside a chain component"};
      }
      quotient.insert({a, b});
      continue;
    }
    if (d.kinds[a] && *d.kinds[a] != e.kind) {
      return NotAChainGraph{Reason::MixedComponent, "chain component containing " + g.label(e.u) +
                                                        " mixes " + to_string(*d.kinds[a]) +
                                                        " and " + to_string(e.kind) + " edges"};
    }
    d.kinds[a] = e.kind;
  }
  d.quotient.assign(quotient.begin(), quotient.end());

  std::vector<int> indegree(count, 0);
  for (auto [a, b] : d.quotient) ++indegree[b];
  std::vector<int> ready;
  for (int c = 0; c < count; ++c) {
    if (indegree[c] == 0) ready.push_back(c);
  }
  int removed = 0;
  while (!ready.empty()) {
    const int c = ready.back();
    ready.pop_back();
    ++removed;
    for (auto [a, b] : d.quotient) {
      if (a == c && --indegree[b] == 0) ready.push_back(b);
    }
  }
  if (removed != count) {
    return NotAChainGraph{Reason::QuotientCycle, "chain components form a directed cycle"};
  }
  return d;
}

GraphClass classify(const Graph& g) {
  using C = ClassId;
  GraphClass out;
  const KindSet present = kinds_present(g);
  const bool directed_cycle = has_directed_cycle(g);

  out.set(C::UG, only(g, {EdgeKind::Line}));
  out.set(C::BG, only(g, {EdgeKind::Arc}));
  out.set(C::DG, only(g, {EdgeKind::Dotted}));
  out.set(C::DAG, only(g, {EdgeKind::Arrow}) && !directed_cycle);

  const auto chain = chain_components(g);
  if (const auto* d = std::get_if<ChainDecomposition>(&chain)) {
    out.set(C::ChainGraph, true);
    out.set(C::UCG, chain_kinds_within(*d, EdgeKind::Line));
    out.set(C::BCG, chain_kinds_within(*d, EdgeKind::Arc));
    out.set(C::DCG, chain_kinds_within(*d, EdgeKind::Dotted));
    out.set(C::RegressionGraph, !present.contains(EdgeKind::Dotted) && no_head_at_lines(g));
  }

  const bool cmg = is_cmg(g);
  const bool sg = cmg && no_head_at_lines(g);
  out.set(C::CMG, cmg);
  out.set(C::SG, sg);
  out.set(C::AG, sg && arcs_unrelated(g, ancestors));
  out.set(C::AnG, cmg && arcs_unrelated(g, anteriors));
  out.set(C::ADMG, sg && !present.contains(EdgeKind::Line));
  out.set(C::AADMG, only(g, {EdgeKind::Arrow, EdgeKind::Dotted}) && !directed_cycle);
  out.set(C::MAMP, is_mamp(g));
  return out;
}

bool is_member(const Graph& g, ClassId id) {
  switch (id) {
    case ClassId::Any: return true;
    case ClassId::CMG: return is_cmg(g);
    case ClassId::SG: return is_sg(g);
    case ClassId::MAMP: return is_mamp(g);
    case ClassId::UG: return only(g, {EdgeKind::Line});
    case ClassId::DG: return only(g, {EdgeKind::Dotted});
    case ClassId::DAG: return only(g, {EdgeKind::Arrow}) && !has_directed_cycle(g);
    default: return classify(g).has(id);
  }
}

void require_class(const Graph& g, ClassId id, std::string_view what) {
  if (!is_member(g, id)) {
    throw Error(ErrorKind::ClassViolation,
                std::string(what) + " requires a graph of class " + to_string(id));
  }
}

Graph dg_to_ug(const Graph& g) {
  require_class(g, ClassId::DG, "dg_to_ug");
  Graph out(g.labels());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v, EdgeKind::Line);
  return out;
}

}  // namespace mixsep
