// Acceptance suite: one PASS/FAIL line per criterion A1..A11.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "mixsep/classify.hpp"
#include "mixsep/generators.hpp"
#include "mixsep/independence_model.hpp"
#include "mixsep/maximality.hpp"
#include "mixsep/separation.hpp"
#include "mixsep/text_io.hpp"

using namespace mixsep;
using namespace mixsep::testing;

namespace {

// Collects mismatches; keeps the first one for the report.
struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first;
  std::string note;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = describe();
  }
};

template <typename Fn>
void for_each_query(const Graph& a, Fn&& fn) {
  for (NodeId i = 0; i < a.size(); ++i) {
    for (NodeId j = 0; j < a.size(); ++j) {
      if (i == j) continue;
      for_each_subset(a.nodes() - NodeSet{i, j}, [&](NodeSet c) { fn(i, j, c); });
    }
  }
}

std::string describe(const Graph& a, NodeId i, NodeId j, NodeSet c) {
  return a.label(i) + " _|_ " + a.label(j) + " | " + format_set(a.labels(), c) + " in\n" +
         serialize_graph(a);
}

// Compares the engine with an oracle on every query of the graph.
void against_oracle(Tally& t, const Graph& a,
                    const std::function<bool(const Graph&, NodeId, NodeId, NodeSet)>& oracle_separated) {
  for_each_query(a, [&](NodeId i, NodeId j, NodeSet c) {
    const bool engine = !connecting_walk_exists(a, i, j, c);
    t.expect(engine == oracle_separated(a, i, j, c), [&] { return describe(a, i, j, c); });
  });
}

std::size_t small_n(std::uint64_t seed, std::size_t max) { return 3 + seed % (max - 2); }

void a1(Tally& t) {
  const GraphEnumerator all(3, KindSet::all());
  for (const Graph& a : all) {
    for_each_query(a, [&](NodeId i, NodeId j, NodeSet c) {
      t.expect(connecting_walk_exists(a, i, j, c) == brute_force_connected(a, i, j, c),
               [&] { return describe(a, i, j, c); });
    });
  }
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const double density = 0.1 + 0.05 * static_cast<double>(seed % 4);
    const Graph a = random_graph({5, ClassId::Any, density, seed});
    for_each_query(a, [&](NodeId i, NodeId j, NodeSet c) {
      t.expect(connecting_walk_exists(a, i, j, c) == brute_force_connected(a, i, j, c),
               [&] { return describe(a, i, j, c); });
    });
  }
}

void a2(Tally& t) {
  const Graph f2 = four_kind_graph();
  auto sep = [](const Graph& a, std::string_view i, std::string_view j,
                std::initializer_list<std::string_view> c) {
    return !connecting_walk_exists(a, a.node(i), a.node(j), a.node_set(c));
  };
  t.expect(!sep(f2, "j", "h", {"k", "l"}), [] { return std::string("four_kind: j,h | k,l should connect"); });
  t.expect(!sep(f2, "j", "h", {"k", "p"}), [] { return std::string("four_kind: j,h | k,p should connect"); });
  t.expect(sep(f2, "j", "h", {"l"}), [] { return std::string("four_kind: j,h | l should separate"); });
  t.expect(sep(f2, "j", "h", {"k"}), [] { return std::string("four_kind: j,h | k should separate"); });

  const Graph f4 = non_maximal_cmg();
  const NodeId j = f4.node("j");
  const NodeId l = f4.node("l");
  int subsets = 0;
  for_each_subset(f4.node_set({"k", "p", "q"}), [&](NodeSet c) {
    ++subsets;
    t.expect(connecting_walk_exists(f4, j, l, c),
             [&] { return "non_maximal: j,l | " + format_set(f4.labels(), c) + " should connect"; });
  });
  t.expect(subsets == 8, [] { return std::string("non_maximal: expected 8 conditioning sets"); });

  const auto w = find_primitive_inducing_walk(f4, j, l);
  t.expect(w && w->walk == walk(f4, {"j", "k", "p", "l"}), [&] {
    return "non_maximal: inducing walk " + (w ? format_walk(f4, w->walk) : std::string("none"));
  });

  Graph expected = f4;
  expected.add_edge("l", "j", EdgeKind::Arrow);
  const Graph m = maximalize(f4);
  t.expect(m == expected, [&] { return "non_maximal: maximalize gave\n" + serialize_graph(m); });
  t.expect(is_maximal(m).maximal, [] { return std::string("non_maximal: result not maximal"); });
  t.expect(markov_equivalent(f4, m), [] { return std::string("non_maximal: result not Markov equivalent"); });
}

void a3(Tally& t) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    against_oracle(t, random_graph({small_n(seed, 5), ClassId::SG, 0.4, seed}), m_separated);
  }
}

void a4(Tally& t) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    against_oracle(t, random_graph({small_n(seed, 5), ClassId::MAMP, 0.4, seed}), z_separated);
  }
}

void a5(Tally& t) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    against_oracle(t, random_graph({small_n(seed, 6), ClassId::DAG, 0.4, seed}), dag_d_separated);
  }
}

void a6(Tally& t) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    against_oracle(t, random_graph({small_n(seed, 6), ClassId::UG, 0.4, seed}), ug_separated);
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph dg = random_graph({small_n(seed, 6), ClassId::DG, 0.4, seed});
    const auto diff = first_difference(global_model(dg), global_model(dg_to_ug(dg)));
    t.expect(!diff, [&] { return "DG and its UG differ on " + format_triple(dg.labels(), *diff) +
                                 " in\n" + serialize_graph(dg); });
  }
}

// Graphs on 4 or 5 nodes that carry every edge kind.
void a7(Tally& t) {
  int graphs = 0;
  for (std::uint64_t seed = 0; graphs < 300; ++seed) {
    const Graph a = random_graph({4 + seed % 2, ClassId::Any, 0.3, seed});
    KindSet kinds;
    for (const Edge& e : a.edges()) kinds.insert(e.kind);
    if (kinds != KindSet::all()) continue;
    ++graphs;
    const IndependenceModel m = global_model(a);
    for (Axiom axiom : kAllAxioms) {
      const auto violations = check_axiom(m, axiom, 1);
      t.expect(violations.empty(), [&] {
        return to_string(axiom) + " violated, missing " +
               format_triple(m.labels(), violations.front().missing) + " in\n" + serialize_graph(a);
      });
    }
  }
}

void a8(Tally& t) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph m = maximalize(random_graph({small_n(seed, 5), ClassId::CMG, 0.35, seed}));
    const auto diff =
        first_difference(closure(pairwise_statements(m), AxiomSet::all()), global_model(m));
    t.expect(!diff, [&] {
      return "pairwise closure differs on " + format_triple(m.labels(), *diff) + " in\n" +
             serialize_graph(m);
    });
  }
}

void a9(Tally& t) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph a = random_graph({small_n(seed, 5), ClassId::CMG, 0.35, seed});
    for (NodeId i = 0; i < a.size(); ++i) {
      for (NodeId j = i + 1; j < a.size(); ++j) {
        if (a.adjacent(i, j)) continue;
        bool separable = false;
        for_each_subset(a.nodes() - NodeSet{i, j}, [&](NodeSet c) {
          if (!separable && !connecting_walk_exists(a, i, j, c)) separable = true;
        });
        const bool inducing = find_primitive_inducing_walk(a, i, j).has_value();
        t.expect(inducing != separable, [&] {
          return "pair " + a.label(i) + "," + a.label(j) + (inducing ? " has" : " lacks") +
                 " an inducing walk but is" + (separable ? " " : " not ") + "separable in\n" +
                 serialize_graph(a);
        });
      }
    }
    bool maximal = true;
    for (NodeId i = 0; i < a.size(); ++i) {
      for (NodeId j = i + 1; j < a.size(); ++j) {
        if (!a.adjacent(i, j) && find_primitive_inducing_walk(a, i, j)) maximal = false;
      }
    }
    t.expect(is_maximal(a).maximal == maximal, [&] { return "is_maximal disagrees on\n" + serialize_graph(a); });
    const Graph m = maximalize(a);
    t.expect(is_maximal(m).maximal, [&] { return "maximalize output not maximal for\n" + serialize_graph(a); });
    t.expect(markov_equivalent(a, m), [&] { return "maximalize changed the model of\n" + serialize_graph(a); });
  }
}

void a10(Tally& t) {
  const IndependenceModel m = parse_model(R"(nodes 1,2,3,4,5
1 | 3 | 2
1 | 4 | 3
1 | 5 | 4
2 | 4 | 1,3,5
2 | 5 | 3
3 | 5 | 1,2,4
3 | 1 | 2
4 | 1 | 3
5 | 1 | 4
4 | 2 | 1,3,5
5 | 2 | 3
5 | 3 | 1,2,4
)");
  t.expect(m.count() == 12, [] { return std::string("Example model should hold 12 statements"); });
  for (Axiom axiom : kAllAxioms) {
    t.expect(check_axiom(m, axiom, 1).empty(), [&] { return to_string(axiom) + " fails on the example"; });
  }
  const Graph path = path_12345();
  m.for_each([&](const Triple& s) {
    t.expect(separated(path, {s.lhs, s.rhs, s.given}),
             [&] { return format_triple(m.labels(), s) + " is not a separation in the path"; });
  });
  const GlobalCheck check = satisfies_global(m, path);
  t.expect(!check.holds, [] { return std::string("the example should violate the global property"); });
  t.expect(check.witness && separated(path, {check.witness->lhs, check.witness->rhs, check.witness->given}) &&
               !m.contains(*check.witness),
           [] { return std::string("missing or wrong witness triple"); });
  if (check.witness) t.note = "witness: " + format_triple(m.labels(), *check.witness);
}

void a11(Tally& t) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph a = random_graph({small_n(seed, 5), ClassId::CMG, 0.35, seed});
    const IndependenceModel m = global_model(a);
    for_each_subset(a.nodes(), [&](NodeSet d) {
      if (!anteriors(a, d).empty()) return;
      const auto diff = first_difference(marginalize(m, a.nodes() - d), global_model(induced_subgraph(a, d)));
      t.expect(!diff, [&] {
        return "anterior set " + format_set(a.labels(), d) + " differs in\n" + serialize_graph(a);
      });
    });
  }
}

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  void (*run)(Tally&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"A1", "engine agrees with brute force", 300, a1},
      {"A2", "worked examples", 1, a2},
      {"A3", "m-separation on summary graphs", 120, a3},
      {"A4", "z-separation on MAMPs", 120, a4},
      {"A5", "d-separation on DAGs", 120, a5},
      {"A6", "UG vertex cuts and DG models", 120, a6},
      {"A7", "compositional graphoid axioms", 600, a7},
      {"A8", "pairwise closure equals global model", 1200, a8},
      {"A9", "maximality characterisation", 600, a9},
      {"A10", "five-node path example", 1, a10},
      {"A11", "anterior-set marginalization", 300, a11},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Tally t;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds <= c.budget_seconds;
    const bool ok = error.empty() && t.failures == 0 && in_budget;
    if (!ok) ++failed;
    std::printf("%s %s: %s (%llu checks, %.2fs of %.0fs)\n", c.id, ok ? "PASS" : "FAIL", c.title,
                static_cast<unsigned long long>(t.checks), seconds, c.budget_seconds);
    if (!t.note.empty()) std::printf("    %s\n", t.note.c_str());
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    if (t.failures > 0) {
      std::printf("    %llu mismatches; first: %s\n", static_cast<unsigned long long>(t.failures),
                  t.first.c_str());
    }
    if (!in_budget) std::printf("    over the time budget\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
