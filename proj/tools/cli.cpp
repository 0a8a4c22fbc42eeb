#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mixsep/classify.hpp"
#include "mixsep/error.hpp"
#include "mixsep/generators.hpp"
#include "mixsep/independence_model.hpp"
#include "mixsep/maximality.hpp"
#include "mixsep/separation.hpp"
#include "mixsep/text_io.hpp"

namespace mixsep::cli {

namespace {

using json = nlohmann::ordered_json;

// Raised for input files that cannot be read.
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

json label_list(const std::vector<std::string>& labels, NodeSet set) {
  std::vector<std::string> names;
  for (NodeId v : set) names.push_back(labels.at(v));
  std::sort(names.begin(), names.end());
  return names;
}

json triple_json(const std::vector<std::string>& labels, const Triple& t) {
  return json{{"lhs", label_list(labels, t.lhs)},
              {"rhs", label_list(labels, t.rhs)},
              {"given", label_list(labels, t.given)}};
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"u", g.label(e.u)}, {"v", g.label(e.v)}, {"kind", to_string(e.kind)}});
  }
  return json{{"nodes", g.labels()}, {"edges", std::move(edges)}};
}

void print_model(const IndependenceModel& m, bool as_json, std::ostream& out) {
  if (!as_json) {
    out << serialize_model(m);
    return;
  }
  std::vector<std::pair<std::string, Triple>> rows;
  m.for_each([&](const Triple& t) { rows.emplace_back(format_triple(m.labels(), t), t); });
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  json statements = json::array();
  for (const auto& row : rows) statements.push_back(triple_json(m.labels(), row.second));
  out << json{{"nodes", m.labels()}, {"statements", std::move(statements)}}.dump(2) << '\n';
}

AxiomSet parse_axioms(const std::string& text) {
  AxiomSet set;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto axiom = parse_axiom(item);
    if (!axiom) throw CLI::ValidationError("--axioms", "unknown axiom '" + item + "'");
    set.insert(*axiom);
  }
  return set;
}

Limits model_limits(std::size_t max_nodes) {
  Limits limits;
  limits.model_nodes = max_nodes;
  return limits;
}

struct Options {
  std::string graph, graph2, model_file;
  std::string lhs, rhs, given;
  std::string axioms = "s1,s2,s3,s4,s5,s6";
  std::string cls = "CMG";
  std::size_t nodes = 5;
  double density = 0.5;
  std::uint64_t seed = 0;
  std::size_t max_nodes = Limits{}.model_nodes;
  std::size_t closure_nodes = Limits{}.closure_nodes;
  bool witness = false;
  bool json = false;
};

int cmd_separate(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const SeparationQuery q{parse_set(g.labels(), o.lhs), parse_set(g.labels(), o.rhs),
                          parse_set(g.labels(), o.given)};
  const bool sep = separated(g, q);
  std::optional<Walk> walk;
  if (!sep && o.witness) {
    for (NodeId i : q.lhs) {
      for (NodeId j : q.rhs) {
        if (!walk) walk = find_connecting_walk(g, i, j, q.given);
      }
    }
  }
  if (o.json) {
    json j{{"separated", sep}};
    if (o.witness) j["witness"] = walk ? json(format_walk(g, *walk)) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << (sep ? "separated" : "connected") << '\n';
    if (walk) out << "witness: " << format_walk(g, *walk) << '\n';
  }
  return sep ? kOk : kNegative;
}

int cmd_model(const Options& o, std::ostream& out) {
  print_model(global_model(load_graph(o.graph), model_limits(o.max_nodes)), o.json, out);
  return kOk;
}

int cmd_pairwise(const Options& o, std::ostream& out) {
  print_model(pairwise_statements(load_graph(o.graph)), o.json, out);
  return kOk;
}

int cmd_closure(const Options& o, std::ostream& out) {
  Limits limits;
  limits.closure_nodes = o.closure_nodes;
  const IndependenceModel m = parse_model(read_file(o.model_file));
  print_model(closure(m, parse_axioms(o.axioms), limits), o.json, out);
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const GraphClass c = classify(load_graph(o.graph));
  if (o.json) {
    json j = json::object();
    for (ClassId id : all_classes()) j[to_string(id)] = c.has(id);
    out << j.dump(2) << '\n';
  } else {
    for (ClassId id : all_classes()) out << to_string(id) << ' ' << (c.has(id) ? "yes" : "no") << '\n';
  }
  return kOk;
}

int cmd_maximal_check(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const MaximalityReport report = is_maximal(g);
  std::optional<InducingWitness> witness;
  if (report.offending) {
    witness = find_primitive_inducing_walk(g, report.offending->first, report.offending->second);
  }
  if (o.json) {
    json j{{"maximal", report.maximal}};
    if (report.offending) {
      j["pair"] = {g.label(report.offending->first), g.label(report.offending->second)};
      j["witness"] = format_walk(g, witness->walk);
    } else {
      j["pair"] = nullptr;
      j["witness"] = nullptr;
    }
    out << j.dump(2) << '\n';
  } else if (report.maximal) {
    out << "maximal\n";
  } else {
    out << "not maximal\n"
        << "pair: " << g.label(report.offending->first) << ' ' << g.label(report.offending->second)
        << '\n'
        << "witness: " << format_walk(g, witness->walk) << '\n';
  }
  return report.maximal ? kOk : kNegative;
}

int cmd_maximalize(const Options& o, std::ostream& out) {
  const Graph g = maximalize(load_graph(o.graph));
  if (o.json) {
    out << graph_json(g).dump(2) << '\n';
  } else {
    out << serialize_graph(g);
  }
  return kOk;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  const Graph g1 = load_graph(o.graph);
  const Graph g2 = reorder_nodes(load_graph(o.graph2), g1.labels());
  const Limits limits = model_limits(o.max_nodes);
  const IndependenceModel m1 = global_model(g1, limits);
  const IndependenceModel m2 = global_model(g2, limits);
  const auto diff = first_difference(m1, m2);
  if (o.json) {
    json j{{"equivalent", !diff}};
    if (diff) {
      j["difference"] = triple_json(g1.labels(), *diff);
      j["difference"]["only_in"] = m1.contains(*diff) ? "first" : "second";
    } else {
      j["difference"] = nullptr;
    }
    out << j.dump(2) << '\n';
  } else if (!diff) {
    out << "equivalent\n";
  } else {
    out << "different\n"
        << "only in " << (m1.contains(*diff) ? "first" : "second") << ": "
        << format_triple(g1.labels(), *diff) << '\n';
  }
  return diff ? kNegative : kOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto target = parse_class(o.cls);
  if (!target) throw CLI::ValidationError("--class", "unknown class '" + o.cls + "'");
  const Graph g = random_graph(GenSpec{o.nodes, *target, o.density, o.seed});
  if (o.json) {
    out << graph_json(g).dump(2) << '\n';
  } else {
    out << serialize_graph(g);
  }
  return kOk;
}

int cmd_axioms(const Options& o, std::ostream& out) {
  const IndependenceModel m = parse_model(read_file(o.model_file));
  const AxiomSet wanted = parse_axioms(o.axioms);
  const auto& labels = m.labels();
  bool all_pass = true;
  json j = json::object();
  for (Axiom axiom : kAllAxioms) {
    if (!wanted.contains(axiom)) continue;
    const auto violations = check_axiom(m, axiom, 1);
    all_pass = all_pass && violations.empty();
    if (o.json) {
      json entry{{"pass", violations.empty()}};
      if (violations.empty()) {
        entry["violation"] = nullptr;
      } else {
        const AxiomViolation& v = violations.front();
        entry["violation"] = {{"a", label_list(labels, v.a)},
                              {"b", label_list(labels, v.b)},
                              {"c", label_list(labels, v.c)},
                              {"d", label_list(labels, v.d)},
                              {"missing", triple_json(labels, v.missing)}};
      }
      j[to_string(axiom)] = std::move(entry);
    } else if (violations.empty()) {
      out << to_string(axiom) << " PASS\n";
    } else {
      const AxiomViolation& v = violations.front();
      out << to_string(axiom) << " FAIL A=" << format_set(labels, v.a)
          << " B=" << format_set(labels, v.b) << " C=" << format_set(labels, v.c)
          << " D=" << format_set(labels, v.d) << " missing: " << format_triple(labels, v.missing)
          << '\n';
    }
  }
  if (o.json) out << j.dump(2) << '\n';
  return all_pass ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separation, independence models and maximality for mixed graphs", "mixsep"};
  app.require_subcommand(1);
  Options o;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "JSON output"); };
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph, "Graph file")->required();
    add_json(sub);
  };
  auto add_max_nodes = [&](CLI::App* sub) {
    sub->add_option("--max-nodes", o.max_nodes, "Node bound for model computations")
        ->check(CLI::Range(std::size_t{1}, kModelHardLimit));
  };

  auto* separate = app.add_subcommand("separate", "Decide A ⊥ B | C");
  add_graph(separate);
  separate->add_option("--lhs", o.lhs, "Comma-separated labels")->required();
  separate->add_option("--rhs", o.rhs, "Comma-separated labels")->required();
  separate->add_option("--given", o.given, "Comma-separated labels");
  separate->add_flag("--witness", o.witness, "Print a connecting walk when connected");

  auto* model = app.add_subcommand("model", "List the global independence model");
  add_graph(model);
  add_max_nodes(model);

  auto* pairwise = app.add_subcommand("pairwise", "List the pairwise statements of a CMG");
  add_graph(pairwise);

  auto* closure_cmd = app.add_subcommand("closure", "Close a model file under axioms");
  closure_cmd->add_option("model", o.model_file, "Model file")->required();
  closure_cmd->add_option("--axioms", o.axioms, "Comma-separated subset of s1..s6");
  closure_cmd->add_option("--max-nodes", o.closure_nodes, "Node bound for the closure")
      ->check(CLI::Range(std::size_t{1}, kModelHardLimit));
  add_json(closure_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Report class membership");
  add_graph(classify_cmd);

  auto* maximal_check = app.add_subcommand("maximal-check", "Test a CMG for maximality");
  add_graph(maximal_check);

  auto* maximalize_cmd = app.add_subcommand("maximalize", "Add edges until the CMG is maximal");
  add_graph(maximalize_cmd);

  auto* equiv = app.add_subcommand("equiv", "Compare the independence models of two graphs");
  add_graph(equiv);
  equiv->add_option("graph2", o.graph2, "Second graph file")->required();
  add_max_nodes(equiv);

  auto* gen = app.add_subcommand("gen", "Emit a seeded random graph");
  gen->add_option("--class", o.cls, "Target class");
  gen->add_option("-n,--nodes", o.nodes, "Node count");
  gen->add_option("--density", o.density, "Slot probability");
  gen->add_option("--seed", o.seed, "Random seed");
  add_json(gen);

  auto* axioms = app.add_subcommand("axioms", "Check a model file against s1..s6");
  axioms->add_option("model", o.model_file, "Model file")->required();
  axioms->add_option("--axioms", o.axioms, "Comma-separated subset of s1..s6");
  add_json(axioms);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (separate->parsed()) return cmd_separate(o, out);
    if (model->parsed()) return cmd_model(o, out);
    if (pairwise->parsed()) return cmd_pairwise(o, out);
    if (closure_cmd->parsed()) return cmd_closure(o, out);
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (maximal_check->parsed()) return cmd_maximal_check(o, out);
    if (maximalize_cmd->parsed()) return cmd_maximalize(o, out);
    if (equiv->parsed()) return cmd_equiv(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
    if (axioms->parsed()) return cmd_axioms(o, out);
    return kUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::SizeLimit: return kSizeLimit;
      case ErrorKind::NodeNotFound:
      case ErrorKind::InvalidQuery:
      case ErrorKind::UnsatisfiableSpec: return kUsage;
      default: return kInputError;
    }
  }
}

}  // namespace mixsep::cli
