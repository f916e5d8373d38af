// omega: command-line front end for the ribbon library.
// Exit status: 0 success / all checks pass, 1 a check failed, 2 input error.

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ribbon/ribbon.hpp"

using namespace ribbon;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  std::string name;
  RibbonGraph graph;
};

/// FILE is a path, "-" for stdin, or "catalog:NAME".
Loaded load(const std::string& source) {
  if (source.rfind("catalog:", 0) == 0) {
    const std::string n = source.substr(8);
    auto e = find_instance(n);
    if (!e) throw InputError("no catalog instance named " + n);
    return {n, e->graph()};
  }
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(source);
    if (!in) throw InputError("cannot read " + source);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const GraphDocument doc = parse_document(text);
  try {
    return {doc.name.value_or(source), RibbonGraph::from_document(doc)};
  } catch (const GraphError& ex) {
    throw DocumentError(ex.what());
  }
}

/// "w=1,x=-2,t=3" -> Assignment; unnamed variables stay symbolic.
Assignment parse_assignment(const std::string& text) {
  Assignment a;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq != 1) throw InputError("bad assignment item '" + item + "'");
    const auto pos = std::string("wxyzt").find(item[0]);
    if (pos == std::string::npos) throw InputError("unknown variable '" + item.substr(0, 1) + "'");
    try {
      a.set(static_cast<Var>(pos), BigInt(item.substr(2)));
    } catch (const std::exception&) {
      throw InputError("bad integer in '" + item + "'");
    }
  }
  return a;
}

struct Guards {
  std::size_t max_edges = 14;
  std::size_t oracle_max_edges = 6;
  unsigned max_k = 4;
};

MultiPoly compute(const RibbonGraph& g, Method m, const Guards& guards) {
  if (m == Method::StateSum) {
    StateSumOptions o;
    o.max_edges = guards.max_edges;
    return omega_state_sum(g, o).polynomial;
  }
  return omega_recursive(g).polynomial;
}

void print_poly(const MultiPoly& p, bool json) {
  if (json)
    std::cout << poly_to_json(p).dump() << "\n";
  else
    std::cout << p.to_string() << "\n";
}

int run_verify(const std::vector<Loaded>& instances, Suite suite, const Guards& guards, bool quiet) {
  VerifyOptions opts;
  opts.oracle_max_edges = guards.oracle_max_edges;
  std::erase_if(opts.ks, [&](unsigned k) { return k > guards.max_k; });
  std::vector<std::future<std::vector<CheckResult>>> jobs;
  for (const auto& i : instances)
    jobs.push_back(std::async(std::launch::async, [&i, suite, opts] { return verify_instance(i.graph, i.name, suite, opts); }));
  std::size_t passed = 0, total = 0;
  for (auto& j : jobs) {
    for (const auto& r : j.get()) {
      ++total;
      passed += r.passed ? 1 : 0;
      if (!quiet || !r.passed)
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.instance << " [" << r.suite << "] " << r.check << ": "
                  << r.detail << "\n";
    }
  }
  std::cout << passed << "/" << total << " checks passed\n";
  return passed == total ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate and check the four-variable ribbon graph polynomial Omega"};
  app.require_subcommand(1);
  Guards guards;
  app.add_option("--max-edges", guards.max_edges, "Edge limit for the state sum")->capture_default_str();
  app.add_option("--oracle-max-edges", guards.oracle_max_edges, "Edge limit for k-valuation enumeration")
      ->capture_default_str();
  app.add_option("--max-k", guards.max_k, "Largest k for k-valuation enumeration")->capture_default_str();

  std::string file;
  std::string method = "recursive";
  bool json = false;

  auto* compute_cmd = app.add_subcommand("compute", "Print Omega(G)");
  compute_cmd->add_option("FILE", file, "Graph document, '-' or catalog:NAME")->required();
  compute_cmd->add_option("--method", method, "statesum or recursive")
      ->check(CLI::IsMember({"statesum", "recursive"}))
      ->capture_default_str();
  compute_cmd->add_flag("--json", json, "Print the polynomial as JSON records");

  auto* omega_k_cmd = app.add_subcommand("omega-k", "Print Omega_k(G), t standing for k");
  omega_k_cmd->add_option("FILE", file)->required();
  omega_k_cmd->add_flag("--json", json);

  std::string at;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate Omega(G) at integers");
  eval_cmd->add_option("FILE", file)->required();
  eval_cmd->add_option("--at", at, "e.g. w=0,x=2,y=1,z=0,t=2; omitted variables stay symbolic")->required();
  eval_cmd->add_flag("--json", json);

  std::string poly;
  std::vector<long long> special_args;
  auto* special_cmd = app.add_subcommand("special", "Print a named specialization in t");
  special_cmd->add_option("FILE", file)->required();
  special_cmd->add_option("--poly", poly)->required()->check(CLI::IsMember({"pointed-penrose", "penrose", "transition"}));
  special_cmd->add_option("--args", special_args, "alpha beta gamma for transition")->delimiter(',');
  special_cmd->add_flag("--json", json);

  auto* medial_cmd = app.add_subcommand("medial", "Print the medial graph as JSON");
  medial_cmd->add_option("FILE", file)->required();

  bool use_catalog = false;
  bool quiet = false;
  std::string suite_name = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run identity suites; exit 0 iff all pass");
  verify_cmd->add_option("FILE", file);
  verify_cmd->add_flag("--catalog", use_catalog, "Every named instance");
  verify_cmd->add_option("--suite", suite_name)
      ->check(CLI::IsMember({"all", "engines", "oracle", "corollaries"}))
      ->capture_default_str();
  verify_cmd->add_flag("--quiet", quiet, "Print failures and the summary only");

  std::string emit_dir;
  auto* catalog_cmd = app.add_subcommand("catalog", "List named instances");
  catalog_cmd->add_option("--emit", emit_dir, "Write NAME.json for each instance into DIR");

  std::size_t n_vertices = 1, n_edges = 0, n_singular = 0;
  std::uint64_t seed = 0;
  auto* random_cmd = app.add_subcommand("random", "Print a seeded random graph document");
  random_cmd->add_option("--vertices", n_vertices)->required();
  random_cmd->add_option("--edges", n_edges)->required();
  random_cmd->add_option("--seed", seed)->required();
  random_cmd->add_option("--singular", n_singular, "How many edges to mark singular");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*compute_cmd) {
      const Loaded in = load(file);
      print_poly(compute(in.graph, method == "statesum" ? Method::StateSum : Method::Recursive, guards), json);
      return kPass;
    }
    if (*omega_k_cmd) {
      print_poly(omega_k_polynomial(load(file).graph), json);
      return kPass;
    }
    if (*eval_cmd) {
      const Assignment a = parse_assignment(at);
      print_poly(poly_eval(omega_recursive(load(file).graph).polynomial, a), json);
      return kPass;
    }
    if (*special_cmd) {
      const RibbonGraph g = load(file).graph;
      MultiPoly p;
      if (poly == "pointed-penrose") {
        p = pointed_penrose(g);
      } else if (poly == "penrose") {
        p = topological_penrose(g);
      } else {
        if (special_args.size() != 3) throw InputError("transition needs --args alpha,beta,gamma");
        p = transition_polynomial(g, special_args[0], special_args[1], special_args[2]);
      }
      print_poly(p, json);
      return kPass;
    }
    if (*medial_cmd) {
      const RibbonGraph g = load(file).graph;
      std::cout << medial_to_json(g, build_medial(g)).dump(2) << "\n";
      return kPass;
    }
    if (*verify_cmd) {
      if (use_catalog == !file.empty()) throw InputError("verify needs exactly one of FILE or --catalog");
      std::vector<Loaded> instances;
      if (use_catalog) {
        for (const auto& c : named_instances()) instances.push_back({c.name, c.graph()});
      } else {
        instances.push_back(load(file));
      }
      for (const auto& i : instances)
        if (i.graph.non_singular_edge_count() > guards.max_edges)
          throw LimitExceeded(i.name + ": graph exceeds --max-edges");
      const std::map<std::string, Suite> suites{
          {"all", Suite::All}, {"engines", Suite::Engines}, {"oracle", Suite::Oracle}, {"corollaries", Suite::Corollaries}};
      return run_verify(instances, suites.at(suite_name), guards, quiet);
    }
    if (*catalog_cmd) {
      for (const auto& c : named_instances()) {
        const Invariants inv = compute_invariants(c.graph());
        std::cout << c.name << "\tcomponents=" << inv.components << " boundary=" << inv.boundary
                  << " genus=" << inv.genus << " plane=" << (inv.plane ? "true" : "false")
                  << (inv == c.expected ? "" : " MISMATCH") << "\t" << c.description << "\n";
        if (!emit_dir.empty()) {
          std::filesystem::create_directories(emit_dir);
          std::ofstream out(std::filesystem::path(emit_dir) / (c.name + ".json"));
          if (!out) throw InputError("cannot write into " + emit_dir);
          out << serialize_document(c.document);
        }
      }
      return kPass;
    }
    if (*random_cmd) {
      RandomLimits limits;
      limits.max_edges = guards.max_edges;
      std::cout << serialize_graph(random_instance(n_vertices, n_edges, seed, n_singular, limits));
      return kPass;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ValuationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
