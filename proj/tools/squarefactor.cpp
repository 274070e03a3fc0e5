#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "squarefactor/squarefactor.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;

struct Options {
  int s = 1;
  std::uint64_t seed = 1;
  int max_n = 7;
  std::string host = "square";
  bool force_oracle = false;
  bool dot = false;
  int fuzz = 1000;
  int random = 200;
  std::vector<std::string> properties;
  std::vector<std::string> files;
  std::string dir = "fixtures";
};

std::string describe(const sqf::StarEmbedding& e) {
  std::string out = "center " + std::to_string(e.center) + " arms";
  for (const sqf::Arm& a : e.arms) out += " " + std::to_string(a.middle) + "-" + std::to_string(a.leaf);
  return out;
}

sqf::Graph host_of(const sqf::Graph& g, const std::string& host) { return host == "square" ? sqf::square(g) : g; }

void write_dot(std::ostream& out, const sqf::Graph& g, const sqf::EdgeSet& f) {
  out << "graph factor {\n";
  for (sqf::Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (sqf::Edge e : f.edges()) {
    out << "  " << e.u << " -- " << e.v << (g.adjacent(e.u, e.v) ? "" : " [style=dashed]") << ";\n";
  }
  out << "}\n";
}

int run_square(const Options& o) {
  sqf::write_graph(std::cout, sqf::square(sqf::load_graph(o.files.at(0))));
  return kExitOk;
}

int run_check(const Options& o) {
  const sqf::Graph g = sqf::load_graph(o.files.at(0));
  const bool free = sqf::is_star_free(g, o.s);
  std::cout << "star-free " << (free ? "true" : "false") << '\n';
  bool condition = free;
  std::vector<sqf::StarEmbedding> violations;
  if (sqf::is_connected(g)) {
    sqf::ConditionReport report = sqf::satisfies_block_condition(g, o.s);
    condition = report.holds;
    violations = std::move(report.violations);
    std::cout << "condition " << (condition ? "true" : "false") << '\n';
  } else {
    std::cout << "condition n/a (disconnected)\n";
  }
  std::cout << "max-degree-bound " << (g.max_degree() <= 2 * o.s ? "true" : "false") << '\n';
  for (const auto& v : violations) std::cout << "violation " << describe(v) << '\n';
  return condition ? kExitOk : kExitFinding;
}

int emit_factor(const Options& o, const sqf::Graph& g, const sqf::Graph& host, const sqf::EdgeSet& f,
                const std::string& method) {
  if (!sqf::verify_factor(host, f, o.s).valid()) throw sqf::InternalError("refusing to print an unverified factor");
  if (o.dot) {
    write_dot(std::cout, g, f);
    return kExitOk;
  }
  std::cout << "method " << method << '\n';
  sqf::write_factor(std::cout, f);
  std::cout << "trail ";
  sqf::write_trail(std::cout, sqf::factor_to_trail(f, o.s));
  std::cout << "VERIFIED\n";
  return kExitOk;
}

int run_oracle_on(const Options& o, const sqf::Graph& g, const sqf::Graph& host) {
  auto f = sqf::oracle_factor(host, o.s);
  if (!f) {
    std::cout << "NONE\n";
    return kExitFinding;
  }
  return emit_factor(o, g, host, *f, "oracle");
}

int run_solve(const Options& o) {
  const sqf::Graph g = sqf::load_graph(o.files.at(0));
  const sqf::Graph sq = sqf::square(g);
  if (sqf::is_star_free(g, o.s)) return emit_factor(o, g, sq, sqf::solve_star_free(g, o.s).edges, "star-free");
  try {
    return emit_factor(o, g, sq, sqf::solve_condition(g, o.s).edges, "condition");
  } catch (const sqf::HypothesisViolated& e) {
    if (o.force_oracle) return run_oracle_on(o, g, sq);
    std::cout << "HYPOTHESIS VIOLATED " << describe(e.witness()) << '\n';
    return kExitFinding;
  }
}

int run_verify(const Options& o) {
  if (o.files.size() != 2) throw CLI::ValidationError("verify needs a graph file and a factor file");
  const sqf::Graph g = sqf::load_graph(o.files[0]);
  const sqf::Graph host = host_of(g, o.host);
  std::ifstream in(o.files[1]);
  if (!in) throw sqf::Error("cannot open " + o.files[1]);
  const sqf::EdgeSet f = sqf::read_factor(in, g.order());
  if (!f.subset_of(host.edge_set())) {
    std::cout << "INVALID edge outside the host\n";
    return kExitFinding;
  }
  const sqf::VerificationReport r = sqf::verify_factor(host, f, o.s);
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::cout << "spanning " << flag(r.spanning) << '\n'
            << "connected " << flag(r.connected) << '\n'
            << "even " << flag(r.even) << '\n'
            << "degree-bounded " << flag(r.degree_bounded) << '\n'
            << (r.valid() ? "VALID" : "INVALID") << '\n';
  return r.valid() ? kExitOk : kExitFinding;
}

int run_oracle(const Options& o) {
  const sqf::Graph g = sqf::load_graph(o.files.at(0));
  return run_oracle_on(o, g, host_of(g, o.host));
}

int run_suite(const Options& o) {
  sqf::SuiteConfig cfg;
  cfg.seed = o.seed;
  cfg.max_n = o.max_n;
  cfg.fuzz_instances = o.fuzz;
  cfg.random_instances = o.random;
  cfg.only = o.properties;
  const sqf::Report r = sqf::run_suite(cfg);
  sqf::write_report(std::cout, r);
  return r.passed() ? kExitOk : kExitFinding;
}

int run_fixtures(const Options& o) {
  namespace fs = std::filesystem;
  fs::create_directories(o.dir);
  for (const sqf::Fixture& f : sqf::fixtures()) {
    const fs::path path = fs::path(o.dir) / (f.name + ".graph");
    std::ofstream out(path);
    if (!out) throw sqf::Error("cannot write " + path.string());
    out << "# " << f.name << '\n';
    if (!f.vertex_names.empty()) {
      out << "# vertices";
      for (const auto& name : f.vertex_names) out << ' ' << name;
      out << '\n';
    }
    sqf::write_graph(out, f.graph);
    std::cout << path.string() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected even factors with bounded degree in graph squares"};
  app.require_subcommand(1);
  Options o;

  auto add_s = [&](CLI::App* cmd) { cmd->add_option("--s", o.s, "degree bound is 2s")->check(CLI::PositiveNumber); };
  auto add_file = [&](CLI::App* cmd) { cmd->add_option("file", o.files, "graph file")->required()->expected(1); };

  CLI::App* square = app.add_subcommand("square", "print the square of a graph");
  add_file(square);
  CLI::App* check = app.add_subcommand("check", "report which hypotheses hold");
  add_s(check);
  add_file(check);
  CLI::App* solve = app.add_subcommand("solve", "construct and verify a [2,2s]-factor of the square");
  add_s(solve);
  solve->add_flag("--force-oracle", o.force_oracle, "fall back to exhaustive search when no hypothesis holds");
  solve->add_flag("--dot", o.dot, "emit the factor as DOT");
  add_file(solve);
  CLI::App* verify = app.add_subcommand("verify", "check a factor file against a graph");
  add_s(verify);
  verify->add_option("--host", o.host, "graph or square")->check(CLI::IsMember({"graph", "square"}));
  verify->add_option("files", o.files, "graph file and factor file")->required()->expected(2);
  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive factor search");
  add_s(oracle);
  oracle->add_option("--host", o.host, "graph or square")->check(CLI::IsMember({"graph", "square"}));
  oracle->add_flag("--dot", o.dot, "emit the factor as DOT");
  add_file(oracle);
  CLI::App* suite = app.add_subcommand("suite", "run the property suite");
  suite->add_option("--seed", o.seed, "random seed");
  suite->add_option("--max-n", o.max_n, "largest order in exhaustive sweeps")->check(CLI::Range(0, 8));
  suite->add_option("--fuzz", o.fuzz, "oracle-positive instances per lemma")->check(CLI::NonNegativeNumber);
  suite->add_option("--random", o.random, "random graphs per random property")->check(CLI::NonNegativeNumber);
  suite->add_option("--property", o.properties, "run only these properties")
      ->check(CLI::IsMember(sqf::property_names()));
  CLI::App* fixtures = app.add_subcommand("fixtures", "write the fixture graphs");
  fixtures->add_option("dir", o.dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*square) return run_square(o);
    if (*check) return run_check(o);
    if (*solve) return run_solve(o);
    if (*verify) return run_verify(o);
    if (*oracle) return run_oracle(o);
    if (*suite) return run_suite(o);
    if (*fixtures) return run_fixtures(o);
  } catch (const sqf::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sqf::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sqf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
