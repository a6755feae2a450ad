// Command-line front end: kernelize, solve, recognize, gen, verify.
// Exit codes: 0 solved/reduced, 1 NO verdict, 2 input error, 3 resource limit.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pivd/pivd.hpp"

namespace {

struct CommonOpts {
  std::string input;
  std::string format = "edgelist";
  std::string output;
};

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_all(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << bytes;
}

pivd::GraphFormat format_of(const std::string& name) {
  auto f = pivd::graph_format_from_name(name);
  if (!f) throw std::invalid_argument("unknown format: " + name);
  return *f;
}

pivd::ParsedInstance load(const CommonOpts& opts) {
  return pivd::parse_graph(read_all(opts.input), format_of(opts.format));
}

int require_budget(const pivd::ParsedInstance& parsed, std::optional<int> flag) {
  if (flag) return *flag;
  if (parsed.k) return *parsed.k;
  throw std::invalid_argument("no budget: pass -k or use an input carrying one");
}

void print_ids(std::ostream& out, const pivd::VertexSet& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
}

int run_kernelize(const CommonOpts& opts, std::optional<int> k_flag, const std::string& trace_path) {
  pivd::ParsedInstance parsed = load(opts);
  int k = require_budget(parsed, k_flag);
  pivd::KernelOutcome outcome = pivd::kernelize({parsed.graph, k});

  std::string trace_text = pivd::emit_trace(outcome.trace);
  trace_text += pivd::format_verdict_line(outcome);

  int code = 0;
  std::string payload;
  pivd::GraphFormat fmt = format_of(opts.format);
  if (outcome.verdict == pivd::KernelVerdict::reduced) {
    pivd::DenseRenumbering dense = pivd::renumber_dense(outcome.instance->graph);
    trace_text += pivd::format_renumber_line(dense.mapping);
    payload = pivd::serialize_graph(dense.graph, fmt, outcome.instance->k);
    std::cerr << "reduced: " << dense.graph.vertex_count() << " vertices, k=" << outcome.instance->k
              << ", " << outcome.trace.steps.size() << " steps\n";
  } else if (outcome.verdict == pivd::KernelVerdict::yes_trivial) {
    payload = pivd::serialize_graph(pivd::Graph::with_vertex_count(0), fmt, outcome.final_k);
    std::cerr << "yes-trivial: every component is already proper interval\n";
  } else {
    // canonical trivial NO instance: a claw with budget 0
    pivd::Graph claw = pivd::Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    payload = pivd::serialize_graph(claw, fmt, 0);
    std::cerr << "no (" << outcome.no_reason << ")\n";
    code = 1;
  }
  write_all(opts.output, payload);
  if (!trace_path.empty()) write_all(trace_path, trace_text);
  return code;
}

int run_solve(const CommonOpts& opts, std::optional<int> k_flag, std::optional<int> cap,
              const std::string& oracle) {
  pivd::ParsedInstance parsed = load(opts);
  if (!k_flag && !parsed.k && cap) {
    auto best = pivd::minimum_deletion(parsed.graph, *cap);
    if (!best) {
      std::cout << "minimum-deletion exceeds-cap " << *cap << '\n';
      return 1;
    }
    std::cout << "minimum-deletion " << *best << '\n';
    return 0;
  }
  int k = require_budget(parsed, k_flag);
  pivd::Solution sol =
      oracle == "brute" ? pivd::brute_force_solve(parsed.graph, k) : pivd::solve(parsed.graph, k);
  if (!sol.feasible) {
    std::cout << "infeasible k=" << k << " nodes=" << sol.nodes_explored << '\n';
    return 1;
  }
  std::cout << "feasible size=" << sol.deletion_set.size() << " nodes=" << sol.nodes_explored
            << " delete=";
  print_ids(std::cout, sol.deletion_set);
  std::cout << '\n';
  return 0;
}

int run_recognize(const CommonOpts& opts) {
  pivd::ParsedInstance parsed = load(opts);
  auto ord = pivd::proper_interval_ordering(parsed.graph);
  if (ord) {
    std::cout << "proper-interval yes\norder ";
    print_ids(std::cout, ord->order);
    std::cout << '\n';
    return 0;
  }
  std::cout << "proper-interval no\n";
  if (auto obs = pivd::find_small_obstruction(parsed.graph)) {
    std::cout << "witness " << pivd::obstruction_kind_name(obs->kind) << ' ';
    print_ids(std::cout, obs->vertices);
    std::cout << '\n';
  } else if (auto hole = pivd::find_any_hole(parsed.graph, 4)) {
    std::cout << "witness hole ";
    print_ids(std::cout, hole->vertices);
    std::cout << '\n';
  }
  return 1;
}

int run_gen(int n, int k_noise, std::uint64_t seed, const std::string& format,
            const std::string& output) {
  pivd::Instance inst = pivd::generate_instance(n, k_noise, seed);
  write_all(output, pivd::serialize_graph(inst.graph, format_of(format), inst.k));
  return 0;
}

int run_verify(const CommonOpts& opts, std::optional<int> k_flag, const std::string& oracle) {
  pivd::ParsedInstance parsed = load(opts);
  int k = require_budget(parsed, k_flag);
  auto answer = [&](const pivd::Graph& g, int budget) {
    return oracle == "brute" ? pivd::brute_force_solve(g, budget).feasible
                             : pivd::solve(g, budget).feasible;
  };
  bool original = answer(parsed.graph, k);
  pivd::KernelOutcome outcome = pivd::kernelize({parsed.graph, k});
  bool kernel = false;
  if (outcome.verdict == pivd::KernelVerdict::yes_trivial)
    kernel = true;
  else if (outcome.verdict == pivd::KernelVerdict::no)
    kernel = false;
  else
    kernel = answer(outcome.instance->graph, outcome.instance->k);
  std::cout << "original " << (original ? "yes" : "no") << '\n';
  std::cout << "kernel " << pivd::kernel_verdict_name(outcome.verdict) << " -> "
            << (kernel ? "yes" : "no") << '\n';
  std::cout << (original == kernel ? "agree" : "MISMATCH") << '\n';
  return original == kernel ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proper interval vertex deletion: kernelization and exact solving"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::optional<int> k_flag;
  std::optional<int> cap;
  std::string oracle = "branch";
  std::string trace_path;
  int gen_n = 0;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* cmd, bool with_output) {
    cmd->add_option("--input", opts.input, "input file (default: stdin)");
    cmd->add_option("--format", opts.format, "edgelist, graph6 or dimacs")->capture_default_str();
    if (with_output) cmd->add_option("--output", opts.output, "output file (default: stdout)");
  };

  CLI::App* kernelize = app.add_subcommand("kernelize", "reduce an instance to an equivalent kernel");
  add_common(kernelize, true);
  kernelize->add_option("-k", k_flag, "deletion budget");
  kernelize->add_option("--trace", trace_path, "write the reduction trace here");

  CLI::App* solve = app.add_subcommand("solve", "exact decision / minimum deletion");
  add_common(solve, false);
  solve->add_option("-k", k_flag, "deletion budget");
  solve->add_option("--budget-cap", cap, "report the minimum deletion size up to this cap");
  solve->add_option("--oracle", oracle, "branch or brute")->capture_default_str();

  CLI::App* recognize = app.add_subcommand("recognize", "proper interval recognition");
  add_common(recognize, false);

  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--n", gen_n, "number of proper interval vertices")->required();
  gen->add_option("-k", k_flag, "number of noise vertices (also the budget)");
  gen->add_option("--seed", seed, "random seed")->capture_default_str();
  gen->add_option("--format", opts.format, "edgelist, graph6 or dimacs")->capture_default_str();
  gen->add_option("--output", opts.output, "output file (default: stdout)");

  CLI::App* verify = app.add_subcommand("verify", "kernelize, solve both sides, compare");
  add_common(verify, false);
  verify->add_option("-k", k_flag, "deletion budget");
  verify->add_option("--oracle", oracle, "branch or brute")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(kernelize)) return run_kernelize(opts, k_flag, trace_path);
    if (app.got_subcommand(solve)) return run_solve(opts, k_flag, cap, oracle);
    if (app.got_subcommand(recognize)) return run_recognize(opts);
    if (app.got_subcommand(gen)) return run_gen(gen_n, k_flag.value_or(0), seed, opts.format, opts.output);
    if (app.got_subcommand(verify)) return run_verify(opts, k_flag, oracle);
  } catch (const pivd::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const pivd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
