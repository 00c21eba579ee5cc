// Command line front end: solve, exact, generate, reduce-bqp, landscape.
// Exit codes: 0 success, 2 bad input (files or flags), 3 size cap exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bbqp/harness.hpp"
#include "bbqp/hybrid.hpp"
#include "bbqp/io.hpp"
#include "bbqp/landscape.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitSizeCap = 3;

bbqp::Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  bbqp::Instance inst = bbqp::parse_instance(in);
  inst.name = std::filesystem::path(path).stem().string();
  return inst;
}

bbqp::Solution load_solution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open solution file: " + path);
  return bbqp::parse_solution(in);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  return out;
}

struct SolveOpts {
  std::string instance_path;
  std::string algo = "hybrid";
  double time_limit = 0;
  std::int64_t restarts = 0;
  std::uint64_t seed = 0;
  int tabu_depth = 0;
  int jobs = 1;
  bool tsv = false;
  std::string out_path;
};

int cmd_solve(const SolveOpts& opts, bool have_time, bool have_restarts) {
  const bbqp::Instance inst = load_instance(opts.instance_path);
  bbqp::Budget budget;
  if (have_time) budget.wall_seconds = opts.time_limit;
  if (have_restarts) budget.max_restarts = opts.restarts;
  bbqp::TabuParams tabu;
  tabu.tabu_depth = opts.tabu_depth;
  const auto algo = bbqp::algo_from_name(opts.algo);
  const bbqp::RunReport report =
      bbqp::multi_start(inst, *algo, tabu, budget, opts.seed, opts.jobs);
  std::cout << (opts.tsv ? bbqp::report_tsv(report) : bbqp::report_text(report)) << '\n';
  if (!opts.out_path.empty()) {
    auto out = open_out(opts.out_path);
    bbqp::serialize_solution(report.best_solution, out);
  }
  return 0;
}

int cmd_exact(const std::string& instance_path, const std::string& out_path) {
  const bbqp::Instance inst = load_instance(instance_path);
  const bbqp::OptResult opt = bbqp::brute_force_opt(inst);
  std::cout << opt.value << '\n';
  for (auto b : opt.sol.x) std::cout << (b ? '1' : '0');
  std::cout << '\n';
  for (auto b : opt.sol.y) std::cout << (b ? '1' : '0');
  std::cout << '\n';
  if (!out_path.empty()) {
    auto out = open_out(out_path);
    bbqp::serialize_solution(opt.sol, out);
  }
  return 0;
}

struct GenerateOpts {
  int rows = 0;
  int cols = 0;
  bbqp::Value lo = -100;
  bbqp::Value hi = 100;
  std::uint64_t seed = 0;
  std::string out_path;
};

int cmd_generate(const GenerateOpts& opts) {
  const bbqp::Instance inst =
      bbqp::generate_random_instance(opts.rows, opts.cols, opts.lo, opts.hi, opts.seed);
  if (opts.out_path.empty()) {
    bbqp::serialize_instance(inst, std::cout);
  } else {
    auto out = open_out(opts.out_path);
    bbqp::serialize_instance(inst, out);
  }
  return 0;
}

int cmd_reduce(const std::string& instance_path, bbqp::Value penalty, bool have_penalty,
               const std::string& out_path) {
  std::ifstream in(instance_path);
  if (!in) throw std::runtime_error("cannot open BQP file: " + instance_path);
  const bbqp::BqpProblem problem = bbqp::parse_bqp(in);
  if (!have_penalty) penalty = bbqp::bqp_guard_value(problem.q, problem.c);
  const bbqp::Instance inst = bbqp::reduce_bqp(problem.q, problem.c, penalty);
  if (out_path.empty()) {
    bbqp::serialize_instance(inst, std::cout);
  } else {
    auto out = open_out(out_path);
    bbqp::serialize_instance(inst, out);
  }
  return 0;
}

struct LandscapeOpts {
  std::string instance_path;
  int samples = 1000;
  std::uint64_t seed = 0;
  int tabu_depth = 0;
  std::string reference_path;
  std::string out_path;
};

int cmd_landscape(const LandscapeOpts& opts) {
  const bbqp::Instance inst = load_instance(opts.instance_path);
  std::optional<bbqp::Solution> reference;
  if (!opts.reference_path.empty()) reference = load_solution(opts.reference_path);
  bbqp::TabuParams tabu;
  tabu.tabu_depth = opts.tabu_depth;
  const bbqp::Landscape scape =
      bbqp::sample_landscape(inst, opts.samples, tabu, reference, opts.seed);
  if (opts.out_path.empty()) {
    bbqp::write_landscape_csv(scape.samples, std::cout);
  } else {
    auto out = open_out(opts.out_path);
    bbqp::write_landscape_csv(scape.samples, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heuristics and tooling for bipartite boolean quadratic programs"};
  app.require_subcommand(1);

  SolveOpts solve_opts;
  auto* solve = app.add_subcommand("solve", "Multi-start heuristic search on an instance");
  solve->add_option("--instance", solve_opts.instance_path, "Instance file")->required();
  solve->add_option("--algo", solve_opts.algo, "Heuristic to run")
      ->check(CLI::IsMember({"tabu", "flipfloat", "hybrid"}))
      ->capture_default_str();
  solve->add_option("--time-limit", solve_opts.time_limit, "Wall clock budget in seconds");
  solve->add_option("--restarts", solve_opts.restarts, "Restart budget");
  solve->add_option("--seed", solve_opts.seed, "Master seed")->capture_default_str();
  solve->add_option("--tabu-depth", solve_opts.tabu_depth,
                    "Non-improving iterations before a tabu run stops (0 = 10*(m+n))");
  solve->add_option("--jobs", solve_opts.jobs, "Concurrent restart workers")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_flag("--tsv", solve_opts.tsv, "Print the report as one tab-separated line");
  solve->add_option("--out", solve_opts.out_path, "Write the best solution to this file");

  std::string exact_instance, exact_out;
  auto* exact = app.add_subcommand("exact", "Exhaustive optimum (m + n <= 30)");
  exact->add_option("--instance", exact_instance, "Instance file")->required();
  exact->add_option("--out", exact_out, "Write the optimal solution to this file");

  GenerateOpts gen_opts;
  auto* generate = app.add_subcommand("generate", "Write a random instance");
  generate->add_option("--rows", gen_opts.rows, "m")->required();
  generate->add_option("--cols", gen_opts.cols, "n")->required();
  generate->add_option("--lo", gen_opts.lo, "Smallest coefficient")->capture_default_str();
  generate->add_option("--hi", gen_opts.hi, "Largest coefficient")->capture_default_str();
  generate->add_option("--seed", gen_opts.seed, "Generator seed")->capture_default_str();
  generate->add_option("--out", gen_opts.out_path, "Output file (default stdout)");

  std::string reduce_instance, reduce_out;
  bbqp::Value reduce_penalty = 0;
  auto* reduce = app.add_subcommand(
      "reduce-bqp", "Embed a BQP (maximize x'Q'x + c'x) as an equivalent instance");
  reduce->add_option("--instance", reduce_instance, "BQP file")->required();
  auto* penalty_opt =
      reduce->add_option("--M", reduce_penalty, "Diagonal penalty (default: smallest valid)");
  reduce->add_option("--out", reduce_out, "Output file (default stdout)");

  LandscapeOpts scape_opts;
  auto* landscape =
      app.add_subcommand("landscape", "Sample tabu local optima against a reference");
  landscape->add_option("--instance", scape_opts.instance_path, "Instance file")->required();
  landscape->add_option("--samples", scape_opts.samples, "Number of tabu runs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  landscape->add_option("--seed", scape_opts.seed, "Master seed")->capture_default_str();
  landscape->add_option("--tabu-depth", scape_opts.tabu_depth,
                        "Tabu stopping depth (0 = 10*(m+n))");
  landscape->add_option("--reference", scape_opts.reference_path,
                        "Reference solution file (default: best sample)");
  landscape->add_option("--out", scape_opts.out_path, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (solve->parsed())
      return cmd_solve(solve_opts, solve->count("--time-limit") > 0,
                       solve->count("--restarts") > 0);
    if (exact->parsed()) return cmd_exact(exact_instance, exact_out);
    if (generate->parsed()) return cmd_generate(gen_opts);
    if (reduce->parsed())
      return cmd_reduce(reduce_instance, reduce_penalty, penalty_opt->count() > 0, reduce_out);
    if (landscape->parsed()) return cmd_landscape(scape_opts);
  } catch (const bbqp::SizeCapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSizeCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
