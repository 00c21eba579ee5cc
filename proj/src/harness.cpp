#include "bbqp/harness.hpp"

#include <atomic>
#include <iomanip>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "bbqp/deadline.hpp"
#include "bbqp/flipfloat.hpp"
#include "bbqp/hybrid.hpp"
#include "bbqp/rng.hpp"

namespace bbqp {

namespace {

constexpr Value kNotRun = std::numeric_limits<Value>::min();  // unreachable objective

std::pair<Solution, Value> run_algo(const Instance& inst, Algo algo,
                                    const TabuParams& tabu, const Solution& start,
                                    Deadline deadline) {
  switch (algo) {
    case Algo::Tabu: {
      TabuResult r = run_tabu(inst, start, tabu, deadline);
      return {std::move(r.best), r.best_value};
    }
    case Algo::FlipFloat: {
      CoordinateResult r = run_coordinate(inst, start, deadline);
      return {std::move(r.sol), r.value};
    }
    case Algo::Hybrid: {
      HybridResult r = run_hybrid(inst, start, tabu, deadline);
      return {std::move(r.best), r.best_value};
    }
  }
  throw std::logic_error("unknown algorithm");
}

void format_seconds(std::ostream& out, double seconds) {
  out << std::fixed << std::setprecision(6) << seconds;
}

}  // namespace

const char* algo_name(Algo algo) {
  switch (algo) {
    case Algo::Tabu: return "tabu";
    case Algo::FlipFloat: return "flipfloat";
    case Algo::Hybrid: return "hybrid";
  }
  return "?";
}

std::optional<Algo> algo_from_name(std::string_view name) {
  if (name == "tabu") return Algo::Tabu;
  if (name == "flipfloat") return Algo::FlipFloat;
  if (name == "hybrid") return Algo::Hybrid;
  return std::nullopt;
}

std::string report_tsv(const RunReport& report) {
  std::ostringstream out;
  out << report.instance << '\t' << report.algo << '\t' << report.best_value << '\t'
      << report.n_init << '\t' << report.n_hit << '\t';
  format_seconds(out, report.time_to_best_s);
  out << '\t';
  format_seconds(out, report.elapsed_s);
  out << '\t' << report.seed;
  return out.str();
}

std::string report_text(const RunReport& report) {
  std::ostringstream out;
  out << "instance: " << report.instance << '\n'
      << "algo: " << report.algo << '\n'
      << "best_value: " << report.best_value << '\n'
      << "n_init: " << report.n_init << '\n'
      << "n_hit: " << report.n_hit << '\n'
      << "time_to_best_s: ";
  format_seconds(out, report.time_to_best_s);
  out << '\n' << "elapsed_s: ";
  format_seconds(out, report.elapsed_s);
  out << '\n' << "seed: " << report.seed;
  return out.str();
}

Solution random_solution(int m, int n, std::mt19937_64& rng) {
  if (m < 1 || n < 1) throw std::invalid_argument("shape: m and n must be at least 1");
  Solution sol;
  sol.x.resize(m);
  sol.y.resize(n);
  for (auto& bit : sol.x) bit = rng() & 1u;
  for (auto& bit : sol.y) bit = rng() & 1u;
  return sol;
}

Instance generate_random_instance(int m, int n, Value lo, Value hi,
                                  std::uint64_t seed, std::string name) {
  if (m < 1 || n < 1) throw std::invalid_argument("shape: m and n must be at least 1");
  if (lo > hi) throw std::invalid_argument("range: lo must not exceed hi");
  std::mt19937_64 rng(seed);
  const std::uint64_t width =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  const auto draw = [&]() -> Value {
    return width == 0 ? static_cast<Value>(rng())  // full 64-bit range
                      : lo + static_cast<Value>(rng() % width);
  };
  std::vector<Value> q(static_cast<std::size_t>(m) * n);
  std::vector<Value> c(m);
  std::vector<Value> d(n);
  for (auto& v : q) v = draw();
  for (auto& v : c) v = draw();
  for (auto& v : d) v = draw();
  return Instance(m, n, std::move(q), std::move(c), std::move(d), std::move(name));
}

RunReport multi_start(const Instance& inst, Algo algo, const TabuParams& tabu,
                      const Budget& budget, std::uint64_t seed, int jobs) {
  if (!budget.wall_seconds && !budget.max_restarts)
    throw std::invalid_argument("budget: at least one bound must be set");
  if ((budget.wall_seconds && *budget.wall_seconds <= 0) ||
      (budget.max_restarts && *budget.max_restarts <= 0))
    throw std::invalid_argument("budget: bounds must be positive");
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");

  const auto t0 = Clock::now();
  Deadline deadline;
  if (budget.wall_seconds)
    deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                        std::chrono::duration<double>(*budget.wall_seconds));

  const auto elapsed_now = [&] {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  };

  // Per-restart slots keep the merge independent of completion order: under a
  // restart budget every schedule produces the same report (time fields aside).
  std::mutex mu;
  std::vector<Value> values;
  std::vector<double> done_at;
  Value best_value = 0;
  std::int64_t best_index = -1;
  Solution best_solution;
  std::atomic<std::int64_t> next{0};

  const auto worker = [&] {
    std::mt19937_64 rng;
    while (true) {
      const std::int64_t k = next.fetch_add(1);
      if (budget.max_restarts && k >= *budget.max_restarts) break;
      if (k > 0 && reached(deadline)) break;  // restart 0 always runs
      rng.seed(seed_stream(seed, static_cast<std::uint64_t>(k)));
      const Solution start = random_solution(inst.m, inst.n, rng);
      TabuParams restart_tabu = tabu;
      restart_tabu.seed = rng();
      auto [sol, value] = run_algo(inst, algo, restart_tabu, start, deadline);
      const double done = elapsed_now();

      std::lock_guard<std::mutex> lock(mu);
      if (values.size() <= static_cast<std::size_t>(k)) {
        values.resize(k + 1, kNotRun);
        done_at.resize(k + 1, 0.0);
      }
      values[k] = value;
      done_at[k] = done;
      if (best_index < 0 || value > best_value ||
          (value == best_value && k < best_index)) {
        best_value = value;
        best_index = k;
        best_solution = std::move(sol);
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  RunReport report;
  report.instance = inst.name;
  report.algo = algo_name(algo);
  report.seed = seed;
  report.best_value = best_value;
  report.best_solution = std::move(best_solution);
  double last_detect = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] == kNotRun) continue;
    ++report.n_init;
    if (values[k] == best_value) {
      ++report.n_hit;
      last_detect = std::max(last_detect, done_at[k]);
    }
  }
  report.time_to_best_s = last_detect / static_cast<double>(report.n_hit);
  report.elapsed_s = elapsed_now();
  return report;
}

}  // namespace bbqp
