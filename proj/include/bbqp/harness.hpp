#ifndef BBQP_HARNESS_HPP
#define BBQP_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "bbqp/instance.hpp"
#include "bbqp/tabu.hpp"

namespace bbqp {

enum class Algo { Tabu, FlipFloat, Hybrid };

const char* algo_name(Algo algo);
std::optional<Algo> algo_from_name(std::string_view name);

/// Stopping rule for a multi-start run; at least one bound must be set and
/// set bounds must be positive, otherwise multi_start throws.
struct Budget {
  std::optional<double> wall_seconds;
  std::optional<std::int64_t> max_restarts;
};

struct RunReport {
  std::string instance;
  std::string algo;
  Value best_value = 0;
  std::int64_t n_init = 0;  // restarts performed
  std::int64_t n_hit = 0;   // restarts whose final value equals best_value
  double time_to_best_s = 0.0;  // elapsed at last detection of best_value, / n_hit
  double elapsed_s = 0.0;
  std::uint64_t seed = 0;
  Solution best_solution;  // of the lowest restart index reaching best_value
};

// Single-line tab-separated record: instance, algo, best_value, n_init,
// n_hit, time_to_best_s, elapsed_s, seed.
std::string report_tsv(const RunReport& report);
// One "field: value" line per field, same order.
std::string report_text(const RunReport& report);

// Each bit independently 1 with probability 1/2; consumes one generator draw
// per bit, x first then y.
Solution random_solution(int m, int n, std::mt19937_64& rng);

// Entries of Q, c, d uniform over [lo, hi] (Q row-major first, then c, then
// d). Identical seeds give identical instances.
Instance generate_random_instance(int m, int n, Value lo, Value hi,
                                  std::uint64_t seed, std::string name = "");

// Runs `algo` from independent random starts until the budget is exhausted
// (checked between restarts; restart 0 always runs). Restart k draws its
// start and its tabu seed from a generator seeded with seed_stream(seed, k),
// so reports under a restart budget are identical for any worker count,
// wall-clock fields aside.
RunReport multi_start(const Instance& inst, Algo algo, const TabuParams& tabu,
                      const Budget& budget, std::uint64_t seed, int jobs = 1);

}  // namespace bbqp

#endif
