#include "bbqp/landscape.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <stdexcept>

#include "bbqp/harness.hpp"
#include "bbqp/rng.hpp"

namespace bbqp {

Landscape sample_landscape(const Instance& inst, int n_samples,
                           const TabuParams& tabu,
                           const std::optional<Solution>& reference,
                           std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be at least 1");

  std::vector<Solution> solutions;
  std::vector<Value> values;
  solutions.reserve(n_samples);
  values.reserve(n_samples);
  std::mt19937_64 rng;
  for (int k = 0; k < n_samples; ++k) {
    rng.seed(seed_stream(seed, static_cast<std::uint64_t>(k)));
    const Solution start = random_solution(inst.m, inst.n, rng);
    TabuParams sample_tabu = tabu;
    sample_tabu.seed = rng();
    TabuResult r = run_tabu(inst, start, sample_tabu);
    solutions.push_back(std::move(r.best));
    values.push_back(r.best_value);
  }

  Landscape out;
  if (reference) {
    out.reference = *reference;
    out.reference_value = evaluate(inst, *reference);
  } else {
    std::size_t best = 0;  // lowest index on ties
    for (std::size_t k = 1; k < values.size(); ++k)
      if (values[k] > values[best]) best = k;
    out.reference = solutions[best];
    out.reference_value = values[best];
  }

  out.samples.reserve(n_samples);
  for (int k = 0; k < n_samples; ++k)
    out.samples.push_back({hamming(solutions[k], out.reference),
                           out.reference_value - values[k], values[k]});
  return out;
}

void write_landscape_csv(const std::vector<LandscapeSample>& samples,
                         std::ostream& out) {
  std::vector<std::pair<int, Value>> rows;
  rows.reserve(samples.size());
  for (const auto& s : samples) rows.emplace_back(s.distance, s.gap);
  std::sort(rows.begin(), rows.end());
  out << "distance,gap\n";
  for (const auto& [distance, gap] : rows) out << distance << ',' << gap << '\n';
}

}  // namespace bbqp
