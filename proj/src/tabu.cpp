#include "bbqp/tabu.hpp"

#include <random>
#include <stdexcept>

namespace bbqp {

TabuResult run_tabu(const Instance& inst, const Solution& start,
                    const TabuParams& params, Deadline deadline,
                    std::vector<TabuStep>* trace) {
  if (params.tabu_depth < 0 || params.tenure_divisor < 1 || params.tenure_span < 0)
    throw std::invalid_argument("tabu parameters out of range");
  const int depth = params.tabu_depth > 0 ? params.tabu_depth : 10 * (inst.m + inst.n);

  DeltaState state(inst, start);
  std::mt19937_64 rng(params.seed);
  TabuList tabu(inst.m, inst.n);

  Solution best = state.solution();
  Value best_value = state.objective();
  std::int64_t last_improvement = 0;

  while (tabu.iteration - last_improvement < depth && !reached(deadline)) {
    ++tabu.iteration;

    // Highest gain over both sides, tabu moves admissible only when they
    // would beat the best found. Strictly-greater updates over the scan order
    // break ties toward the lowest index, X side first.
    Move chosen{};
    Value chosen_gain = 0;
    bool found = false;
    bool aspired = false;
    Move fallback{};
    Value fallback_gain = 0;
    bool have_fallback = false;
    const auto consider = [&](Move mv, Value gain) {
      if (!have_fallback || gain > fallback_gain) {
        fallback = mv;
        fallback_gain = gain;
        have_fallback = true;
      }
      const bool is_tabu = tabu.is_tabu(mv);
      const bool beats_best = state.objective() + gain > best_value;
      if (is_tabu && !beats_best) return;
      if (!found || gain > chosen_gain) {
        chosen = mv;
        chosen_gain = gain;
        found = true;
        aspired = is_tabu;
      }
    };
    for (int i = 0; i < inst.m; ++i) consider({Side::X, i}, state.gains_x()[i]);
    for (int j = 0; j < inst.n; ++j) consider({Side::Y, j}, state.gains_y()[j]);

    const bool forced = !found;
    if (forced) {  // everything tabu and nothing aspires: move anyway
      chosen = fallback;
      chosen_gain = fallback_gain;
      aspired = false;
    }

    state.apply(chosen);
    const int side_size = chosen.side == Side::X ? inst.m : inst.n;
    const int tenure = side_size / params.tenure_divisor +
                       static_cast<int>(rng() % static_cast<std::uint64_t>(params.tenure_span + 1));
    tabu.mark(chosen, tenure);

    if (state.objective() > best_value) {
      best_value = state.objective();
      best = state.solution();
      last_improvement = tabu.iteration;
    }
    if (trace)
      trace->push_back({chosen, chosen_gain, tenure, aspired, forced, state.objective()});
  }

  return {std::move(best), best_value, tabu.iteration};
}

}  // namespace bbqp
