#include "bbqp/hybrid.hpp"

namespace bbqp {

HybridResult run_hybrid(const Instance& inst, const Solution& start,
                        const TabuParams& tabu, Deadline deadline) {
  Solution current = start;
  Value current_value = evaluate(inst, current);
  HybridResult result{current, current_value, 0};

  bool coordinate_improved = true;
  while (coordinate_improved && !reached(deadline)) {
    ++result.rounds;

    TabuResult t = run_tabu(inst, current, tabu, deadline);
    current = std::move(t.best);
    current_value = t.best_value;
    if (current_value > result.best_value) {
      result.best = current;
      result.best_value = current_value;
    }

    CoordinateResult c = run_coordinate(inst, current, deadline);
    coordinate_improved = c.value > current_value;
    current = std::move(c.sol);
    current_value = c.value;
    if (current_value > result.best_value) {
      result.best = current;
      result.best_value = current_value;
    }
  }
  return result;
}

}  // namespace bbqp
