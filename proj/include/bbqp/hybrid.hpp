#ifndef BBQP_HYBRID_HPP
#define BBQP_HYBRID_HPP

#include "bbqp/deadline.hpp"
#include "bbqp/flipfloat.hpp"
#include "bbqp/tabu.hpp"

namespace bbqp {

struct HybridResult {
  Solution best;
  Value best_value = 0;
  int rounds = 0;  // tabu+coordinate rounds executed
};

// Alternates a tabu phase with a coordinate phase, each seeded with the
// current incumbent, and repeats while the coordinate phase strictly improved
// the solution it was given. Returns the best solution seen by either phase;
// never worse than either method alone from the same start and tabu seed.
HybridResult run_hybrid(const Instance& inst, const Solution& start,
                        const TabuParams& tabu, Deadline deadline = {});

}  // namespace bbqp

#endif
