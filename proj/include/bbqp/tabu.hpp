#ifndef BBQP_TABU_HPP
#define BBQP_TABU_HPP

#include <cstdint>
#include <vector>

#include "bbqp/deadline.hpp"
#include "bbqp/delta.hpp"
#include "bbqp/instance.hpp"

namespace bbqp {

struct TabuParams {
  // Stop after this many consecutive iterations without improving the best
  // found solution. 0 selects the default 10*(m+n).
  int tabu_depth = 0;
  // Tenure of a flipped index: side_size / tenure_divisor + rand(0..tenure_span),
  // drawn fresh for every assignment. side_size is m for X moves, n for Y.
  int tenure_divisor = 20;
  int tenure_span = 10;
  std::uint64_t seed = 0;
};

/// Per-index expiry iterations. An index is tabu exactly while its expiry
/// exceeds the current iteration.
struct TabuList {
  std::vector<std::int64_t> expiry_x;
  std::vector<std::int64_t> expiry_y;
  std::int64_t iteration = 0;

  TabuList(int m, int n) : expiry_x(m, 0), expiry_y(n, 0) {}

  bool is_tabu(Move mv) const {
    const auto& e = mv.side == Side::X ? expiry_x : expiry_y;
    return e[mv.index] > iteration;
  }

  // Forbid mv.index for the next `tenure` iterations (free again after that).
  void mark(Move mv, int tenure) {
    auto& e = mv.side == Side::X ? expiry_x : expiry_y;
    e[mv.index] = iteration + tenure + 1;
  }
};

/// One applied iteration, for trajectory audits.
struct TabuStep {
  Move move;
  Value gain = 0;
  int tenure = 0;
  bool aspiration = false;  // move was tabu but beat the best found value
  bool forced = false;      // nothing was admissible; best move taken anyway
  Value value_after = 0;
};

struct TabuResult {
  Solution best;
  Value best_value = 0;
  std::int64_t iterations = 0;
};

// One-flip tabu search. Every iteration applies the highest-gain admissible
// move over both sides (ties: lowest index, X before Y) unconditionally, even
// when the gain is negative; a tabu move is admissible only if it would
// strictly beat the best value found so far.
TabuResult run_tabu(const Instance& inst, const Solution& start,
                    const TabuParams& params, Deadline deadline = {},
                    std::vector<TabuStep>* trace = nullptr);

}  // namespace bbqp

#endif
