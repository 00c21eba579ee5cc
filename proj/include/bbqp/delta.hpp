#ifndef BBQP_DELTA_HPP
#define BBQP_DELTA_HPP

#include <cstdint>
#include <vector>

#include "bbqp/instance.hpp"

namespace bbqp {

enum class Side : std::uint8_t { X, Y };

struct Move {
  Side side = Side::X;
  int index = 0;
  bool operator==(const Move&) const = default;
};

/// One-flip gains maintained incrementally. gain_x[i] is the exact objective
/// change from flipping x_i in the current solution, gain_y[j] likewise for
/// y_j. Construction costs O(mn); apply() costs O(m+n) and keeps the gains,
/// the solution, and the objective consistent after the flip.
class DeltaState {
 public:
  DeltaState(const Instance& inst, Solution sol);
  // The state keeps a pointer to inst, which must outlive it.
  DeltaState(Instance&&, Solution) = delete;

  Value gain(Move mv) const {
    return mv.side == Side::X ? gain_x_[mv.index] : gain_y_[mv.index];
  }

  void apply(Move mv);

  const Solution& solution() const { return sol_; }
  Value objective() const { return objective_; }
  const std::vector<Value>& gains_x() const { return gain_x_; }
  const std::vector<Value>& gains_y() const { return gain_y_; }
  const Instance& instance() const { return *inst_; }

 private:
  const Instance* inst_;
  Solution sol_;
  std::vector<Value> gain_x_;
  std::vector<Value> gain_y_;
  Value objective_ = 0;
};

}  // namespace bbqp

#endif
