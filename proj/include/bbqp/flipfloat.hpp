#ifndef BBQP_FLIPFLOAT_HPP
#define BBQP_FLIPFLOAT_HPP

#include <vector>

#include "bbqp/deadline.hpp"
#include "bbqp/instance.hpp"

namespace bbqp {

/// Marginal sums used by the flip-float moves:
///   sum_x[j] = d_j + sum_i x_i q_ij   (a function of x, indexed by j)
///   sum_y[i] = c_i + sum_j y_j q_ij   (a function of y, indexed by i)
/// Each side carries a validity flag; operations that read a side throw
/// std::logic_error("stale-state ...") when that side is not valid.
struct SumState {
  std::vector<Value> sum_x;
  std::vector<Value> sum_y;
  bool x_valid = false;
  bool y_valid = false;
};

SumState init_sum_x(const Instance& inst, const BitVector& x);
SumState init_sum_y(const Instance& inst, const BitVector& y);

// Objective after floating the named side to its best response:
// f_ystar = sum_i c_i x_i + sum_j max(0, sum_x[j]), and mirrored for f_xstar.
Value f_ystar(const Instance& inst, const BitVector& x, const SumState& sums);
Value f_xstar(const Instance& inst, const BitVector& y, const SumState& sums);

// Exact change of f_ystar caused by flipping x_i, in O(n): only terms whose
// max(0, sum) clamp state can change contribute. Mirrored for the y side.
Value delta_flip_x_float_y(const Instance& inst, const BitVector& x,
                           const SumState& sums, int i);
Value delta_flip_y_float_x(const Instance& inst, const BitVector& y,
                           const SumState& sums, int j);

// Adjust sum_x after x_i changed to new_bit (O(n)); sum_y is a function of y
// alone and stays untouched. Mirrored for a y_j flip.
void update_sum_x_after_flip(const Instance& inst, int i, bool new_bit, SumState& sums);
void update_sum_y_after_flip(const Instance& inst, int j, bool new_bit, SumState& sums);

struct CoordinateResult {
  Solution sol;
  Value value = 0;
};

// Alternating first-improvement ascent over the two flip-float neighborhoods.
// Each phase floats the opposite side to its best response, then scans its own
// side in index order, applying the first strictly improving flip and
// restarting the scan. Exits once a full pass over both phases changes
// nothing, which certifies the result locally optimal for both move families.
// value_trace, when provided, records the objective after every change.
CoordinateResult run_coordinate(const Instance& inst, const Solution& start,
                                Deadline deadline = {},
                                std::vector<Value>* value_trace = nullptr);

}  // namespace bbqp

#endif
