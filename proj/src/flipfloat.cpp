#include "bbqp/flipfloat.hpp"

#include <algorithm>
#include <stdexcept>

namespace bbqp {

namespace {

void require_x_side(const SumState& sums) {
  if (!sums.x_valid) throw std::logic_error("stale-state: sum_x does not match the current x");
}

void require_y_side(const SumState& sums) {
  if (!sums.y_valid) throw std::logic_error("stale-state: sum_y does not match the current y");
}

}  // namespace

SumState init_sum_x(const Instance& inst, const BitVector& x) {
  if (static_cast<int>(x.size()) != inst.m)
    throw std::invalid_argument("shape: x does not match instance dimensions");
  SumState sums;
  sums.sum_x.assign(inst.d.begin(), inst.d.end());
  for (int i = 0; i < inst.m; ++i) {
    if (!x[i]) continue;
    const Value* row = inst.row(i);
    for (int j = 0; j < inst.n; ++j) sums.sum_x[j] += row[j];
  }
  sums.x_valid = true;
  return sums;
}

SumState init_sum_y(const Instance& inst, const BitVector& y) {
  if (static_cast<int>(y.size()) != inst.n)
    throw std::invalid_argument("shape: y does not match instance dimensions");
  SumState sums;
  sums.sum_y.assign(inst.c.begin(), inst.c.end());
  for (int j = 0; j < inst.n; ++j) {
    if (!y[j]) continue;
    const Value* col = inst.col(j);
    for (int i = 0; i < inst.m; ++i) sums.sum_y[i] += col[i];
  }
  sums.y_valid = true;
  return sums;
}

Value f_ystar(const Instance& inst, const BitVector& x, const SumState& sums) {
  require_x_side(sums);
  if (static_cast<int>(x.size()) != inst.m)
    throw std::invalid_argument("shape: x does not match instance dimensions");
  Value total = 0;
  for (int i = 0; i < inst.m; ++i)
    if (x[i]) total += inst.c[i];
  for (int j = 0; j < inst.n; ++j)
    if (sums.sum_x[j] > 0) total += sums.sum_x[j];
  return total;
}

Value f_xstar(const Instance& inst, const BitVector& y, const SumState& sums) {
  require_y_side(sums);
  if (static_cast<int>(y.size()) != inst.n)
    throw std::invalid_argument("shape: y does not match instance dimensions");
  Value total = 0;
  for (int j = 0; j < inst.n; ++j)
    if (y[j]) total += inst.d[j];
  for (int i = 0; i < inst.m; ++i)
    if (sums.sum_y[i] > 0) total += sums.sum_y[i];
  return total;
}

Value delta_flip_x_float_y(const Instance& inst, const BitVector& x,
                           const SumState& sums, int i) {
  require_x_side(sums);
  const Value sign = x[i] ? -1 : 1;
  Value delta = sign * inst.c[i];
  const Value* row = inst.row(i);
  // Each column contributes max(0, sum + change) - max(0, sum); only columns
  // whose clamp state can move contribute, and each does so by a min() term.
  for (int j = 0; j < inst.n; ++j) {
    const Value change = sign * row[j];
    if (change > 0) {
      const Value after = sums.sum_x[j] + change;
      if (after > 0) delta += std::min(change, after);
    } else if (change < 0 && sums.sum_x[j] > 0) {
      delta -= std::min(-change, sums.sum_x[j]);
    }
  }
  return delta;
}

Value delta_flip_y_float_x(const Instance& inst, const BitVector& y,
                           const SumState& sums, int j) {
  require_y_side(sums);
  const Value sign = y[j] ? -1 : 1;
  Value delta = sign * inst.d[j];
  const Value* col = inst.col(j);
  for (int i = 0; i < inst.m; ++i) {
    const Value change = sign * col[i];
    if (change > 0) {
      const Value after = sums.sum_y[i] + change;
      if (after > 0) delta += std::min(change, after);
    } else if (change < 0 && sums.sum_y[i] > 0) {
      delta -= std::min(-change, sums.sum_y[i]);
    }
  }
  return delta;
}

void update_sum_x_after_flip(const Instance& inst, int i, bool new_bit, SumState& sums) {
  require_x_side(sums);
  const Value* row = inst.row(i);
  if (new_bit) {
    for (int j = 0; j < inst.n; ++j) sums.sum_x[j] += row[j];
  } else {
    for (int j = 0; j < inst.n; ++j) sums.sum_x[j] -= row[j];
  }
}

void update_sum_y_after_flip(const Instance& inst, int j, bool new_bit, SumState& sums) {
  require_y_side(sums);
  const Value* col = inst.col(j);
  if (new_bit) {
    for (int i = 0; i < inst.m; ++i) sums.sum_y[i] += col[i];
  } else {
    for (int i = 0; i < inst.m; ++i) sums.sum_y[i] -= col[i];
  }
}

CoordinateResult run_coordinate(const Instance& inst, const Solution& start,
                                Deadline deadline, std::vector<Value>* value_trace) {
  if (static_cast<int>(start.x.size()) != inst.m ||
      static_cast<int>(start.y.size()) != inst.n)
    throw std::invalid_argument("shape: solution does not match instance dimensions");
  BitVector x = start.x;
  BitVector y = start.y;

  int tick = 0;
  bool time_up = reached(deadline);
  const auto out_of_time = [&]() {
    if ((++tick & 63) == 0 && reached(deadline)) time_up = true;
    return time_up;
  };

  // A pass that changes no bit certifies local optimality for both move
  // families; a pass that changes bits either raises the objective or, at
  // constant objective, strictly drops popcount (strict best responses are
  // the minimal maximizers), so the loop terminates.
  bool changed = true;
  while (changed && !time_up) {
    changed = false;

    SumState sums = init_sum_x(inst, x);
    {
      BitVector floated(inst.n);
      for (int j = 0; j < inst.n; ++j) floated[j] = sums.sum_x[j] > 0;
      if (floated != y) {
        y = std::move(floated);
        changed = true;
        if (value_trace) value_trace->push_back(f_ystar(inst, x, sums));
      }
    }
    for (int i = 0; i < inst.m && !out_of_time();) {
      if (delta_flip_x_float_y(inst, x, sums, i) > 0) {
        x[i] ^= 1;
        update_sum_x_after_flip(inst, i, x[i], sums);
        for (int j = 0; j < inst.n; ++j) y[j] = sums.sum_x[j] > 0;
        changed = true;
        if (value_trace) value_trace->push_back(f_ystar(inst, x, sums));
        i = 0;
      } else {
        ++i;
      }
    }
    if (time_up) break;

    SumState sums_y = init_sum_y(inst, y);
    {
      BitVector floated(inst.m);
      for (int i = 0; i < inst.m; ++i) floated[i] = sums_y.sum_y[i] > 0;
      if (floated != x) {
        x = std::move(floated);
        changed = true;
        if (value_trace) value_trace->push_back(f_xstar(inst, y, sums_y));
      }
    }
    for (int j = 0; j < inst.n && !out_of_time();) {
      if (delta_flip_y_float_x(inst, y, sums_y, j) > 0) {
        y[j] ^= 1;
        update_sum_y_after_flip(inst, j, y[j], sums_y);
        for (int i = 0; i < inst.m; ++i) x[i] = sums_y.sum_y[i] > 0;
        changed = true;
        if (value_trace) value_trace->push_back(f_xstar(inst, y, sums_y));
        j = 0;
      } else {
        ++j;
      }
    }
  }

  Solution sol{std::move(x), std::move(y)};
  const Value value = evaluate(inst, sol);
  return {std::move(sol), value};
}

}  // namespace bbqp
