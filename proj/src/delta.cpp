#include "bbqp/delta.hpp"

#include <stdexcept>

namespace bbqp {

DeltaState::DeltaState(const Instance& inst, Solution sol)
    : inst_(&inst), sol_(std::move(sol)), gain_x_(inst.m), gain_y_(inst.n) {
  if (static_cast<int>(sol_.x.size()) != inst.m ||
      static_cast<int>(sol_.y.size()) != inst.n)
    throw std::invalid_argument("shape: solution does not match instance dimensions");
  // gain_x[i] = (1-2x_i)(c_i + sum_j y_j q_ij), mirrored for gain_y; the
  // objective falls out of the same row sweep.
  std::vector<Value> colsum(inst.d);
  for (int i = 0; i < inst.m; ++i) {
    const Value* row = inst.row(i);
    Value rowsum = inst.c[i];
    for (int j = 0; j < inst.n; ++j)
      if (sol_.y[j]) rowsum += row[j];
    if (sol_.x[i]) {
      objective_ += rowsum;
      for (int j = 0; j < inst.n; ++j) colsum[j] += row[j];
    }
    gain_x_[i] = sol_.x[i] ? -rowsum : rowsum;
  }
  for (int j = 0; j < inst.n; ++j) {
    if (sol_.y[j]) objective_ += inst.d[j];
    gain_y_[j] = sol_.y[j] ? -colsum[j] : colsum[j];
  }
}

void DeltaState::apply(Move mv) {
  const Instance& inst = *inst_;
  const Value gained = gain(mv);
  if (mv.side == Side::X) {
    const int i = mv.index;
    const Value* row = inst.row(i);
    if (sol_.x[i]) {
      // 1 -> 0: row i leaves every column sum, so flipping y_j to 1 gains
      // q_ij less (and to 0 loses q_ij less).
      for (int j = 0; j < inst.n; ++j) gain_y_[j] += sol_.y[j] ? row[j] : -row[j];
    } else {
      for (int j = 0; j < inst.n; ++j) gain_y_[j] += sol_.y[j] ? -row[j] : row[j];
    }
    gain_x_[i] = -gain_x_[i];
    sol_.x[i] ^= 1;
  } else {
    const int j = mv.index;
    const Value* col = inst.col(j);
    if (sol_.y[j]) {
      for (int i = 0; i < inst.m; ++i) gain_x_[i] += sol_.x[i] ? col[i] : -col[i];
    } else {
      for (int i = 0; i < inst.m; ++i) gain_x_[i] += sol_.x[i] ? -col[i] : col[i];
    }
    gain_y_[j] = -gain_y_[j];
    sol_.y[j] ^= 1;
  }
  objective_ += gained;
}

}  // namespace bbqp
