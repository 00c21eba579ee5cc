#ifndef BBQP_DEADLINE_HPP
#define BBQP_DEADLINE_HPP

#include <chrono>
#include <optional>

namespace bbqp {

using Clock = std::chrono::steady_clock;

// Absent deadline means run to natural termination.
using Deadline = std::optional<Clock::time_point>;

inline bool reached(const Deadline& deadline) {
  return deadline && Clock::now() >= *deadline;
}

}  // namespace bbqp

#endif
