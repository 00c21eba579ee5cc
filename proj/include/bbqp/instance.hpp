#ifndef BBQP_INSTANCE_HPP
#define BBQP_INSTANCE_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bbqp {

/// Raised when a request exceeds a documented hard size cap (currently only
/// brute_force_opt). Kept distinct so callers can map it to its own exit code.
class SizeCapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Value = std::int64_t;
using BitVector = std::vector<std::uint8_t>;  // entries are 0 or 1

/// Bipartite boolean quadratic program: maximize x'Qy + cx + dy over binary
/// x (length m) and y (length n). Coefficients are integers; construction
/// enforces a magnitude guard under which every objective, gain, and sum in
/// this library fits in int64, so all accounting stays exact.
struct Instance {
  int m = 0;
  int n = 0;
  std::vector<Value> q;   // row-major, m*n
  std::vector<Value> qt;  // column-major copy; column walks stay contiguous
  std::vector<Value> c;   // length m
  std::vector<Value> d;   // length n
  std::string name;       // display label only, not part of identity

  Instance() = default;
  Instance(int rows, int cols, std::vector<Value> quad, std::vector<Value> xlin,
           std::vector<Value> ylin, std::string label = "");

  const Value* row(int i) const { return q.data() + static_cast<std::size_t>(i) * n; }
  const Value* col(int j) const { return qt.data() + static_cast<std::size_t>(j) * m; }
  Value at(int i, int j) const { return row(i)[j]; }

  bool operator==(const Instance& other) const {
    return m == other.m && n == other.n && q == other.q && c == other.c && d == other.d;
  }
};

struct Solution {
  BitVector x;
  BitVector y;
  bool operator==(const Solution&) const = default;
};

// Rejects coefficient sets where m*n*max|q| + m*max|c| + n*max|d| > 2^62.
// Throws std::invalid_argument. Called by the Instance constructor.
void check_magnitudes(int m, int n, const std::vector<Value>& q,
                      const std::vector<Value>& c, const std::vector<Value>& d);

Value evaluate(const Instance& inst, const Solution& sol);

// Optimal y for fixed x: y_j = 1 iff d_j + sum_i x_i q_ij > 0. Ties go to 0,
// which is also the lexicographically smallest maximizer.
BitVector best_response_y(const Instance& inst, const BitVector& x);
BitVector best_response_x(const Instance& inst, const BitVector& y);

// Differing bits over the concatenation of x and y.
int hamming(const Solution& a, const Solution& b);

// Smallest admissible penalty for reduce_bqp: 1 + n*max|q'_ij| + max|c'_i|.
Value bqp_guard_value(const std::vector<Value>& qp, const std::vector<Value>& cp);

// Embeds the BQP "maximize x'Q'x + c'x, x binary of length n" as a BBQP with
// Q = 2Q' + 4MI and c = d = c' - 2M. Doubling keeps everything integral: every
// optimum of the result has x == y and value exactly twice the BQP optimum.
// Throws std::invalid_argument when penalty < bqp_guard_value.
Instance reduce_bqp(const std::vector<Value>& qp, const std::vector<Value>& cp,
                    Value penalty);

struct OptResult {
  Solution sol;
  Value value = 0;
};

// Exhaustive optimum for m + n <= 30 (throws SizeCapError beyond the cap).
// Enumerates the smaller side and floats the other; among optima returns the
// lexicographically smallest (x first, then y) bit string.
OptResult brute_force_opt(const Instance& inst);

}  // namespace bbqp

#endif
