#include "bbqp/instance.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bbqp {

namespace {

std::uint64_t max_abs(const std::vector<Value>& v) {
  std::uint64_t best = 0;
  for (Value e : v) {
    const std::uint64_t a =
        e < 0 ? 0ull - static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(e);
    best = std::max(best, a);
  }
  return best;
}

void check_solution_shape(const Instance& inst, const Solution& sol) {
  if (static_cast<int>(sol.x.size()) != inst.m || static_cast<int>(sol.y.size()) != inst.n)
    throw std::invalid_argument("shape: solution does not match instance dimensions");
}

}  // namespace

void check_magnitudes(int m, int n, const std::vector<Value>& q,
                      const std::vector<Value>& c, const std::vector<Value>& d) {
  using Wide = unsigned __int128;
  const Wide total = Wide(m) * Wide(n) * Wide(max_abs(q)) +
                     Wide(m) * Wide(max_abs(c)) + Wide(n) * Wide(max_abs(d));
  if (total > (Wide(1) << 62))
    throw std::invalid_argument(
        "magnitude: m*n*max|q| + m*max|c| + n*max|d| exceeds 2^62, "
        "objective arithmetic would not be safe in 64 bits");
}

Instance::Instance(int rows, int cols, std::vector<Value> quad, std::vector<Value> xlin,
                   std::vector<Value> ylin, std::string label)
    : m(rows),
      n(cols),
      q(std::move(quad)),
      c(std::move(xlin)),
      d(std::move(ylin)),
      name(std::move(label)) {
  if (m < 1 || n < 1) throw std::invalid_argument("shape: m and n must be at least 1");
  if (q.size() != static_cast<std::size_t>(m) * n || c.size() != static_cast<std::size_t>(m) ||
      d.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("shape: coefficient sizes do not match m and n");
  check_magnitudes(m, n, q, c, d);
  qt.resize(q.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      qt[static_cast<std::size_t>(j) * m + i] = q[static_cast<std::size_t>(i) * n + j];
}

Value evaluate(const Instance& inst, const Solution& sol) {
  check_solution_shape(inst, sol);
  Value total = 0;
  for (int j = 0; j < inst.n; ++j)
    if (sol.y[j]) total += inst.d[j];
  for (int i = 0; i < inst.m; ++i) {
    if (!sol.x[i]) continue;
    total += inst.c[i];
    const Value* row = inst.row(i);
    for (int j = 0; j < inst.n; ++j)
      if (sol.y[j]) total += row[j];
  }
  return total;
}

BitVector best_response_y(const Instance& inst, const BitVector& x) {
  if (static_cast<int>(x.size()) != inst.m)
    throw std::invalid_argument("shape: x does not match instance dimensions");
  std::vector<Value> sums(inst.d);
  for (int i = 0; i < inst.m; ++i) {
    if (!x[i]) continue;
    const Value* row = inst.row(i);
    for (int j = 0; j < inst.n; ++j) sums[j] += row[j];
  }
  BitVector y(inst.n);
  for (int j = 0; j < inst.n; ++j) y[j] = sums[j] > 0;
  return y;
}

BitVector best_response_x(const Instance& inst, const BitVector& y) {
  if (static_cast<int>(y.size()) != inst.n)
    throw std::invalid_argument("shape: y does not match instance dimensions");
  std::vector<Value> sums(inst.c);
  for (int j = 0; j < inst.n; ++j) {
    if (!y[j]) continue;
    const Value* col = inst.col(j);
    for (int i = 0; i < inst.m; ++i) sums[i] += col[i];
  }
  BitVector x(inst.m);
  for (int i = 0; i < inst.m; ++i) x[i] = sums[i] > 0;
  return x;
}

int hamming(const Solution& a, const Solution& b) {
  if (a.x.size() != b.x.size() || a.y.size() != b.y.size())
    throw std::invalid_argument("shape: solutions have different dimensions");
  int dist = 0;
  for (std::size_t i = 0; i < a.x.size(); ++i) dist += a.x[i] != b.x[i];
  for (std::size_t j = 0; j < a.y.size(); ++j) dist += a.y[j] != b.y[j];
  return dist;
}

Value bqp_guard_value(const std::vector<Value>& qp, const std::vector<Value>& cp) {
  using Wide = unsigned __int128;
  const std::size_t n = cp.size();
  if (n < 1 || qp.size() != n * n)
    throw std::invalid_argument("shape: Q' must be n*n with n = |c'| >= 1");
  const Wide guard = 1 + Wide(n) * Wide(max_abs(qp)) + Wide(max_abs(cp));
  if (guard > Wide(std::numeric_limits<Value>::max()))
    throw std::invalid_argument("magnitude: BQP coefficients too large to reduce");
  return static_cast<Value>(guard);
}

Instance reduce_bqp(const std::vector<Value>& qp, const std::vector<Value>& cp,
                    Value penalty) {
  const int n = static_cast<int>(cp.size());
  if (penalty < bqp_guard_value(qp, cp))
    throw std::invalid_argument(
        "M-too-small: penalty must be at least 1 + n*max|q'| + max|c'|");
  // 4*penalty must clear the instance magnitude guard; reject early so the
  // scaled coefficients below cannot overflow while being built.
  if (penalty > (Value(1) << 60))
    throw std::invalid_argument("magnitude: penalty too large for 64-bit arithmetic");
  std::vector<Value> q(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      q[static_cast<std::size_t>(i) * n + j] =
          2 * qp[static_cast<std::size_t>(i) * n + j] + (i == j ? 4 * penalty : 0);
  std::vector<Value> lin(cp);
  for (Value& v : lin) v -= 2 * penalty;
  return Instance(n, n, std::move(q), lin, lin);
}

OptResult brute_force_opt(const Instance& inst) {
  if (inst.m + inst.n > 30)
    throw SizeCapError("too-large: exhaustive search is capped at m + n <= 30");

  // Bit k of the enumerated side sits at mask bit (len-1-k), so increasing
  // masks walk the bit strings in lexicographic order.
  const auto bits_from_mask = [](std::uint32_t mask, int len) {
    BitVector v(len);
    for (int k = 0; k < len; ++k) v[k] = (mask >> (len - 1 - k)) & 1u;
    return v;
  };

  OptResult best;
  if (inst.m <= inst.n) {
    // Lexicographic x order plus strictly-greater updates keeps the smallest
    // optimal x; the strict best response is the smallest optimal y for it.
    bool first = true;
    for (std::uint32_t mask = 0; mask < (1u << inst.m); ++mask) {
      BitVector x = bits_from_mask(mask, inst.m);
      BitVector y = best_response_y(inst, x);
      const Value v = evaluate(inst, {x, y});
      if (first || v > best.value) {
        first = false;
        best.value = v;
        best.sol = {std::move(x), std::move(y)};
      }
    }
  } else {
    // Enumerating y cannot order by x directly: every optimal x is dominated
    // lexicographically by the strict best response to some optimal y, so the
    // smallest such response is the smallest optimal x overall.
    bool first = true;
    BitVector best_x;
    for (std::uint32_t mask = 0; mask < (1u << inst.n); ++mask) {
      const BitVector y = bits_from_mask(mask, inst.n);
      BitVector x = best_response_x(inst, y);
      const Value v = evaluate(inst, {x, y});
      if (first || v > best.value || (v == best.value && x < best_x)) {
        first = false;
        best.value = v;
        best_x = std::move(x);
      }
    }
    BitVector y = best_response_y(inst, best_x);
    best.sol = {std::move(best_x), std::move(y)};
  }
  return best;
}

}  // namespace bbqp
