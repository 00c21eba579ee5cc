#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>
#include <vector>

#include "bbqp/harness.hpp"
#include "bbqp/rng.hpp"
#include "bbqp/tabu.hpp"
#include "test_util.hpp"

using namespace bbqp;
using testutil::bits;
using testutil::e1;
using testutil::sol;

namespace {

// Replays a trace against the published rules: tenure bounds, the tabu window
// of an applied index, aspiration only when the move lands strictly above the
// running best, telescoping values, and the stopping rule.
void audit(const Instance& inst, const Solution& start, const TabuParams& params,
           const TabuResult& result, const std::vector<TabuStep>& trace) {
  const int depth = params.tabu_depth > 0 ? params.tabu_depth : 10 * (inst.m + inst.n);
  std::vector<std::int64_t> expiry_x(inst.m, 0), expiry_y(inst.n, 0);
  Value value = evaluate(inst, start);
  Value best = value;
  std::int64_t last_improvement = 0;

  for (std::size_t k = 0; k < trace.size(); ++k) {
    const TabuStep& step = trace[k];
    const std::int64_t t = static_cast<std::int64_t>(k) + 1;
    auto& expiry = step.move.side == Side::X ? expiry_x : expiry_y;
    const int side_size = step.move.side == Side::X ? inst.m : inst.n;
    const int base = side_size / params.tenure_divisor;

    CHECK(step.tenure >= base);
    CHECK(step.tenure <= base + params.tenure_span);

    const bool was_tabu = expiry[step.move.index] > t;
    if (was_tabu) CHECK((step.aspiration || step.forced));
    if (!was_tabu) {
      CHECK_FALSE(step.aspiration);
      CHECK_FALSE(step.forced);
    }
    if (step.aspiration) CHECK(step.value_after > best);
    if (step.forced) CHECK(was_tabu);  // a forced move is itself tabu

    value += step.gain;
    CHECK(step.value_after == value);
    if (value > best) {
      best = value;
      last_improvement = t;
    }
    expiry[step.move.index] = t + step.tenure + 1;
  }

  CHECK(result.best_value == best);
  CHECK(result.iterations == static_cast<std::int64_t>(trace.size()));
  CHECK(evaluate(inst, result.best) == result.best_value);
  // Without a deadline the search stops exactly depth iterations after the
  // last improvement.
  CHECK(result.iterations == last_improvement + depth);
}

}  // namespace

TEST_CASE("tabu search solves the tiny instance from every start") {
  const Instance inst = e1();
  TabuParams params;
  params.tabu_depth = 100;
  params.seed = 7;
  for (int xm = 0; xm < 4; ++xm) {
    for (int ym = 0; ym < 4; ++ym) {
      Solution start{testutil::mask_bits(xm, 2), testutil::mask_bits(ym, 2)};
      const Value start_value = evaluate(inst, start);
      std::vector<TabuStep> trace;
      const TabuResult r = run_tabu(inst, start, params, {}, &trace);
      CHECK(r.best_value == 5);
      CHECK(r.best_value >= start_value);
      audit(inst, start, params, r, trace);
    }
  }
}

TEST_CASE("tabu search moves even when no move improves") {
  const Instance inst = e1();
  TabuParams params;
  params.tabu_depth = 3;
  // (01,11) is optimal; the best available move from it has gain 0 and the
  // search must take it anyway.
  std::vector<TabuStep> trace;
  const TabuResult r = run_tabu(inst, sol("01", "11"), params, {}, &trace);
  CHECK(r.best_value == 5);
  REQUIRE(!trace.empty());
  CHECK(trace[0].gain == 0);
  CHECK((trace[0].move == Move{Side::X, 0}));  // ties break toward X, low index
  CHECK(trace[0].value_after == 5);
}

TEST_CASE("tabu search on an all-negative instance keeps the zero solution value") {
  const Instance inst(3, 2, {-5, -1, -2, -7, -3, -4}, {-1, -2, -3}, {-4, -5});
  TabuParams params;
  params.tabu_depth = 60;
  params.seed = 3;
  const TabuResult r = run_tabu(inst, sol("111", "11"), params);
  CHECK(r.best_value == 0);
  CHECK(r.best == sol("000", "00"));
}

TEST_CASE("tabu trajectories obey the tabu and aspiration rules") {
  std::mt19937_64 meta(0x5eedULL);
  for (int rep = 0; rep < 12; ++rep) {
    const Instance inst =
        generate_random_instance(9, 7, -10, 10, 7000 + rep);
    std::mt19937_64 rng(meta());
    const Solution start = random_solution(inst.m, inst.n, rng);
    TabuParams params;
    params.tabu_depth = 150;
    params.tenure_divisor = 2;  // long tenures force aspiration and forced moves
    params.tenure_span = 4;
    params.seed = 40 + rep;
    std::vector<TabuStep> trace;
    const TabuResult r = run_tabu(inst, start, params, {}, &trace);
    audit(inst, start, params, r, trace);
  }
}

TEST_CASE("tabu search is deterministic for a fixed seed") {
  const Instance inst = generate_random_instance(12, 9, -30, 30, 99);
  std::mt19937_64 rng(5);
  const Solution start = random_solution(inst.m, inst.n, rng);
  TabuParams params;
  params.tabu_depth = 120;
  params.seed = 21;

  std::vector<TabuStep> a, b;
  const TabuResult ra = run_tabu(inst, start, params, {}, &a);
  const TabuResult rb = run_tabu(inst, start, params, {}, &b);
  CHECK(ra.best_value == rb.best_value);
  CHECK(ra.best == rb.best);
  CHECK(ra.iterations == rb.iterations);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].move == b[k].move);
    CHECK(a[k].gain == b[k].gain);
    CHECK(a[k].tenure == b[k].tenure);
    CHECK(a[k].aspiration == b[k].aspiration);
    CHECK(a[k].forced == b[k].forced);
    CHECK(a[k].value_after == b[k].value_after);
  }
}

TEST_CASE("restarted tabu search finds the optimum of small instances") {
  int matched = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const Instance inst = generate_random_instance(8, 8, -8, 8, 1000 + rep);
    const OptResult exact = brute_force_opt(inst);
    TabuParams params;
    params.tabu_depth = 200;
    Value found = 0;
    std::mt19937_64 rng(seed_stream(77, rep));
    for (int restart = 0; restart < 5; ++restart) {
      const Solution start = random_solution(inst.m, inst.n, rng);
      params.seed = rng();
      const TabuResult r = run_tabu(inst, start, params);
      CHECK(r.best_value >= evaluate(inst, start));
      found = std::max(found, r.best_value);
    }
    CHECK(found <= exact.value);
    if (found == exact.value) ++matched;
  }
  CHECK(matched >= 95);
}

TEST_CASE("tabu search returns the start when the deadline has already passed") {
  const Instance inst = e1();
  const Deadline past = Clock::now() - std::chrono::seconds(1);
  const TabuResult r = run_tabu(inst, sol("10", "01"), TabuParams{}, past);
  CHECK(r.iterations == 0);
  CHECK(r.best == sol("10", "01"));
  CHECK(r.best_value == evaluate(inst, sol("10", "01")));
}

TEST_CASE("tabu parameter validation") {
  const Instance inst = e1();
  TabuParams params;
  params.tenure_divisor = 0;
  CHECK_THROWS_AS(run_tabu(inst, sol("00", "00"), params), std::invalid_argument);
  params = TabuParams{};
  params.tabu_depth = -1;
  CHECK_THROWS_AS(run_tabu(inst, sol("00", "00"), params), std::invalid_argument);
  params = TabuParams{};
  params.tenure_span = -1;
  CHECK_THROWS_AS(run_tabu(inst, sol("00", "00"), params), std::invalid_argument);
}
