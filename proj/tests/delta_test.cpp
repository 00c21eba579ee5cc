#include <doctest.h>

#include <random>

#include "bbqp/delta.hpp"
#include "bbqp/harness.hpp"
#include "test_util.hpp"

using namespace bbqp;
using namespace testutil;

TEST_CASE("initial gains at hand-checked solutions") {
  const Instance inst = e1();
  SUBCASE("all zero: gains are the linear coefficients") {
    const DeltaState state(inst, sol("00", "00"));
    CHECK(state.gains_x() == std::vector<Value>{1, -1});
    CHECK(state.gains_y() == std::vector<Value>{-2, 1});
    CHECK(state.objective() == 0);
  }
  SUBCASE("first x bit set") {
    const DeltaState state(inst, sol("10", "00"));
    CHECK(state.gains_x() == std::vector<Value>{-1, -1});
    CHECK(state.gains_y() == std::vector<Value>{-1, -1});
    CHECK(state.objective() == 1);
  }
}

TEST_CASE("initial gains match the definition on random instances") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance inst = generate_random_instance(30, 40, -60, 60, trial);
    const Solution s = random_solution(inst.m, inst.n, rng);
    const DeltaState state(inst, s);
    const auto [gx, gy] = definitional_gains(inst, s);
    CHECK(state.gains_x() == gx);
    CHECK(state.gains_y() == gy);
    CHECK(state.objective() == evaluate(inst, s));
  }
}

TEST_CASE("a single move updates gains, solution, and objective") {
  const Instance inst = e1();
  DeltaState state(inst, sol("00", "00"));
  state.apply({Side::X, 0});
  CHECK(state.solution() == sol("10", "00"));
  CHECK(state.objective() == 1);  // rose by the pre-move gain
  CHECK(state.gains_x() == std::vector<Value>{-1, -1});
  CHECK(state.gains_y() == std::vector<Value>{-1, -1});
}

TEST_CASE("applying the same move twice is the identity") {
  const Instance inst = generate_random_instance(9, 6, -20, 20, 77);
  std::mt19937_64 rng(3);
  const Solution s = random_solution(inst.m, inst.n, rng);
  const DeltaState original(inst, s);
  for (int i = 0; i < inst.m; ++i) {
    DeltaState state(inst, s);
    state.apply({Side::X, i});
    state.apply({Side::X, i});
    CHECK(state.solution() == original.solution());
    CHECK(state.gains_x() == original.gains_x());
    CHECK(state.gains_y() == original.gains_y());
    CHECK(state.objective() == original.objective());
  }
  for (int j = 0; j < inst.n; ++j) {
    DeltaState state(inst, s);
    state.apply({Side::Y, j});
    state.apply({Side::Y, j});
    CHECK(state.solution() == original.solution());
    CHECK(state.gains_y() == original.gains_y());
  }
}

TEST_CASE("objective telescopes over applied gains") {
  const Instance inst = generate_random_instance(12, 17, -30, 30, 5);
  std::mt19937_64 rng(6);
  DeltaState state(inst, random_solution(inst.m, inst.n, rng));
  for (int step = 0; step < 200; ++step) {
    const int pick = static_cast<int>(rng() % (inst.m + inst.n));
    const Move mv = pick < inst.m ? Move{Side::X, pick} : Move{Side::Y, pick - inst.m};
    const Value before = state.objective();
    const Value gain = state.gain(mv);
    state.apply(mv);
    CHECK(state.objective() == before + gain);
    CHECK(state.objective() == evaluate(inst, state.solution()));
  }
}

TEST_CASE("a long random walk stays exact") {
  const Instance inst = generate_random_instance(50, 50, -100, 100, 13);
  std::mt19937_64 rng(14);
  DeltaState state(inst, random_solution(inst.m, inst.n, rng));
  for (int step = 0; step < 1000; ++step) {
    const int pick = static_cast<int>(rng() % (inst.m + inst.n));
    state.apply(pick < inst.m ? Move{Side::X, pick} : Move{Side::Y, pick - inst.m});
  }
  const DeltaState fresh(inst, state.solution());
  CHECK(state.gains_x() == fresh.gains_x());
  CHECK(state.gains_y() == fresh.gains_y());
  CHECK(state.objective() == fresh.objective());
  CHECK(state.objective() == evaluate(inst, state.solution()));
}

TEST_CASE("construction rejects mismatched solutions") {
  const Instance inst = e1();
  CHECK_THROWS_AS(DeltaState(inst, sol("0", "00")), std::invalid_argument);
}
