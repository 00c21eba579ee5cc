#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bbqp/harness.hpp"
#include "bbqp/landscape.hpp"
#include "test_util.hpp"

using namespace bbqp;
using testutil::e1;
using testutil::sol;

TEST_CASE("landscape of the tiny instance centers on its optimum") {
  const Instance inst = e1();
  const Landscape land = sample_landscape(inst, 50, TabuParams{}, std::nullopt, 3);
  REQUIRE(land.samples.size() == 50);
  CHECK(land.reference_value == 5);
  CHECK(evaluate(inst, land.reference) == 5);
  bool any_zero_gap = false;
  for (const auto& s : land.samples) {
    CHECK(s.gap >= 0);  // default reference is the best sample
    CHECK(s.gap == land.reference_value - s.value);
    CHECK(s.distance >= 0);
    CHECK(s.distance <= inst.m + inst.n);
    if (s.gap == 0) any_zero_gap = true;
  }
  CHECK(any_zero_gap);
}

TEST_CASE("a weak supplied reference yields negative gaps") {
  const Instance inst = e1();
  const Landscape land =
      sample_landscape(inst, 20, TabuParams{}, sol("00", "00"), 3);
  CHECK(land.reference_value == 0);
  CHECK(std::any_of(land.samples.begin(), land.samples.end(),
                    [](const LandscapeSample& s) { return s.gap < 0; }));
}

TEST_CASE("a reference equal to a sampled solution pins distance and gap to zero") {
  const Instance inst = generate_random_instance(7, 6, -20, 20, 55);
  const Landscape base = sample_landscape(inst, 15, TabuParams{}, std::nullopt, 9);
  const Landscape again = sample_landscape(inst, 15, TabuParams{}, base.reference, 9);
  CHECK(again.reference_value == base.reference_value);
  CHECK(std::any_of(again.samples.begin(), again.samples.end(),
                    [](const LandscapeSample& s) {
                      return s.distance == 0 && s.gap == 0;
                    }));
}

TEST_CASE("a single sample without a reference measures itself") {
  const Instance inst = e1();
  const Landscape land = sample_landscape(inst, 1, TabuParams{}, std::nullopt, 12);
  REQUIRE(land.samples.size() == 1);
  CHECK(land.samples[0].distance == 0);
  CHECK(land.samples[0].gap == 0);
  CHECK(land.samples[0].value == land.reference_value);
}

TEST_CASE("landscape argument validation") {
  const Instance inst = e1();
  CHECK_THROWS_AS(sample_landscape(inst, 0, TabuParams{}, std::nullopt, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_landscape(inst, 3, TabuParams{}, sol("101", "11"), 1),
                  std::invalid_argument);
}

TEST_CASE("landscape sampling is deterministic") {
  const Instance inst = generate_random_instance(9, 9, -15, 15, 88);
  const Landscape a = sample_landscape(inst, 12, TabuParams{}, std::nullopt, 6);
  const Landscape b = sample_landscape(inst, 12, TabuParams{}, std::nullopt, 6);
  CHECK(a.reference == b.reference);
  CHECK(a.reference_value == b.reference_value);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t k = 0; k < a.samples.size(); ++k) {
    CHECK(a.samples[k].distance == b.samples[k].distance);
    CHECK(a.samples[k].gap == b.samples[k].gap);
    CHECK(a.samples[k].value == b.samples[k].value);
  }
}

TEST_CASE("landscape CSV is sorted and round-trips") {
  std::vector<LandscapeSample> samples{{3, 5, 0}, {1, 9, 0}, {1, 2, 0}};
  std::ostringstream out;
  write_landscape_csv(samples, out);
  CHECK(out.str() == "distance,gap\n1,2\n1,9\n3,5\n");

  const auto rows = testutil::read_landscape_csv(out.str());
  REQUIRE(rows.size() == 3);
  CHECK((rows[0] == std::pair<int, Value>{1, 2}));
  CHECK((rows[1] == std::pair<int, Value>{1, 9}));
  CHECK((rows[2] == std::pair<int, Value>{3, 5}));

  std::ostringstream empty;
  write_landscape_csv({}, empty);
  CHECK(empty.str() == "distance,gap\n");
}

TEST_CASE("sampled landscape CSV matches the samples") {
  const Instance inst = generate_random_instance(10, 8, -25, 25, 14);
  const Landscape land = sample_landscape(inst, 30, TabuParams{}, std::nullopt, 2);
  std::ostringstream out;
  write_landscape_csv(land.samples, out);
  const auto rows = testutil::read_landscape_csv(out.str());
  REQUIRE(rows.size() == land.samples.size());

  std::vector<std::pair<int, Value>> expect;
  for (const auto& s : land.samples) expect.emplace_back(s.distance, s.gap);
  std::sort(expect.begin(), expect.end());
  CHECK(rows == expect);
  CHECK(std::is_sorted(rows.begin(), rows.end()));
}
