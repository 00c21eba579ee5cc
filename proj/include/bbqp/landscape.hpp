#ifndef BBQP_LANDSCAPE_HPP
#define BBQP_LANDSCAPE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "bbqp/instance.hpp"
#include "bbqp/tabu.hpp"

namespace bbqp {

/// One tabu local optimum positioned against the reference solution.
struct LandscapeSample {
  int distance = 0;  // hamming distance to the reference
  Value gap = 0;     // reference value - sample value
  Value value = 0;   // the sample's own objective
};

struct Landscape {
  std::vector<LandscapeSample> samples;  // in sample order
  Solution reference;
  Value reference_value = 0;
};

// Runs tabu search from n_samples independent random starts (seed derivation
// as in multi_start) and measures every local optimum against the reference:
// the supplied solution if any, otherwise the best sample (lowest sample
// index on ties). Gaps are >= 0 whenever the reference is at least as good
// as every sample, in particular under the default reference.
Landscape sample_landscape(const Instance& inst, int n_samples,
                           const TabuParams& tabu,
                           const std::optional<Solution>& reference,
                           std::uint64_t seed);

// Header "distance,gap", then one row per sample sorted ascending by
// distance, then by gap.
void write_landscape_csv(const std::vector<LandscapeSample>& samples,
                         std::ostream& out);

}  // namespace bbqp

#endif
