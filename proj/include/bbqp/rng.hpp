#ifndef BBQP_RNG_HPP
#define BBQP_RNG_HPP

#include <cstdint>

namespace bbqp {

// splitmix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// k-th output of the splitmix64 sequence started at master. Restart k of a
// multi-start run seeds its own generator with this, so serial and parallel
// schedules visit identical start solutions.
inline std::uint64_t seed_stream(std::uint64_t master, std::uint64_t k) {
  return mix64(master + k * 0x9e3779b97f4a7c15ull);
}

}  // namespace bbqp

#endif
