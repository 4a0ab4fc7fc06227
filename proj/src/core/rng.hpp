// Deterministic random streams for Monte-Carlo work.
//
// Every simulated frame draws from its own stream, derived as
//   seed_frame = mix(mix(base_seed, run_key), frame_index)
// with splitmix64 as the mixer. Streams therefore depend only on
// (base_seed, run, frame) and never on worker count or scheduling.
// Gaussians use an explicit polar Box-Muller so the byte stream is
// fixed by this file, not by the standard library's distributions.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "core/types.hpp"

namespace nafdm {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t derive_stream(uint64_t base, uint64_t a, uint64_t b) {
  return splitmix64(splitmix64(base ^ 0x6e6146444d5f5253ULL) ^ splitmix64(a) ^ (b * 0x9e3779b97f4a7c15ULL));
}

// FNV-1a, used to turn run identifiers into stream keys.
inline uint64_t hash_name(std::string_view name) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t bits64() { return gen_(); }

  // Uniform in [0,1), 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Circularly symmetric complex Gaussian with E|z|^2 = variance.
  Complex gaussian(double variance) {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    const double radius = std::sqrt(-variance * std::log(u));
    return radius * cis_turns(uniform());
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace nafdm
