#ifndef JTCOMP_RANDOM_HPP
#define JTCOMP_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace jtcomp {

/// All sampling in the library draws from an explicitly passed stream;
/// callers that need reproducible parallelism give each work unit its own.
using RandomStream = std::mt19937_64;

/// Fixed splitting rule: one independent stream per (master seed, drop index).
inline RandomStream make_drop_stream(std::uint64_t master_seed,
                                     std::uint64_t drop_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(drop_index),
                    static_cast<std::uint32_t>(drop_index >> 32)};
  return RandomStream(seq);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(RandomStream& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Unit-mean exponential, strictly positive.
inline double exponential1(RandomStream& rng) {
  double u;
  do {
    u = uniform01(rng);
  } while (u == 0.0);
  return -std::log(u);
}

}  // namespace jtcomp

#endif  // JTCOMP_RANDOM_HPP
