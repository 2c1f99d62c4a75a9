#pragma once

#include <cstdint>
#include <random>

#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <boost/random/uniform_real_distribution.hpp>

namespace vbe {

using Rng = std::mt19937_64;

// Stream identifiers for derive_seed. Each component of a run draws from its
// own engine so that, e.g., extra replay sampling never shifts env noise.
enum class Stream : std::uint64_t {
  env = 1,
  agent_init = 2,
  replay = 3,
  policy = 4,
  ensemble = 5,
  head = 6,
  verify = 7,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based seed split: (master, run, component) -> independent seed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t run,
                                    std::uint64_t component) {
  return splitmix64(splitmix64(splitmix64(master) ^ run) ^ component);
}

inline Rng make_rng(std::uint64_t master, std::uint64_t run, Stream s) {
  return Rng(derive_seed(master, run, static_cast<std::uint64_t>(s)));
}

// Boost distributions are used throughout: their output is specified by the
// algorithm, not by the standard library vendor.
inline double normal(Rng& rng, double mean = 0.0, double stddev = 1.0) {
  return boost::random::normal_distribution<double>(mean, stddev)(rng);
}

inline double uniform(Rng& rng, double lo, double hi) {
  return boost::random::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi_inclusive) {
  return boost::random::uniform_int_distribution<int>(lo, hi_inclusive)(rng);
}

inline bool bernoulli(Rng& rng, double p) {
  return boost::random::uniform_01<double>()(rng) < p;
}

}  // namespace vbe
