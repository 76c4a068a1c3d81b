#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "looplab/rational.hpp"

namespace looplab {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Independent generator for (seed, label).  Labels name logical streams
// ("schedule-0/chunk-3"), so results never depend on scheduling order.
inline std::mt19937_64 derive_stream(std::uint64_t seed, const std::string& label) {
  std::uint64_t state = seed ^ fnv1a64(label);
  std::uint64_t a = splitmix64(state);
  std::uint64_t b = splitmix64(state);
  std::uint64_t c = splitmix64(state);
  std::uint64_t d = splitmix64(state);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
                    static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32),
                    static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(d >> 32)};
  return std::mt19937_64(seq);
}

// Bernoulli draw with success weight p given as an exact rational: one
// uniform 64-bit word compared against floor(p * 2^64).  The bias from the
// floor is below 2^-64; p = 0 and p = 1 are exact.
class BernoulliRational {
 public:
  explicit BernoulliRational(const Rational& p) {
    if (p <= 0) {
      threshold_ = 0;
    } else if (p >= 1) {
      always_ = true;
    } else {
      Int scaled = (num(p) << 64) / den(p);
      threshold_ = scaled.convert_to<std::uint64_t>();
    }
  }

  bool operator()(std::mt19937_64& rng) const { return always_ || rng() < threshold_; }

 private:
  std::uint64_t threshold_ = 0;
  bool always_ = false;
};

}  // namespace looplab
