#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace inswap {

// Counter-based random stream: variate k of stream (seed, stream_id) is a pure
// function of (seed, stream_id, k). Streams never overlap and can be replayed
// from any point, which is what makes parallel replicates reproducible.
//
// The generator is the SplitMix64 output function applied to a keyed counter;
// one 64-bit output per uniform, two per normal (Box-Muller, no caching).
class RngStream {
public:
  RngStream() : RngStream(0, 0) {}
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : key_(mix(mix(seed + 0x9E3779B97F4A7C15ull) ^ mix(stream_id + 0xBF58476D1CE4E5B9ull))),
        counter_(0) {}

  std::uint64_t seed_key() const { return key_; }
  std::uint64_t draws() const { return counter_; }

  std::uint64_t next_u64() {
    std::uint64_t x = key_ + counter_ * 0x9E3779B97F4A7C15ull;
    ++counter_;
    return mix(x);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; consumes exactly two uniforms.
  double normal() {
    double u1 = uniform();
    const double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;  // guard log(0)
    const double r = std::sqrt(-2.0 * std::log(u1));
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  bool bernoulli(double p) { return uniform() < p; }

private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t counter_;
};

// Stable stream ids for (replica, purpose) pairs under one run seed.
enum class StreamPurpose : std::uint64_t { Chain = 1, Init = 2, Handoff = 3 };

inline RngStream make_stream(std::uint64_t seed, std::uint64_t replica, StreamPurpose purpose) {
  return RngStream(seed, (replica << 8) | static_cast<std::uint64_t>(purpose));
}

}  // namespace inswap
