#pragma once

#include <cmath>
#include <cstdint>

namespace irpdf {

/// splitmix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Small deterministic random stream (splitmix64 sequence).
///
/// All sampling in the library goes through this type so that results are a
/// pure function of the stream's initial state, independent of platform
/// library details and of how work is split across threads.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  std::uint64_t next_u64() noexcept {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal variate (Marsaglia polar method, spare value cached).
  double next_gaussian() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * next_double() - 1.0;
      v = 2.0 * next_double() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double r = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * r;
    has_spare_ = true;
    return u * r;
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Stream for one sample index. Fixed mixing function of (seed, index):
/// two finalizer rounds decouple nearby seeds and nearby indices, so stream i
/// of seed s never overlaps stream j for the sample counts used here.
/// Worker threads draw nothing from a shared generator; sample i is always
/// produced from sample_stream(seed, i), whatever the worker count.
inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index) noexcept {
  return SplitMix64(mix64(seed + 0x9E3779B97F4A7C15ull * (index + 1)));
}

}  // namespace irpdf
