#ifndef GROUPENT_RNG_HPP
#define GROUPENT_RNG_HPP

#include <cstdint>

namespace groupent {

// SplitMix64 (Steele/Lea/Flood mixing generator). Chosen over the platform
// default engines because the output stream is fixed by the algorithm, so a
// seed pins the byte-exact series on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace groupent

#endif
