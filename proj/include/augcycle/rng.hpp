#pragma once

#include <cstdint>

namespace augcycle {

// 64-bit linear congruential generator (MMIX multiplier). Random instances must
// replay bit-for-bit from a logged seed on any platform, which the standard
// engines only guarantee at fixed, narrower widths.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  bool coin() { return next() >> 63; }

 private:
  std::uint64_t state_;
};

}  // namespace augcycle
