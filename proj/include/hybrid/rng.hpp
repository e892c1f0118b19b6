#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace hybrid {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// Philox4x32 with 10 rounds.
inline PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) {
  constexpr std::uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
  constexpr std::uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
  for (int r = 0; r < 10; ++r) {
    const std::uint64_t p0 = std::uint64_t(M0) * ctr[0];
    const std::uint64_t p1 = std::uint64_t(M1) * ctr[2];
    ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], std::uint32_t(p1), std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1],
           std::uint32_t(p0)};
    key[0] += W0;
    key[1] += W1;
  }
  return ctr;
}

/// Uniform random bit generator over a Philox stream.
/// The key is the 64-bit seed; counter words 1..3 name the stream, word 0 runs.
class PhiloxEngine {
 public:
  using result_type = std::uint32_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  explicit PhiloxEngine(std::uint64_t seed, std::uint32_t s1 = 0, std::uint32_t s2 = 0, std::uint32_t s3 = 0)
      : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)}, ctr_{0, s1, s2, s3} {}

  result_type operator()() {
    if (pos_ == 4) {
      block_ = philox4x32_10(ctr_, key_);
      ++ctr_[0];
      pos_ = 0;
    }
    return block_[pos_++];
  }

 private:
  PhiloxKey key_;
  PhiloxCounter ctr_;
  PhiloxCounter block_{};
  int pos_ = 4;
};

}  // namespace hybrid
