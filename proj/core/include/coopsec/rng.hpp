#pragma once

#include <cstdint>

namespace coopsec {

/// Identifies one reproducible random stream. Equal (master_seed, stream_id)
/// pairs always produce the same draw sequence, independent of how trials are
/// scheduled across threads.
struct SeedStream {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
};

/// SplitMix64 finalizer; conditions seeds before they enter generator state.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// PCG32 (O'Neill, pcg-random.org). One instance per stream: the stream id
/// selects the LCG increment, so substreams can be indexed by trial number
/// with no coordination between threads.
class Pcg32 {
 public:
  explicit Pcg32(SeedStream s) {
    inc_ = (mix64(s.stream_id) << 1u) | 1u;
    state_ = 0u;
    next_u32();
    state_ += mix64(s.master_seed ^ mix64(s.stream_id));
    next_u32();
  }

  std::uint32_t next_u32() {
    const std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    const auto xorshifted =
        static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  /// Uniform double in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_ = 0;
  std::uint64_t inc_ = 1;
};

}  // namespace coopsec
