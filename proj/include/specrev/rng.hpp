#pragma once

#include <cstdint>

namespace specrev {

/// Counter-based generator keyed by (seed, trial, stream). Draw i is a hash of
/// (key, i), so separately keyed streams never interact and results do not
/// depend on the order in which trials run.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream)
      : key_(mix(mix(mix(seed + kPhi) ^ (trial * 0xd1342543de82ef95ULL)) ^
                 (stream * 0xaf251af3b0f025b5ULL))) {}

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * kPhi); }

  /// Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, n); n must be >= 1.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

 private:
  static constexpr std::uint64_t kPhi = 0x9e3779b97f4a7c15ULL;

  // splitmix64 finalizer
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace specrev
