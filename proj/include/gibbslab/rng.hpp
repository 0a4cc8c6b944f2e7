// Counter-based deterministic random source. Every draw is a pure function of
// (seed, stream, counter), so parallel workers can split streams and reruns
// are byte-identical across platforms.
#pragma once

#include <cstdint>

namespace gibbslab {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(splitmix64(seed ^ (stream * 0x9e3779b97f4a7c15ULL + 1))) {}

  std::uint64_t next() {
    counter_ += 1;
    return splitmix64(state_ + counter_ * 0xd1342543de82ef95ULL);
  }

  bool next_bit() { return next() >> 63; }

  // Uniform in [0, bound) via multiply-shift; bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  double next_unit() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
  std::uint64_t counter_ = 0;
};

}  // namespace gibbslab
