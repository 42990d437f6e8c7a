#pragma once

#include <cstdint>

namespace synclab {

// splitmix64 step: advances the state by the golden-ratio increment and
// returns the finalized output. All randomness in the project flows through
// this generator so that results are bit-identical across platforms, which
// the standard-library distributions do not guarantee.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stateless seed derivation: the stream for (base, index) equals the
// (index+1)-th splitmix64 output of a generator seeded with `base`.
// Distinct indexes give distinct seeds (the finalizer is a bijection),
// so per-trial and per-cell work can run in any order or in parallel.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t state = base + index * 0x9e3779b97f4a7c15ULL;
  return splitmix64_next(state);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return splitmix64_next(state_); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace synclab
