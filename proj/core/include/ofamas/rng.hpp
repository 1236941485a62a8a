#pragma once

#include <cstdint>
#include <vector>

namespace ofamas::numeric {

// SplitMix64 counter-based generator. The state advances by a fixed odd
// increment and every output is a bijective mix of the state, so a stream is
// fully determined by its seed and position. All randomness in the library
// goes through an explicitly seeded Rng; there is no global generator.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // Uniform in [0, bound). Lemire multiply-shift; bias is < bound / 2^64.
  int next_int(int bound) {
    const auto r = static_cast<unsigned __int128>(next_u64());
    return static_cast<int>((r * static_cast<std::uint64_t>(bound)) >> 64);
  }

  bool bernoulli(double p) { return next_double() < p; }

  // Independent stream derived from (current state, stream id).
  Rng fork(std::uint64_t stream) const {
    return Rng(mix(state_ + (stream + 1) * 0x9E3779B97F4A7C15ULL));
  }

private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

// Fisher-Yates shuffle driven by an explicit Rng.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) {
    const int j = rng.next_int(i + 1);
    std::swap(items[static_cast<std::size_t>(i)],
              items[static_cast<std::size_t>(j)]);
  }
}

} // namespace ofamas::numeric
