#pragma once

#include <cstdint>
#include <vector>

namespace shapevade::rng {

// splitmix64: used both as a generator and to derive independent stream seeds.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound); bound > 0. Modulo bias is irrelevant at 64 bits.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // uniform double in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // standard normal via Box-Muller (one value per call, the pair's twin dropped)
  double normal();
};

// Deterministic sub-seed for a (seed, index) pair, e.g. per-sample SHAP streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0xd1342543de82ef95ULL * (index + 1)));
  return g.next();
}

// In-place Fisher-Yates; identical output on every platform for a given seed.
void shuffle_indices(std::vector<std::size_t>& indices, std::uint64_t seed);

// k distinct indices from {0..n-1}, ascending order.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace shapevade::rng
