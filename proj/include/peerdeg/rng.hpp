#ifndef PEERDEG_RNG_HPP
#define PEERDEG_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace peerdeg {

// Deterministic random source. mt19937_64 output is fully specified by the
// standard, and all transforms below are explicit, so a seed reproduces the
// same event sequence everywhere (std::*_distribution would not guarantee
// that across library implementations).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1), 53 usable bits.
  double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform index in [0, n). n must be positive and well below 2^53.
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(u01() * static_cast<double>(n));
  }

  /// Exponential waiting time for a process firing at `rate`.
  double exponential(double rate) { return -std::log1p(-u01()) / rate; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer; derives decorrelated sub-seeds from a base seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace peerdeg

#endif
