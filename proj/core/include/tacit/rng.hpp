#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace tacit {

// Deterministic RNG used everywhere randomness is needed. std::mt19937_64 has
// a fully specified output sequence; the bounded draw below avoids
// std::uniform_int_distribution, whose mapping is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t bounded(std::uint64_t n) {
    // multiply-shift mapping; bias is < 2^-64 * n, irrelevant at our scales
    unsigned __int128 wide = static_cast<unsigned __int128>(next_u64());
    return static_cast<std::uint64_t>((wide * n) >> 64);
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(bounded(n)); }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

namespace detail {
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace detail

/// Stable hash chain for deriving independent child seeds from a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = detail::splitmix64(master);
  for (std::uint64_t v : path) h = detail::splitmix64(h ^ detail::splitmix64(v));
  return h;
}

}  // namespace tacit
