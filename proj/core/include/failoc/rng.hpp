#pragma once

#include <cstdint>
#include <vector>

namespace failoc {

/// Deterministic 64-bit generator (splitmix64). Standard-library
/// distributions are not byte-stable across platforms, so every random
/// choice in the library goes through this class instead.
class rng {
 public:
  explicit rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, n). Rejection sampling keeps it unbiased.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
  }

  /// Uniformly chosen element of a non-empty vector.
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(below(v.size()))];
  }

  /// Independent child stream; deterministic in (current state, salt).
  rng fork(std::uint64_t salt) const {
    rng child(state_ ^ (0x9e3779b97f4a7c15ull * (salt + 1)));
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace failoc
