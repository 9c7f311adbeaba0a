#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ordhull {

// Deterministic RNG wrapper. Bounded draws use plain modulo on the raw
// mt19937_64 stream: the tiny bias is irrelevant here and, unlike the
// standard distributions, the result is pinned by the standard, so seeded
// streams replay identically everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(static_cast<int>(v.size()))];
  }

 private:
  std::mt19937_64 gen_;
};

// FNV-1a, used for instance digests and report fingerprints.
inline std::uint64_t fnv1a64(const void* data, std::size_t len) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace ordhull
