#pragma once

#include <cstdint>
#include <vector>

namespace chgraph {

// SplitMix64. Chosen over std::mt19937_64 because every draw, including the
// bounded ones below, is specified bit-for-bit here, so generated instances
// are identical across platforms and standard-library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw in [0, bound) via rejection sampling. bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0ULL - bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Stream splitting: instance k of a batch seeded with s draws from
  // derive(s, k). The two inputs pass through one mixing round each so
  // neighbouring k never yield correlated streams.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (0xA0761D6478BD642FULL + stream));
    g.next_u64();
    return g.next_u64();
  }

  // First k elements of a seeded Fisher-Yates shuffle of `pool`.
  // `pool` is consumed in place; result order is the draw order.
  template <typename T>
  std::vector<T> sample(std::vector<T> pool, std::size_t k) {
    std::vector<T> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k && !pool.empty(); ++i) {
      const std::size_t j = static_cast<std::size_t>(next_below(pool.size()));
      out.push_back(pool[j]);
      pool[j] = pool.back();
      pool.pop_back();
    }
    return out;
  }

 private:
  std::uint64_t state_;
};

}  // namespace chgraph
