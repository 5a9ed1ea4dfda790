#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace acd {

// splitmix64 finalizer, used to turn (seed, stream) pairs into well-mixed
// generator seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seedable random stream. Monte Carlo replicates get independent streams via
// Rng(seed, replicate); a stream is never shared between workers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : gen_(mix64(mix64(seed + 0x632be59bd9b4e019ULL) ^ mix64(stream))) {}

  double normal() { return normal_(gen_); }
  double uniform01() { return uniform_(gen_); }
  double chi_squared(double df) {
    std::chi_squared_distribution<double> d(df);
    return d(gen_);
  }
  std::uint64_t next() { return gen_(); }

  // uniform integer in [0, n)
  std::size_t below(std::size_t n) {
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    return d(gen_);
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) std::swap(idx[i - 1], idx[below(i)]);
    return idx;
  }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace acd
