#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace dnts {

// Deterministic PRNG with self-contained distributions. Standard-library
// distribution objects are implementation-defined, which would break
// seed-pinned fixtures across toolchains; everything here is fully specified
// by this file.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // splitmix64 step
  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n), n > 0
  std::uint64_t uniform_index(std::uint64_t n) {
    // multiply-shift; bias is negligible for n << 2^64 and the result is
    // identical on every platform
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Knuth's product method; fine for the small rates used here
  int poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    const double limit = std::exp(-lambda);
    double prod = 1.0;
    int k = 0;
    do {
      prod *= uniform();
      ++k;
    } while (prod > limit);
    return k - 1;
  }

  // number of Bernoulli(p) trials up to and including the first success (>= 1)
  int geometric_from_one(double p) {
    if (p >= 1.0) return 1;
    const double u = 1.0 - uniform();  // in (0, 1]
    return 1 + static_cast<int>(std::log(u) / std::log1p(-p));
  }

  // standard normal via Box-Muller
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  // standard logistic draw, log(u) - log(1-u)
  double logistic() {
    double u = uniform();
    while (u <= 0.0 || u >= 1.0) u = uniform();
    return std::log(u) - std::log1p(-u);
  }

 private:
  std::uint64_t state_;
};

// Derives an independent stream from (seed, tag, index); used to give each
// item / promoter / epoch its own reproducible RNG.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag,
                                 std::uint64_t index) {
  std::uint64_t h = 0xCBF29CE484222325ull ^ seed;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  h ^= index + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  Rng mix(h);
  return mix.next_u64();
}

}  // namespace dnts
