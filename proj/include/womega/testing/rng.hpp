#pragma once

// Seeded randomness for the generators. Bounded draws use rejection on the
// raw engine output, so sequences are identical across standard libraries.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace womega::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  std::uint64_t next() { return g_(); }

  // Uniform on [lo, hi].
  int uniform(int lo, int hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do x = g_();
    while (x >= limit);
    return lo + static_cast<int>(x % range);
  }

  // True with probability num/den.
  bool chance(int num, int den) { return uniform(0, den - 1) < num; }
  bool coin() { return chance(1, 2); }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(uniform(0, static_cast<int>(xs.size()) - 1))];
  }

  template <class T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[static_cast<std::size_t>(uniform(0, static_cast<int>(i) - 1))]);
  }

  // An independent stream, for suites that must not perturb each other.
  Rng split(std::uint64_t salt) { return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

 private:
  std::mt19937_64 g_;
};

}  // namespace womega::testing
