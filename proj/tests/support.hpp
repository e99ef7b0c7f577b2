#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "circiso/connection_set.hpp"
#include "circiso/circulant.hpp"

namespace circiso::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed'c1c0ULL);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Nonempty random jump set over n, each jump kept with probability p.
inline ConnectionSet random_set(int n, double p = 0.3) {
  std::bernoulli_distribution keep(p);
  std::vector<int> jumps;
  for (int j = 1; j <= n / 2; ++j)
    if (keep(rng())) jumps.push_back(j);
  if (jumps.empty()) jumps.push_back(uniform(1, n / 2));
  return reflexive_reduce(std::span<const int>(jumps), n);
}

inline Permutation random_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng());
  return p;
}

}  // namespace circiso::testing
