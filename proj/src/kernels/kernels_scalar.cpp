#include "circiso/kernels.hpp"

namespace circiso::kernels::scalar {

void or_accumulate(std::span<std::uint64_t> acc, std::span<const std::uint64_t> row) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] |= row[i];
}

std::uint64_t uniform_groups(std::span<const std::uint64_t> words, std::size_t lanes) {
  const std::size_t groups = words.size() / lanes;
  std::uint64_t result = 0;
  for (std::size_t g = 0; g < groups; ++g) {
    const std::uint64_t* w = words.data() + g * lanes;
    bool same = true;
    for (std::size_t l = 1; l < lanes && same; ++l) same = w[l] == w[0];
    if (same) result |= std::uint64_t{1} << g;
  }
  return result;
}

void circulant_eigenvalues(std::span<const int> jumps, std::span<const double> weights,
                           std::span<const double> cos_table, std::span<double> out) {
  const int n = static_cast<int>(cos_table.size());
  for (int k = 0; k < n; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < jumps.size(); ++i) {
      const int idx = static_cast<int>((static_cast<long long>(k) * jumps[i]) % n);
      sum += weights[i] * cos_table[static_cast<std::size_t>(idx)];
    }
    out[static_cast<std::size_t>(k)] = sum;
  }
}

}  // namespace circiso::kernels::scalar
