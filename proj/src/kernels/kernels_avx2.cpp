// Built with -mavx2; only entered after the dispatcher has checked cpuid.
#include <immintrin.h>

#include "circiso/kernels.hpp"

namespace circiso::kernels::avx2 {

void or_accumulate(std::span<std::uint64_t> acc, std::span<const std::uint64_t> row) {
  const std::size_t n = acc.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto* dst = reinterpret_cast<__m256i*>(acc.data() + i);
    const auto* src = reinterpret_cast<const __m256i*>(row.data() + i);
    _mm256_storeu_si256(dst, _mm256_or_si256(_mm256_loadu_si256(dst), _mm256_loadu_si256(src)));
  }
  for (; i < n; ++i) acc[i] |= row[i];
}

std::uint64_t uniform_groups(std::span<const std::uint64_t> words, std::size_t lanes) {
  const std::size_t groups = words.size() / lanes;
  const auto* base = reinterpret_cast<const long long*>(words.data());
  const auto stride = static_cast<long long>(lanes);
  std::uint64_t result = 0;
  std::size_t g = 0;
  for (; g + 4 <= groups; g += 4) {
    const auto first = static_cast<long long>(g) * stride;
    const __m256i idx0 = _mm256_setr_epi64x(first, first + stride, first + 2 * stride, first + 3 * stride);
    const __m256i lead = _mm256_i64gather_epi64(base, idx0, 8);
    __m256i same = _mm256_set1_epi64x(-1);
    for (std::size_t l = 1; l < lanes; ++l) {
      const __m256i idx = _mm256_add_epi64(idx0, _mm256_set1_epi64x(static_cast<long long>(l)));
      same = _mm256_and_si256(same, _mm256_cmpeq_epi64(lead, _mm256_i64gather_epi64(base, idx, 8)));
    }
    const auto bits = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(same)));
    result |= static_cast<std::uint64_t>(bits) << g;
  }
  for (; g < groups; ++g) {
    const std::uint64_t* w = words.data() + g * lanes;
    bool eq = true;
    for (std::size_t l = 1; l < lanes && eq; ++l) eq = w[l] == w[0];
    if (eq) result |= std::uint64_t{1} << g;
  }
  return result;
}

void circulant_eigenvalues(std::span<const int> jumps, std::span<const double> weights,
                           std::span<const double> cos_table, std::span<double> out) {
  const int n = static_cast<int>(cos_table.size());
  const __m128i vn = _mm_set1_epi32(n);
  const __m128i vn_minus_1 = _mm_set1_epi32(n - 1);
  int k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d sum = _mm256_setzero_pd();
    for (std::size_t i = 0; i < jumps.size(); ++i) {
      const long long s = jumps[i] % n;
      const int lead = static_cast<int>((static_cast<long long>(k) * s) % n);
      const __m128i offs = _mm_setr_epi32(0, static_cast<int>(s), static_cast<int>((2 * s) % n),
                                          static_cast<int>((3 * s) % n));
      __m128i idx = _mm_add_epi32(_mm_set1_epi32(lead), offs);
      // idx < 2n; fold once.
      idx = _mm_sub_epi32(idx, _mm_and_si128(_mm_cmpgt_epi32(idx, vn_minus_1), vn));
      const __m256d c = _mm256_i32gather_pd(cos_table.data(), idx, 8);
      sum = _mm256_add_pd(sum, _mm256_mul_pd(_mm256_set1_pd(weights[i]), c));
    }
    _mm256_storeu_pd(out.data() + k, sum);
  }
  for (; k < n; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < jumps.size(); ++i) {
      const int idx = static_cast<int>((static_cast<long long>(k) * jumps[i]) % n);
      sum += weights[i] * cos_table[static_cast<std::size_t>(idx)];
    }
    out[static_cast<std::size_t>(k)] = sum;
  }
}

}  // namespace circiso::kernels::avx2
