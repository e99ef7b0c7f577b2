#pragma once
// Data-parallel inner loops of the θ scan and the spectrum filter.
//
// Each kernel has a portable scalar reference in kernels::scalar and, on
// x86-64, an AVX2 variant in kernels::avx2. The unqualified entry points
// dispatch to the best backend the running CPU supports; tests compare the
// two paths word for word.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace circiso::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b);
bool backend_available(Backend b);
Backend active_backend();
/// Pins the dispatch target (tests, benchmarking). Throws when unavailable.
void force_backend(Backend b);
/// Returns to automatic selection (CIRCISO_KERNELS=scalar|avx2 still honoured).
void reset_backend();

/// acc[i] |= row[i]; both spans have the same length.
void or_accumulate(std::span<std::uint64_t> acc, std::span<const std::uint64_t> row);

/// words is a sequence of groups of `lanes` words. Bit g of the result is set
/// iff every word of group g equals the group's first word. At most 64 groups.
std::uint64_t uniform_groups(std::span<const std::uint64_t> words, std::size_t lanes);

/// out[k] = sum_i weights[i] * cos_table[(k * jumps[i]) mod n] for k in [0, n),
/// where n = cos_table.size() = out.size(). Jumps are accumulated in the order
/// given, so both backends produce bit-identical sums.
void circulant_eigenvalues(std::span<const int> jumps, std::span<const double> weights,
                           std::span<const double> cos_table, std::span<double> out);

namespace scalar {
void or_accumulate(std::span<std::uint64_t> acc, std::span<const std::uint64_t> row);
std::uint64_t uniform_groups(std::span<const std::uint64_t> words, std::size_t lanes);
void circulant_eigenvalues(std::span<const int> jumps, std::span<const double> weights,
                           std::span<const double> cos_table, std::span<double> out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define CIRCISO_HAVE_AVX2_KERNELS 1
namespace avx2 {
void or_accumulate(std::span<std::uint64_t> acc, std::span<const std::uint64_t> row);
std::uint64_t uniform_groups(std::span<const std::uint64_t> words, std::size_t lanes);
void circulant_eigenvalues(std::span<const int> jumps, std::span<const double> weights,
                           std::span<const double> cos_table, std::span<double> out);
}  // namespace avx2
#else
#define CIRCISO_HAVE_AVX2_KERNELS 0
#endif

}  // namespace circiso::kernels
