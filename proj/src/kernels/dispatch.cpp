#include <atomic>
#include <cstdlib>
#include <string>

#include "circiso/error.hpp"
#include "circiso/kernels.hpp"

namespace circiso::kernels {

namespace {

bool cpu_has_avx2() {
#if CIRCISO_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend detect() {
  if (const char* env = std::getenv("CIRCISO_KERNELS")) {
    const std::string want(env);
    if (want == "scalar") return Backend::Scalar;
    if (want == "avx2" && cpu_has_avx2()) return Backend::Avx2;
  }
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

// -1: not yet resolved.
std::atomic<int> g_backend{-1};

Backend current() {
  int b = g_backend.load(std::memory_order_relaxed);
  if (b < 0) {
    b = static_cast<int>(detect());
    g_backend.store(b, std::memory_order_relaxed);
  }
  return static_cast<Backend>(b);
}

}  // namespace

std::string_view to_string(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool backend_available(Backend b) { return b == Backend::Scalar || cpu_has_avx2(); }

Backend active_backend() { return current(); }

void force_backend(Backend b) {
  if (!backend_available(b))
    throw Error(ErrorCode::InvalidParams, "kernel backend " + std::string(to_string(b)) + " unavailable");
  g_backend.store(static_cast<int>(b), std::memory_order_relaxed);
}

void reset_backend() { g_backend.store(-1, std::memory_order_relaxed); }

void or_accumulate(std::span<std::uint64_t> acc, std::span<const std::uint64_t> row) {
#if CIRCISO_HAVE_AVX2_KERNELS
  if (current() == Backend::Avx2) return avx2::or_accumulate(acc, row);
#endif
  scalar::or_accumulate(acc, row);
}

std::uint64_t uniform_groups(std::span<const std::uint64_t> words, std::size_t lanes) {
#if CIRCISO_HAVE_AVX2_KERNELS
  if (current() == Backend::Avx2) return avx2::uniform_groups(words, lanes);
#endif
  return scalar::uniform_groups(words, lanes);
}

void circulant_eigenvalues(std::span<const int> jumps, std::span<const double> weights,
                           std::span<const double> cos_table, std::span<double> out) {
#if CIRCISO_HAVE_AVX2_KERNELS
  if (current() == Backend::Avx2) return avx2::circulant_eigenvalues(jumps, weights, cos_table, out);
#endif
  scalar::circulant_eigenvalues(jumps, weights, cos_table, out);
}

}  // namespace circiso::kernels
