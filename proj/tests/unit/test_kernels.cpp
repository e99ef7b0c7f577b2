#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "circiso/kernels.hpp"
#include "support.hpp"

using namespace circiso;
namespace k = circiso::kernels;

namespace {

std::vector<std::uint64_t> random_words(std::size_t len) {
  std::vector<std::uint64_t> w(len);
  for (auto& x : w) x = testing::rng()();
  return w;
}

// Words in groups of `lanes`; roughly half the groups are made uniform.
std::vector<std::uint64_t> planted_groups(std::size_t groups, std::size_t lanes) {
  auto w = random_words(groups * lanes);
  for (std::size_t g = 0; g < groups; ++g) {
    if (testing::uniform(0, 1) == 0) continue;
    for (std::size_t l = 1; l < lanes; ++l) w[g * lanes + l] = w[g * lanes];
    // near miss: one flipped bit in one lane
    if (lanes > 1 && testing::uniform(0, 3) == 0) w[g * lanes + lanes - 1] ^= std::uint64_t{1} << testing::uniform(0, 63);
  }
  return w;
}

bool avx2() { return k::backend_available(k::Backend::Avx2); }

}  // namespace

TEST_CASE("scalar or_accumulate reference") {
  std::vector<std::uint64_t> acc{1, 2, 0};
  const std::vector<std::uint64_t> row{4, 2, 8};
  k::scalar::or_accumulate(acc, row);
  CHECK(acc == std::vector<std::uint64_t>{5, 2, 8});
}

TEST_CASE("scalar uniform_groups reference") {
  const std::vector<std::uint64_t> w{7, 7, 7, 1, 2, 1, 9, 9, 9};
  CHECK(k::scalar::uniform_groups(w, 3) == 0b101);
  CHECK(k::scalar::uniform_groups(w, 1) == 0b111111111);
}

TEST_CASE("scalar eigenvalues of the cycle") {
  const int n = 12;
  std::vector<double> cos_table(n), out(n);
  for (int i = 0; i < n; ++i) cos_table[static_cast<std::size_t>(i)] = std::cos(2 * std::numbers::pi * i / n);
  const int jumps[] = {1};
  const double weights[] = {2.0};
  k::scalar::circulant_eigenvalues(jumps, weights, cos_table, out);
  for (int i = 0; i < n; ++i) CHECK(out[static_cast<std::size_t>(i)] == doctest::Approx(2 * std::cos(2 * std::numbers::pi * i / n)));
}

#if CIRCISO_HAVE_AVX2_KERNELS
TEST_CASE("avx2 or_accumulate equals scalar") {
  if (!avx2()) return;
  for (std::size_t len = 0; len < 70; ++len) {
    auto a = random_words(len);
    auto b = a;
    const auto row = random_words(len);
    k::scalar::or_accumulate(a, row);
    k::avx2::or_accumulate(b, row);
    CHECK(a == b);
  }
}

TEST_CASE("avx2 uniform_groups equals scalar") {
  if (!avx2()) return;
  for (int round = 0; round < 400; ++round) {
    const auto lanes = static_cast<std::size_t>(testing::uniform(1, 6));
    const auto groups = static_cast<std::size_t>(testing::uniform(0, 64));
    const auto w = planted_groups(groups, lanes);
    CHECK(k::scalar::uniform_groups(w, lanes) == k::avx2::uniform_groups(w, lanes));
  }
}

TEST_CASE("avx2 eigenvalues are bit-identical to scalar") {
  if (!avx2()) return;
  for (int round = 0; round < 200; ++round) {
    const int n = testing::uniform(2, 130);
    std::vector<double> cos_table(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cos_table[static_cast<std::size_t>(i)] = std::cos(2 * std::numbers::pi * i / n);
    auto cs = testing::random_set(n);
    std::vector<double> weights;
    for (int j : cs.jumps()) weights.push_back(2 * j == n ? 1.0 : 2.0);
    std::vector<double> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    k::scalar::circulant_eigenvalues(cs.jumps(), weights, cos_table, a);
    k::avx2::circulant_eigenvalues(cs.jumps(), weights, cos_table, b);
    CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
  }
}
#endif

TEST_CASE("dispatch can be pinned and reset") {
  k::force_backend(k::Backend::Scalar);
  CHECK(k::active_backend() == k::Backend::Scalar);
  const std::vector<std::uint64_t> w{3, 3};
  CHECK(k::uniform_groups(w, 2) == 1);
  if (avx2()) {
    k::force_backend(k::Backend::Avx2);
    CHECK(k::active_backend() == k::Backend::Avx2);
    CHECK(k::uniform_groups(w, 2) == 1);
  } else {
    CHECK_THROWS(k::force_backend(k::Backend::Avx2));
  }
  k::reset_backend();
  CHECK(k::to_string(k::active_backend()).size() > 0);
}
