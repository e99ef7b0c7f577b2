#include <doctest.h>

#include "circiso/error.hpp"
#include "circiso/multipliers.hpp"
#include "circiso/theta.hpp"
#include "support.hpp"

using namespace circiso;

namespace {

ConnectionSet C54(std::initializer_list<long long> j) { return reflexive_reduce(j, 54); }

const int kOrders[] = {8, 16, 24, 27, 32, 40, 48, 54, 64, 72, 81, 96, 108, 125, 128};

struct Input {
  ConnectionSet cs;
  int m;
  int t;
};

// A set with at least one multiple of a valid m, and a random t in range.
Input random_valid_input() {
  const int n = kOrders[testing::uniform(0, static_cast<int>(std::size(kOrders)) - 1)];
  const auto moduli = cube_divisor_moduli(n);
  const int m = moduli[static_cast<std::size_t>(testing::uniform(0, static_cast<int>(moduli.size()) - 1))];
  const int mult[] = {m * testing::uniform(1, n / 2 / m)};
  auto cs = testing::random_set(n, 0.25).with(mult);
  return {cs, m, testing::uniform(0, n / m - 1)};
}

std::vector<int> multiples_in(const ConnectionSet& cs, int m) {
  std::vector<int> out;
  for (int j : cs.jumps())
    if (j % m == 0) out.push_back(j);
  return out;
}

}  // namespace

TEST_CASE("worked order-54 examples") {
  CHECK(theta_image(C54({1, 3, 17, 19}), 3, 2) == C54({3, 7, 11, 25}));
  CHECK(theta_image(C54({1, 3, 17, 19}), 3, 4) == C54({3, 5, 13, 23}));
  CHECK(theta_image(C54({2, 3, 16, 20}), 3, 2) == C54({3, 4, 14, 22}));
  CHECK(theta_image(C54({2, 3, 16, 20}), 3, 4) == C54({3, 8, 10, 26}));
  CHECK(theta_image(C54({1, 3, 17, 19}), 3, 0) == C54({1, 3, 17, 19}));
}

TEST_CASE("parameter validation") {
  CHECK(cube_divisor_moduli(54) == std::vector<int>{3});
  CHECK(cube_divisor_moduli(64) == std::vector<int>{2, 4});
  CHECK(cube_divisor_moduli(16) == std::vector<int>{2});
  CHECK(cube_divisor_moduli(30).empty());
  CHECK_THROWS_AS(ThetaParams(54, 2, 1), Error);
  CHECK_THROWS_AS(ThetaParams(54, 3, 18), Error);
  CHECK_THROWS_AS(ThetaParams(54, 3, -1), Error);
  CHECK_NOTHROW(ThetaParams(54, 3, 17));
  CHECK_THROWS_AS(theta_image(C54({1, 17, 19}), 3, 2), Error);  // no multiple of 3
  CHECK_FALSE(theta_params_valid(54, 3, C54({1, 2})));
  CHECK(theta_params_valid(54, 3, C54({1, 9})));
}

TEST_CASE("vertex map is a bijection and composes additively") {
  for (int n : kOrders)
    for (int m : cube_divisor_moduli(n))
      for (int s = 0; s < n / m; s += 3)
        for (int t = 0; t < n / m; t += 5) {
          auto a = theta_vertex_map(ThetaParams(n, m, s));
          auto b = theta_vertex_map(ThetaParams(n, m, t));
          auto c = theta_vertex_map(ThetaParams(n, m, (s + t) % (n / m)));
          CHECK(is_permutation_of_order(a, n));
          bool ok = true;
          for (int x = 0; x < n; ++x) ok = ok && a[static_cast<std::size_t>(b[static_cast<std::size_t>(x)])] == c[static_cast<std::size_t>(x)];
          CHECK(ok);
        }
}

TEST_CASE("identity at t = 0 on 1000 random valid inputs") {
  for (int i = 0; i < 1000; ++i) {
    auto in = random_valid_input();
    CHECK(theta_image(in.cs, in.m, 0) == in.cs);
  }
}

TEST_CASE("edge route and residue-class route agree") {
  for (int i = 0; i < 600; ++i) {
    auto in = random_valid_input();
    CHECK(theta_image(in.cs, in.m, in.t) == theta_image_by_classes(in.cs, in.m, in.t));
  }
  // also on every t for the family bases
  for (const auto& cs : {C54({1, 3, 17, 19}), C54({2, 9, 16, 20, 27}), C54({1, 2, 3, 4, 5, 6})})
    for (int t = 0; t < 18; ++t) CHECK(theta_image(cs, 3, t) == theta_image_by_classes(cs, 3, t));
}

TEST_CASE("multiples of m are fixed and witnesses re-verify") {
  for (int i = 0; i < 300; ++i) {
    auto in = random_valid_input();
    for (const auto& [t, image] : theta_scan(in.cs, in.m)) {
      CHECK(multiples_in(image, in.m) == multiples_in(in.cs, in.m));
      CHECK(image.size() == in.cs.size());
      auto w = theta_witness(in.cs, in.m, t);
      REQUIRE(w.has_value());
      CHECK(w->image == image);
      CHECK(verify_theta_witness(*w));
    }
  }
}

TEST_CASE("tampered witness fails verification") {
  auto w = theta_witness(C54({1, 3, 17, 19}), 3, 2);
  REQUIRE(w.has_value());
  auto bad = *w;
  bad.image = C54({3, 7, 11, 23});
  CHECK_FALSE(verify_theta_witness(bad));
  bad = *w;
  std::swap(bad.vertex_map[0], bad.vertex_map[1]);
  CHECK_FALSE(verify_theta_witness(bad));
}

TEST_CASE("image of an image: theta_s after theta_t is theta_{s+t}") {
  for (int i = 0; i < 300; ++i) {
    auto in = random_valid_input();
    const int n = in.cs.order(), period = n / in.m;
    const int s = testing::uniform(0, period - 1);
    auto first = theta_image(in.cs, in.m, in.t);
    if (!first) continue;
    CHECK(theta_image(*first, in.m, s) == theta_image(in.cs, in.m, (s + in.t) % period));
  }
}

TEST_CASE("union property on 500 random inputs") {
  int checked = 0;
  while (checked < 500) {
    auto in = random_valid_input();
    const int n = in.cs.order();
    // strip the multiples, then add a random nonempty set E of them back
    const auto mult = multiples_in(in.cs, in.m);
    auto base = in.cs.without(mult);
    std::vector<int> extra;
    for (int e = in.m; e <= n / 2; e += in.m)
      if (testing::uniform(0, 2) == 0) extra.push_back(e);
    if (extra.empty()) extra.push_back(in.m);
    auto whole = base.with(extra);
    auto lhs = theta_image(whole, in.m, in.t);
    auto rhs = union_shift(base, extra, in.m, in.t);
    CHECK(lhs == rhs);
    if (base.empty()) continue;
    auto base_image = theta_image_by_classes(base, in.m, in.t);
    CHECK(lhs.has_value() == base_image.has_value());
    ++checked;
  }
}

TEST_CASE("union_shift rejects non-multiples") {
  const int extra[] = {4};
  try {
    union_shift(C54({1, 17, 19}), extra, 3, 2);
    FAIL("expected NotMultipleOfM");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMultipleOfM);
  }
}
