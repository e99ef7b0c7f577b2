#include <doctest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "circiso/enumerate.hpp"
#include "circiso/error.hpp"
#include "circiso/theta.hpp"
#include "support.hpp"

using namespace circiso;

namespace {

ConnectionSet C54(std::initializer_list<long long> j) { return reflexive_reduce(j, 54); }

// Direct scan: every set, every valid (m, t), edge-level images.
std::set<std::pair<ConnectionSet, ConnectionSet>> brute_pairs(int n) {
  std::set<std::pair<ConnectionSet, ConnectionSet>> out;
  const int half = n / 2;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << half); ++mask) {
    auto r = ConnectionSet::from_mask(n, mask << 1);
    if (r.size() < 3) continue;
    for (int m : cube_divisor_moduli(n)) {
      if (!theta_params_valid(n, m, r)) continue;
      for (auto& [t, s] : theta_scan(r, m)) {
        if (s == r || is_adam_equivalent(r, s)) continue;
        out.insert(std::minmax(r, s));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("subset ordering: by size, then lexicographic") {
  auto subs = ordered_subsets({3, 6, 9, 12, 15, 18, 21, 24, 27});
  REQUIRE(subs.size() == 511);
  CHECK(subs[0] == std::vector<int>{3});
  CHECK(subs[8] == std::vector<int>{27});
  CHECK(subs[9] == std::vector<int>{3, 6});
  CHECK(subs[10] == std::vector<int>{3, 9});
  CHECK(subs.back().size() == 9);
}

TEST_CASE("family rows") {
  auto a = enumerate_family(family_a(), 2);
  REQUIRE(a.size() == 511);
  CHECK(a[0].members == std::vector<ConnectionSet>{C54({1, 3, 17, 19}), C54({3, 7, 11, 25}), C54({3, 5, 13, 23})});
  CHECK(a[0].classification.kind() == "Type2");
  CHECK(a[2].classification.kind() == "Type1");
  auto b = enumerate_family(family_b(), 1);
  CHECK(b[0].members == std::vector<ConnectionSet>{C54({2, 3, 16, 20}), C54({3, 4, 14, 22}), C54({3, 8, 10, 26})});
  CHECK(b[0].classification.kind() == "Type2");
  CHECK_THROWS_AS(family('c'), Error);
}

TEST_CASE("family output does not depend on the worker count") {
  auto one = enumerate_family(family_b(), 1);
  auto three = enumerate_family(family_b(), 3);
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].members == three[i].members);
    CHECK(one[i].classification.summary() == three[i].classification.summary());
  }
}

TEST_CASE("union property over every family row") {
  for (const auto& spec : {family_a(), family_b()}) {
    auto base2 = theta_image_by_classes(spec.base, 3, 2);
    auto base4 = theta_image_by_classes(spec.base, 3, 4);
    REQUIRE(base2.has_value());
    REQUIRE(base4.has_value());
    auto rows = enumerate_family(spec, 1);
    auto subsets = ordered_subsets(spec.pool);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].theta_images.at(2) == base2->with(subsets[i]));
      CHECK(rows[i].theta_images.at(4) == base4->with(subsets[i]));
    }
  }
}

TEST_CASE("scan agrees with a direct scan") {
  for (int n : {8, 16, 24, 27}) {
    auto report = full_scan(n);
    std::set<std::pair<ConnectionSet, ConnectionSet>> got;
    for (const auto& p : report.pairs) got.insert({p.r, p.s});
    CHECK(got == brute_pairs(n));
    CHECK(report.counts.at("pairs_raw") == got.size());
  }
}

TEST_CASE("scan counts") {
  CHECK(full_scan(8).counts.at("pairs_raw") == 0);
  CHECK(full_scan(16).counts.at("pairs_raw") == 8);
  auto r27 = full_scan(27);
  CHECK(r27.counts.at("triples_raw") == 24);
  CHECK(r27.counts.at("triples_mod_adam") == 8);
  CHECK(r27.counts.at("triples_mod_complement") == 12);
  CHECK(full_scan(10).counts.at("pairs_raw") == 0);  // no valid m
}

TEST_CASE("scan witnesses re-verify") {
  for (int n : {16, 24, 27, 32}) {
    for (const auto& p : full_scan(n).pairs) {
      const auto& src = p.reversed ? p.s : p.r;
      const auto& dst = p.reversed ? p.r : p.s;
      CHECK(theta_image(src, p.m, p.t) == dst);
      CHECK_FALSE(is_adam_equivalent(p.r, p.s).has_value());
    }
  }
}

TEST_CASE("scan is deterministic across worker counts") {
  ScanOptions one, many;
  one.workers = 1;
  many.workers = 4;
  auto a = full_scan(32, one);
  auto b = full_scan(32, many);
  CHECK(a.counts == b.counts);
  REQUIRE(a.pairs.size() == b.pairs.size());
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    CHECK(a.pairs[i].r == b.pairs[i].r);
    CHECK(a.pairs[i].t == b.pairs[i].t);
  }
}

TEST_CASE("scan limits") {
  CHECK_THROWS_AS(full_scan(56), Error);
  ScanOptions tight;
  tight.ceiling = 4;
  try {
    full_scan(16, tight);
    FAIL("expected Intractable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Intractable);
  }
  ScanOptions capped;
  capped.max_jump_count = 3;
  for (const auto& p : full_scan(24, capped).pairs) CHECK(p.r.size() <= 3);
}

TEST_CASE("a17c generator") {
  auto [r, s] = generate_a17c(2, 1);
  CHECK(r == reflexive_reduce({1, 2, 7}, 16));
  CHECK(s == reflexive_reduce({2, 3, 5}, 16));
  try {
    generate_a17c(3, 2);
    FAIL("expected DegeneratePair");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegeneratePair);
  }
  CHECK_NOTHROW(generate_a17c(3, 3));
  CHECK_THROWS_AS(generate_a17c(3, 4), Error);
  CHECK_THROWS_AS(generate_a17c(1, 1), Error);
}

TEST_CASE("c1 generator") {
  CHECK(generate_c1(2, 3, 1, 0, 1) == C54({1, 3, 17, 19}));
  CHECK(generate_c1(2, 3, 1, 0, 2) == C54({3, 7, 11, 25}));
  CHECK(generate_c1(2, 3, 1, 0, 3) == C54({3, 5, 13, 23}));
  CHECK(generate_c1(1, 3, 1, 0, 1) == reflexive_reduce({1, 3, 8, 10}, 27));
  try {
    generate_c1(2, 3, 1, 0, 4);
    FAIL("expected InvalidIndex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidIndex);
  }
  CHECK_THROWS_AS(generate_c1(2, 4, 1, 0, 1), Error);
  CHECK_THROWS_AS(generate_c1(2, 3, 3, 0, 1), Error);
  // index wraps: theta at t = base moves R_3 to R_1
  auto r3 = generate_c1(2, 3, 1, 0, 3);
  CHECK(theta_image(r3, 3, 2) == generate_c1(2, 3, 1, 0, 1));
}

TEST_CASE("worker count honours CIRCIO_WORKERS") {
  ::setenv("CIRCIO_WORKERS", "3", 1);
  CHECK(worker_count() == 3);
  ::setenv("CIRCIO_WORKERS", "zero", 1);
  CHECK(worker_count() >= 1);
  ::unsetenv("CIRCIO_WORKERS");
  CHECK(worker_count() >= 1);
}

TEST_CASE("parallel_for rethrows") {
  CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
                    if (i == 7) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
}
