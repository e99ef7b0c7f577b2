#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "circiso/error.hpp"
#include "circiso/iso_oracle.hpp"
#include "circiso/multipliers.hpp"
#include "circiso/theta.hpp"
#include "support.hpp"

using namespace circiso;

namespace {

ConnectionSet C54(std::initializer_list<long long> j) { return reflexive_reduce(j, 54); }

Graph random_graph(int n, double p) {
  Graph g(n);
  std::bernoulli_distribution keep(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (keep(testing::rng())) g.add_edge(u, v);
  return g;
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  Permutation p(static_cast<std::size_t>(a.order()));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : a.edges())
      if (!b.has_edge(p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(3, 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK_THROWS_AS(g.add_edge(2, 2), Error);
  CHECK_THROWS_AS(Graph(0), Error);
  Permutation p{4, 3, 2, 1, 0};
  auto h = g.relabeled(p);
  CHECK(h.has_edge(4, 3));
  CHECK(h.has_edge(1, 0));
  CHECK(g.is_automorphism(Permutation{1, 0, 2, 4, 3}));
  CHECK_FALSE(g.is_automorphism(Permutation{1, 2, 0, 3, 4}));
}

TEST_CASE("labeling maps the graph onto the canonical edge list") {
  auto g = Graph::from_circulant(CirculantGraph(C54({1, 3, 17, 19})));
  auto cf = canonical_form(g);
  std::vector<Edge> mapped;
  for (const Edge& e : g.edges())
    mapped.push_back(Edge::of(cf.labeling[static_cast<std::size_t>(e.u)], cf.labeling[static_cast<std::size_t>(e.v)]));
  std::sort(mapped.begin(), mapped.end());
  CHECK(mapped == cf.canonical_edges);
}

TEST_CASE("canonical form agrees with brute force on small random graphs") {
  for (int i = 0; i < 150; ++i) {
    const int n = testing::uniform(1, 7);
    auto a = random_graph(n, 0.5);
    auto b = testing::uniform(0, 1) ? a.relabeled(testing::random_permutation(n)) : random_graph(n, 0.5);
    CHECK(canonical_form(a).same_graph(canonical_form(b)) == brute_isomorphic(a, b));
  }
}

TEST_CASE("C6 and two triangles are distinguished") {
  Graph c6(6), two(6);
  for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
  for (int base : {0, 3})
    for (int i = 0; i < 3; ++i) two.add_edge(base + i, base + (i + 1) % 3);
  CHECK_FALSE(canonical_form(c6).same_graph(canonical_form(two)));
}

TEST_CASE("canonical form is independent of labeling and of seed automorphisms") {
  for (const auto& cs : {C54({1, 3, 17, 19}), C54({2, 9, 16, 20, 27}), reflexive_reduce({4, 8}, 16),
                         reflexive_reduce({1, 3, 23}, 48)}) {
    const CirculantGraph g(cs);
    const auto seeded = canonical_form(g);
    for (int i = 0; i < 12; ++i) {
      auto h = Graph::from_circulant(g).relabeled(testing::random_permutation(g.order()));
      CHECK(canonical_form(h).same_graph(seeded));
    }
  }
}

TEST_CASE("seeds must be automorphisms") {
  auto g = Graph::from_circulant(CirculantGraph(reflexive_reduce({1}, 6)));
  CanonOptions opt;
  opt.known_automorphisms = {Permutation{1, 0, 2, 3, 4, 5}};
  CHECK_THROWS_AS(canonical_form(g, opt), Error);
}

TEST_CASE("isomorphic pairs come with a verified permutation") {
  const std::pair<ConnectionSet, ConnectionSet> pairs[] = {
      {C54({1, 3, 17, 19}), C54({3, 7, 11, 25})},  // theta witness
      {C54({1, 9, 17, 19}), C54({5, 9, 13, 23})},  // multiplier
      {reflexive_reduce({1, 2, 7}, 16), reflexive_reduce({2, 3, 5}, 16)},
  };
  for (const auto& [a, b] : pairs) {
    auto v = isomorphic(CirculantGraph(a), CirculantGraph(b));
    REQUIRE(v.kind == IsoVerdict::Kind::Isomorphic);
    CHECK(verify_permutation(CirculantGraph(a), CirculantGraph(b), v.permutation));
    CHECK(v.serialize().rfind("isomorphic ", 0) == 0);
  }
}

TEST_CASE("non-isomorphic verdicts name an invariant") {
  auto v = isomorphic(CirculantGraph(C54({1, 3})), CirculantGraph(reflexive_reduce({1, 3}, 16)));
  CHECK(v.kind == IsoVerdict::Kind::NonIsomorphic);
  CHECK(v.invariant == "order");
  v = isomorphic(CirculantGraph(C54({1, 3})), CirculantGraph(C54({1, 3, 5})));
  CHECK(v.invariant == "degree");
  v = isomorphic(CirculantGraph(C54({1, 3, 17, 19})), CirculantGraph(C54({1, 2, 17, 19})));
  CHECK(v.kind == IsoVerdict::Kind::NonIsomorphic);
  CHECK(v.invariant == "spectrum");
  CHECK(v.serialize() == "non-isomorphic spectrum " + std::to_string(v.index));
}

TEST_CASE("budget exhaustion") {
  auto g = Graph::from_circulant(CirculantGraph(C54({1, 3, 17, 19})));
  CanonOptions opt;
  opt.budget = 1;
  try {
    canonical_form(g, opt);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  auto v = isomorphic(CirculantGraph(C54({1, 3, 17, 19})), CirculantGraph(C54({3, 7, 11, 25})), 1);
  CHECK(v.kind == IsoVerdict::Kind::Timeout);
  CHECK(v.serialize() == "timeout budget");
}

TEST_CASE("verify_permutation rejects wrong maps") {
  CirculantGraph a(reflexive_reduce({1}, 5)), b(reflexive_reduce({2}, 5));
  CHECK(verify_permutation(a, b, Permutation{0, 2, 4, 1, 3}));
  CHECK_FALSE(verify_permutation(a, b, Permutation{0, 1, 2, 3, 4}));
  CHECK_FALSE(verify_permutation(a, b, Permutation{0, 0, 2, 3, 4}));
}
