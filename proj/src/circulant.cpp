#include "circiso/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "circiso/error.hpp"
#include "circiso/kernels.hpp"

namespace circiso {

int CirculantGraph::degree() const noexcept {
  return 2 * static_cast<int>(cs_.size()) - (cs_.has_half_jump() ? 1 : 0);
}

std::size_t CirculantGraph::edge_count() const noexcept {
  return static_cast<std::size_t>(order()) * static_cast<std::size_t>(degree()) / 2;
}

bool CirculantGraph::adjacent(int x, int y) const {
  if (x == y) return false;
  return cs_.contains(reduce_residue(static_cast<long long>(y) - x, order()));
}

std::vector<Edge> CirculantGraph::edges() const {
  const int n = order();
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (int x = 0; x < n; ++x) {
    for (int s : cs_.jumps()) {
      // The half jump would list each edge twice.
      if (2 * s == n && x >= s) continue;
      out.push_back(Edge::of(x, (x + s) % n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeImage::EdgeImage(int n, std::vector<Edge> pairs) : n_(n), pairs_(std::move(pairs)) {
  for (auto& e : pairs_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v)
      throw Error(ErrorCode::InvalidParams, "edge image pair out of range or a loop");
    e = Edge::of(e.u, e.v);
  }
}

bool is_permutation_of_order(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int y : perm) {
    if (y < 0 || y >= n || seen[static_cast<std::size_t>(y)]) return false;
    seen[static_cast<std::size_t>(y)] = 1;
  }
  return true;
}

EdgeImage image_under(const CirculantGraph& g, std::span<const int> vertex_map) {
  if (!is_permutation_of_order(vertex_map, g.order()))
    throw Error(ErrorCode::NotBijective, "vertex map is not a permutation of [0, n)");
  std::vector<Edge> pairs;
  const auto edges = g.edges();
  pairs.reserve(edges.size());
  for (const Edge& e : edges)
    pairs.push_back(Edge::of(vertex_map[static_cast<std::size_t>(e.u)],
                             vertex_map[static_cast<std::size_t>(e.v)]));
  return EdgeImage(g.order(), std::move(pairs));
}

std::optional<ConnectionSet> is_circulant(const EdgeImage& img) {
  const int n = img.order();
  const auto un = static_cast<std::size_t>(n);
  std::vector<char> adj(un * un, 0);
  for (const Edge& e : img.pairs()) {
    auto& cell = adj[static_cast<std::size_t>(e.u) * un + static_cast<std::size_t>(e.v)];
    if (cell) return std::nullopt;  // repeated pair: not the image of a simple graph
    cell = 1;
    adj[static_cast<std::size_t>(e.v) * un + static_cast<std::size_t>(e.u)] = 1;
  }
  for (const Edge& e : img.pairs()) {
    const auto a = static_cast<std::size_t>((e.u + 1) % n);
    const auto b = static_cast<std::size_t>((e.v + 1) % n);
    if (!adj[a * un + b]) return std::nullopt;
  }
  std::vector<long long> diffs;
  for (int d = 1; d < n; ++d)
    if (adj[static_cast<std::size_t>(d)]) diffs.push_back(d);
  return reflexive_reduce(diffs, n);
}

std::vector<double> adjacency_spectrum(const ConnectionSet& cs) {
  const int n = cs.order();
  std::vector<double> table(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    table[static_cast<std::size_t>(r)] = std::cos(2.0 * std::numbers::pi * r / n);
  std::vector<int> jumps;
  std::vector<double> weights;
  for (int s : cs.jumps()) {
    jumps.push_back(s);
    weights.push_back(2 * s == n ? 1.0 : 2.0);
  }
  std::vector<double> eig(static_cast<std::size_t>(n));
  kernels::circulant_eigenvalues(jumps, weights, table, eig);
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::optional<std::size_t> spectrum_mismatch(std::span<const double> a, std::span<const double> b,
                                             double tol) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i)
    if (std::abs(a[i] - b[i]) > tol) return i;
  if (a.size() != b.size()) return common;
  return std::nullopt;
}

}  // namespace circiso
