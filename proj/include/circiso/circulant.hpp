#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "circiso/connection_set.hpp"

namespace circiso {

/// Vertex map on [0, n): perm[x] is the image of x.
using Permutation = std::vector<int>;

/// Unordered vertex pair stored as (min, max).
struct Edge {
  int u = 0;
  int v = 0;

  static Edge of(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// C_n(R) on Z_n: x ~ y iff the reflexive reduction of y - x is a jump.
class CirculantGraph {
 public:
  explicit CirculantGraph(ConnectionSet cs) : cs_(std::move(cs)) {}

  const ConnectionSet& connection_set() const noexcept { return cs_; }
  int order() const noexcept { return cs_.order(); }
  int degree() const noexcept;
  std::size_t edge_count() const noexcept;
  bool adjacent(int x, int y) const;
  /// Sorted edge list, each edge once.
  std::vector<Edge> edges() const;

 private:
  ConnectionSet cs_;
};

/// The image of an edge set under a vertex map, before we know whether it is
/// again circulant. Pairs are canonical (min, max) with distinct endpoints.
class EdgeImage {
 public:
  EdgeImage(int n, std::vector<Edge> pairs);

  int order() const noexcept { return n_; }
  const std::vector<Edge>& pairs() const noexcept { return pairs_; }

 private:
  int n_;
  std::vector<Edge> pairs_;
};

/// Applies vertex_map to every edge of g. Throws NotBijective when vertex_map
/// is not a permutation of [0, n).
EdgeImage image_under(const CirculantGraph& g, std::span<const int> vertex_map);

/// Returns S when the pair set is invariant under x -> x + 1 (and hence equals
/// the edge set of C_n(S)); empty otherwise.
std::optional<ConnectionSet> is_circulant(const EdgeImage& img);

/// Closed-form eigenvalues of C_n(R), sorted ascending.
std::vector<double> adjacency_spectrum(const ConnectionSet& cs);

/// Index of the first sorted eigenvalue differing by more than tol, or empty
/// when the spectra agree. Different lengths mismatch at the shorter length.
std::optional<std::size_t> spectrum_mismatch(std::span<const double> a, std::span<const double> b,
                                             double tol = 1e-9);

bool is_permutation_of_order(std::span<const int> perm, int n);

}  // namespace circiso
