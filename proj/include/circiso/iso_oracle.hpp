#pragma once
// Independent isomorphism decision for circulant graphs: a spectrum
// pre-filter, then canonical labeling by individualization-refinement.
//
// The search is the classic one: refine an ordered vertex partition to an
// equitable one (colour = multiset of neighbour colours, iterated to a
// fixpoint), individualize each vertex of the first largest non-singleton
// cell in turn, and keep the smallest leaf certificate. Automorphisms found
// when two leaves coincide prune sibling subtrees; nothing about circulancy
// is assumed except for the optional seed automorphisms.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "circiso/circulant.hpp"

namespace circiso {

inline constexpr std::uint64_t kDefaultIsoBudget = 10'000'000;

/// Simple undirected graph on [0, n), n <= 256, adjacency as bit rows.
class Graph {
 public:
  explicit Graph(int n);
  static Graph from_circulant(const CirculantGraph& g);

  int order() const noexcept { return n_; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t edge_count() const noexcept { return edges_; }
  std::vector<Edge> edges() const;
  /// Vertex x of this graph becomes perm[x].
  Graph relabeled(std::span<const int> perm) const;
  bool is_automorphism(std::span<const int> perm) const;

 private:
  int n_;
  std::size_t words_;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<int>> adj_;
};

struct CanonicalForm {
  int n = 0;
  /// Sorted edge list of the relabeled graph.
  std::vector<Edge> canonical_edges;
  /// labeling[v] is the canonical index of vertex v.
  Permutation labeling;
  /// Search nodes expanded.
  std::uint64_t nodes = 0;

  /// Same graph up to relabeling.
  bool same_graph(const CanonicalForm& other) const {
    return n == other.n && canonical_edges == other.canonical_edges;
  }
};

struct CanonOptions {
  std::uint64_t budget = kDefaultIsoBudget;
  /// Automorphisms known in advance; used only for pruning and checked first.
  std::vector<Permutation> known_automorphisms;
};

/// Throws ErrorCode::BudgetExceeded once more than budget nodes are expanded.
CanonicalForm canonical_form(const Graph& g, const CanonOptions& options = {});
/// Seeds the rotation x -> x + 1 and the reflection x -> -x.
CanonicalForm canonical_form(const CirculantGraph& g, std::uint64_t budget = kDefaultIsoBudget);

struct IsoVerdict {
  enum class Kind { Isomorphic, NonIsomorphic, Timeout };

  Kind kind = Kind::Timeout;
  /// Isomorphic: vertex x of the first graph maps to permutation[x].
  Permutation permutation;
  /// NonIsomorphic: "order", "degree", "spectrum" or "canonical-form".
  /// Timeout: "budget".
  std::string invariant;
  /// NonIsomorphic by spectrum: index of the first differing sorted eigenvalue.
  std::size_t index = 0;

  /// "isomorphic 0 7 14 ...", "non-isomorphic spectrum 3", "timeout budget".
  std::string serialize() const;
};

std::string_view to_string(IsoVerdict::Kind kind);

IsoVerdict isomorphic(const CirculantGraph& a, const CirculantGraph& b,
                      std::uint64_t budget = kDefaultIsoBudget);

/// Every edge {x, y} of a maps to an edge {perm x, perm y} of b and the edge
/// counts agree.
bool verify_permutation(const CirculantGraph& a, const CirculantGraph& b, std::span<const int> perm);

}  // namespace circiso
