#include "circiso/iso_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "circiso/error.hpp"

namespace circiso {

Graph::Graph(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64) {
  if (n < 1 || n > 256) throw Error(ErrorCode::InvalidParams, "graph order must be in [1, 256]");
  bits_.assign(words_ * static_cast<std::size_t>(n), 0);
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_circulant(const CirculantGraph& g) {
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
    throw Error(ErrorCode::InvalidParams, "bad edge");
  if (has_edge(u, v)) return;
  auto set = [&](int a, int b) {
    bits_[static_cast<std::size_t>(a) * words_ + static_cast<std::size_t>(b) / 64] |=
        std::uint64_t{1} << (b % 64);
    adj_[static_cast<std::size_t>(a)].push_back(b);
  };
  set(u, v);
  set(v, u);
  ++edges_;
}

bool Graph::has_edge(int u, int v) const {
  return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.push_back({u, v});
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (!is_permutation_of_order(perm, n_)) throw Error(ErrorCode::NotBijective, "relabeling");
  Graph out(n_);
  for (const Edge& e : edges())
    out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return out;
}

bool Graph::is_automorphism(std::span<const int> perm) const {
  if (!is_permutation_of_order(perm, n_)) return false;
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (!has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) return false;
  return true;
}

namespace {

// A leaf is ranked by the sequence of partition shapes along its path, then by
// the relabeled adjacency matrix. Equal shapes pin every individualized vertex
// to the same position, which is what makes back-jumping sound.
struct Certificate {
  std::vector<int> trace;
  std::vector<std::uint64_t> matrix;

  friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

struct Leaf {
  Certificate cert;
  std::vector<int> lab;   // lab[i] = vertex at canonical position i
  std::vector<int> path;  // individualized vertices
};

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class Search {
 public:
  Search(const Graph& g, const CanonOptions& opt) : g_(g), n_(g.order()), budget_(opt.budget) {
    for (const auto& a : opt.known_automorphisms) {
      if (!g.is_automorphism(a)) throw Error(ErrorCode::InvalidParams, "seed is not an automorphism");
      generators_.push_back(a);
    }
  }

  CanonicalForm run() {
    std::vector<int> colour(static_cast<std::size_t>(n_), 0);
    std::vector<int> trace;
    std::vector<int> path;
    descend(colour, 1, trace, path);

    CanonicalForm out;
    out.n = n_;
    out.nodes = nodes_;
    out.labeling.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) out.labeling[static_cast<std::size_t>(best_.lab[static_cast<std::size_t>(i)])] = i;
    for (const Edge& e : g_.edges())
      out.canonical_edges.push_back(Edge::of(out.labeling[static_cast<std::size_t>(e.u)],
                                             out.labeling[static_cast<std::size_t>(e.v)]));
    std::sort(out.canonical_edges.begin(), out.canonical_edges.end());
    return out;
  }

 private:
  // Colours are 0..cells-1 in partition order. Returns the new cell count.
  int refine(std::vector<int>& colour, int cells) const {
    std::vector<int> order(static_cast<std::size_t>(n_));
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_));
    for (;;) {
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[static_cast<std::size_t>(v)];
        s.clear();
        for (int u : g_.neighbours(v)) s.push_back(colour[static_cast<std::size_t>(u)]);
        std::sort(s.begin(), s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      auto key_less = [&](int a, int b) {
        auto ca = colour[static_cast<std::size_t>(a)];
        auto cb = colour[static_cast<std::size_t>(b)];
        if (ca != cb) return ca < cb;
        return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
      };
      std::sort(order.begin(), order.end(), key_less);
      std::vector<int> next(static_cast<std::size_t>(n_));
      int c = 0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && key_less(order[i - 1], order[i])) ++c;
        next[static_cast<std::size_t>(order[i])] = c;
      }
      int fresh = c + 1;
      colour.swap(next);
      if (fresh == cells) return cells;
      cells = fresh;
    }
  }

  void add_generator(const std::vector<int>& from, const std::vector<int>& to) {
    Permutation gamma(static_cast<std::size_t>(n_));
    bool identity = true;
    for (std::size_t i = 0; i < from.size(); ++i) {
      gamma[static_cast<std::size_t>(from[i])] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  // Orbits of the subgroup generated by known automorphisms fixing prefix.
  DisjointSets orbits(const std::vector<int>& prefix) const {
    DisjointSets ds(n_);
    for (const auto& gamma : generators_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](int v) { return gamma[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) ds.unite(v, gamma[static_cast<std::size_t>(v)]);
    }
    return ds;
  }

  static std::size_t common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return i;
  }

  void leaf(const std::vector<int>& colour, const std::vector<int>& trace, const std::vector<int>& path) {
    Leaf here;
    here.lab.assign(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) here.lab[static_cast<std::size_t>(colour[static_cast<std::size_t>(v)])] = v;
    const std::size_t words = (static_cast<std::size_t>(n_) + 63) / 64;
    here.cert.trace = trace;
    here.cert.matrix.assign(words * static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
      for (int u : g_.neighbours(here.lab[static_cast<std::size_t>(i)])) {
        auto j = static_cast<std::size_t>(colour[static_cast<std::size_t>(u)]);
        here.cert.matrix[static_cast<std::size_t>(i) * words + j / 64] |= std::uint64_t{1} << (j % 64);
      }
    here.path = path;

    if (!have_first_) {
      first_ = here;
      best_ = std::move(here);
      have_first_ = true;
      return;
    }
    if (here.cert == first_.cert) {
      add_generator(first_.lab, here.lab);
      jump_to_ = common_prefix(first_.path, path);
      return;
    }
    if (here.cert == best_.cert) {
      add_generator(best_.lab, here.lab);
      jump_to_ = common_prefix(best_.path, path);
      return;
    }
    if (here.cert < best_.cert) best_ = std::move(here);
  }

  void descend(std::vector<int> colour, int cells, std::vector<int>& trace, std::vector<int>& path) {
    if (++nodes_ > budget_) throw Error(ErrorCode::BudgetExceeded, "canonical labeling search");
    cells = refine(colour, cells);

    std::vector<int> sizes(static_cast<std::size_t>(cells), 0);
    for (int c : colour) ++sizes[static_cast<std::size_t>(c)];
    const std::size_t mark = trace.size();
    trace.push_back(cells);
    trace.insert(trace.end(), sizes.begin(), sizes.end());

    if (cells == n_) {
      leaf(colour, trace, path);
      trace.resize(mark);
      return;
    }

    int target = 0;
    for (int c = 1; c < cells; ++c)
      if (sizes[static_cast<std::size_t>(c)] > sizes[static_cast<std::size_t>(target)]) target = c;

    std::vector<int> members;
    for (int v = 0; v < n_; ++v)
      if (colour[static_cast<std::size_t>(v)] == target) members.push_back(v);

    std::vector<int> explored;
    std::size_t seen_generators = static_cast<std::size_t>(-1);
    DisjointSets ds(n_);
    for (int v : members) {
      if (generators_.size() != seen_generators) {
        ds = orbits(path);
        seen_generators = generators_.size();
      }
      if (std::any_of(explored.begin(), explored.end(), [&](int u) { return ds.find(u) == ds.find(v); }))
        continue;

      std::vector<int> child = colour;
      for (auto& c : child)
        if (c > target) ++c;
      for (int u : members)
        if (u != v) child[static_cast<std::size_t>(u)] = target + 1;
      path.push_back(v);
      descend(std::move(child), cells + 1, trace, path);
      path.pop_back();
      explored.push_back(v);

      if (jump_to_ < path.size()) break;
      if (jump_to_ == path.size()) jump_to_ = kNoJump;
    }
    trace.resize(mark);
  }

  static constexpr std::size_t kNoJump = static_cast<std::size_t>(-1);

  const Graph& g_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Permutation> generators_;
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  std::size_t jump_to_ = kNoJump;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, const CanonOptions& options) {
  return Search(g, options).run();
}

CanonicalForm canonical_form(const CirculantGraph& g, std::uint64_t budget) {
  const int n = g.order();
  CanonOptions opt;
  opt.budget = budget;
  Permutation rot(static_cast<std::size_t>(n));
  Permutation refl(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    rot[static_cast<std::size_t>(x)] = (x + 1) % n;
    refl[static_cast<std::size_t>(x)] = (n - x) % n;
  }
  opt.known_automorphisms = {std::move(rot), std::move(refl)};
  return canonical_form(Graph::from_circulant(g), opt);
}

std::string_view to_string(IsoVerdict::Kind kind) {
  switch (kind) {
    case IsoVerdict::Kind::Isomorphic: return "isomorphic";
    case IsoVerdict::Kind::NonIsomorphic: return "non-isomorphic";
    case IsoVerdict::Kind::Timeout: return "timeout";
  }
  return "?";
}

std::string IsoVerdict::serialize() const {
  std::ostringstream os;
  os << to_string(kind);
  switch (kind) {
    case Kind::Isomorphic:
      for (int x : permutation) os << ' ' << x;
      break;
    case Kind::NonIsomorphic:
      os << ' ' << invariant;
      if (invariant == "spectrum") os << ' ' << index;
      break;
    case Kind::Timeout:
      os << ' ' << invariant;
      break;
  }
  return os.str();
}

bool verify_permutation(const CirculantGraph& a, const CirculantGraph& b, std::span<const int> perm) {
  if (a.order() != b.order() || !is_permutation_of_order(perm, a.order())) return false;
  if (a.edge_count() != b.edge_count()) return false;
  for (const Edge& e : a.edges())
    if (!b.adjacent(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)])) return false;
  return true;
}

IsoVerdict isomorphic(const CirculantGraph& a, const CirculantGraph& b, std::uint64_t budget) {
  IsoVerdict out;
  out.kind = IsoVerdict::Kind::NonIsomorphic;
  if (a.order() != b.order()) {
    out.invariant = "order";
    return out;
  }
  if (a.degree() != b.degree()) {
    out.invariant = "degree";
    return out;
  }
  auto sa = adjacency_spectrum(a.connection_set());
  auto sb = adjacency_spectrum(b.connection_set());
  if (auto at = spectrum_mismatch(sa, sb)) {
    out.invariant = "spectrum";
    out.index = *at;
    return out;
  }
  CanonicalForm ca, cb;
  try {
    ca = canonical_form(a, budget);
    cb = canonical_form(b, budget);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    out.kind = IsoVerdict::Kind::Timeout;
    out.invariant = "budget";
    return out;
  }
  if (!ca.same_graph(cb)) {
    out.invariant = "canonical-form";
    return out;
  }
  const auto n = static_cast<std::size_t>(a.order());
  Permutation inv_b(n);
  for (std::size_t v = 0; v < n; ++v) inv_b[static_cast<std::size_t>(cb.labeling[v])] = static_cast<int>(v);
  out.permutation.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.permutation[v] = inv_b[static_cast<std::size_t>(ca.labeling[v])];
  if (!verify_permutation(a, b, out.permutation))
    throw std::logic_error("canonical forms agree but the induced map is not an isomorphism");
  out.kind = IsoVerdict::Kind::Isomorphic;
  out.invariant.clear();
  return out;
}

}  // namespace circiso
