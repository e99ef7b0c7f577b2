#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "circiso/circulant.hpp"
#include "circiso/connection_set.hpp"

namespace circiso {

/// Parameters of the Type-2 vertex map x -> x + (x mod m) t m (mod n).
/// Valid when m >= 2, m^3 divides n and 0 <= t <= n/m - 1.
class ThetaParams {
 public:
  /// Throws InvalidParams.
  ThetaParams(int n, int m, int t);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int t() const noexcept { return t_; }
  /// Largest admissible t, n/m - 1.
  int max_t() const noexcept { return n_ / m_ - 1; }

  friend bool operator==(const ThetaParams&, const ThetaParams&) = default;

 private:
  int n_, m_, t_;
};

/// m^3 | n and some jump of cs is a multiple of m.
bool theta_params_valid(int n, int m, const ConnectionSet& cs);

/// All m > 1 with m^3 | n, ascending.
std::vector<int> cube_divisor_moduli(int n);

Permutation theta_vertex_map(const ThetaParams& params);

/// Image of C_n(cs) under the θ vertex map when it is circulant. Works on the
/// permuted edge set. Throws InvalidParams unless theta_params_valid holds and
/// t is in range. t = 0 returns cs.
std::optional<ConnectionSet> theta_image(const ConnectionSet& cs, int m, int t);

/// Same answer as theta_image, computed from jump arithmetic: a vertex in
/// residue class j mod m sees the difference set
///   D_j = { s + ((j + s) mod m - j) t m : s in +-R }  (mod n),
/// and the image is circulant iff every D_j is the same set. Only requires
/// m^3 | n, so it also accepts sets with no multiple of m.
std::optional<ConnectionSet> theta_image_by_classes(const ConnectionSet& cs, int m, int t);

struct ThetaWitness {
  ThetaParams params;
  ConnectionSet source;
  ConnectionSet image;
  Permutation vertex_map;
};

/// theta_image packaged with its vertex map, re-verified edge by edge.
std::optional<ThetaWitness> theta_witness(const ConnectionSet& cs, int m, int t);

/// Re-checks a witness from scratch: the map is θ for its params and carries
/// the source edge set exactly onto the image edge set.
bool verify_theta_witness(const ThetaWitness& w);

/// Every t in [1, n/m - 1] with a circulant image, ascending.
std::vector<std::pair<int, ConnectionSet>> theta_scan(const ConnectionSet& cs, int m);

/// θ image of cs ∪ extra, computed as θ(cs) ∪ extra. Every element of extra
/// must be a multiple of m (NotMultipleOfM otherwise).
std::optional<ConnectionSet> union_shift(const ConnectionSet& cs, std::span<const int> extra, int m,
                                         int t);

}  // namespace circiso
