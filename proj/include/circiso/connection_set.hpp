#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace circiso {

/// Folds a residue into [0, n/2]: r mod n, then n - r when that exceeds n/2.
int reduce_residue(long long r, int n);

/// The jump set of a circulant graph C_n(R): a sorted, duplicate-free subset
/// of [1, n/2]. Instances only come out of reflexive reduction, so the
/// invariants hold by construction.
class ConnectionSet {
 public:
  ConnectionSet() = default;

  int order() const noexcept { return n_; }
  const std::vector<int>& jumps() const noexcept { return jumps_; }
  std::size_t size() const noexcept { return jumps_.size(); }
  bool empty() const noexcept { return jumps_.empty(); }

  bool contains(int jump) const;
  /// True when n is even and n/2 is a jump (the self-paired "diameter" jump).
  bool has_half_jump() const;

  /// Bit j set for every jump j. Only valid for n <= 127.
  std::uint64_t mask() const;
  static ConnectionSet from_mask(int n, std::uint64_t mask);

  ConnectionSet with(std::span<const int> extra) const;
  ConnectionSet without(std::span<const int> removed) const;
  /// Jumps of [1, n/2] not in this set; the connection set of the complement graph.
  ConnectionSet complement() const;

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;
  /// Orders by n, then lexicographically by jump sequence.
  friend std::strong_ordering operator<=>(const ConnectionSet& a, const ConnectionSet& b);

 private:
  friend ConnectionSet reflexive_reduce(std::span<const long long> raw, int n);
  ConnectionSet(int n, std::vector<int> jumps) : n_(n), jumps_(std::move(jumps)) {}

  int n_ = 0;
  std::vector<int> jumps_;
};

/// { min(r mod n, n - r mod n) : r in raw }, sorted and deduplicated.
/// Throws ErrorCode::ZeroJump when some r is a multiple of n and
/// ErrorCode::InvalidParams when n < 2.
ConnectionSet reflexive_reduce(std::span<const long long> raw, int n);
ConnectionSet reflexive_reduce(std::initializer_list<long long> raw, int n);
ConnectionSet reflexive_reduce(std::span<const int> raw, int n);

/// The symmetric difference set {s, n - s : s in jumps} as residues in (0, n).
/// n/2 appears once.
std::vector<int> full_difference_set(const ConnectionSet& cs);

/// "C54(1,3,17,19)"
std::string to_text(const ConnectionSet& cs);

/// Parses "C<n>(<j>,<j>,...)" with optional whitespace. Jumps are reflexively
/// reduced, so "C54(7,29)" parses to C54(7,25).
ConnectionSet parse_connection_set(std::string_view text);

}  // namespace circiso
