#pragma once

#include <optional>
#include <vector>

#include "circiso/connection_set.hpp"

namespace circiso {

/// Residues in [1, n) coprime to n, ascending.
struct UnitGroup {
  int n = 0;
  std::vector<int> units;
};

UnitGroup units(int n);

/// reflexive_reduce({x * j : j in cs}). Throws NotAUnit when gcd(x, n) != 1.
ConnectionSet multiply_set(const ConnectionSet& cs, int x);

/// Type-1 equivalence class { x R : x a unit }. Members are sorted, so the
/// canonical representative is members.front().
struct AdamOrbit {
  int n = 0;
  std::vector<ConnectionSet> members;

  const ConnectionSet& representative() const { return members.front(); }
  bool contains(const ConnectionSet& cs) const;
  friend bool operator==(const AdamOrbit&, const AdamOrbit&) = default;
};

AdamOrbit adam_orbit(const ConnectionSet& cs);

/// Smallest unit x with x a = b, or empty. Throws OrderMismatch.
std::optional<int> is_adam_equivalent(const ConnectionSet& a, const ConnectionSet& b);

}  // namespace circiso
