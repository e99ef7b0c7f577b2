#include "circiso/multipliers.hpp"

#include <algorithm>
#include <numeric>

#include "circiso/error.hpp"

namespace circiso {

UnitGroup units(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidParams, "units() needs n >= 2");
  UnitGroup g{n, {}};
  for (int x = 1; x < n; ++x)
    if (std::gcd(x, n) == 1) g.units.push_back(x);
  return g;
}

ConnectionSet multiply_set(const ConnectionSet& cs, int x) {
  const int n = cs.order();
  if (std::gcd(((x % n) + n) % n, n) != 1)
    throw Error(ErrorCode::NotAUnit, std::to_string(x) + " is not a unit mod " + std::to_string(n));
  std::vector<long long> raw;
  raw.reserve(cs.size());
  for (int j : cs.jumps()) raw.push_back(static_cast<long long>(x) * j);
  return reflexive_reduce(raw, n);
}

bool AdamOrbit::contains(const ConnectionSet& cs) const {
  return std::binary_search(members.begin(), members.end(), cs);
}

AdamOrbit adam_orbit(const ConnectionSet& cs) {
  AdamOrbit orbit{cs.order(), {}};
  for (int x : units(cs.order()).units) orbit.members.push_back(multiply_set(cs, x));
  std::sort(orbit.members.begin(), orbit.members.end());
  orbit.members.erase(std::unique(orbit.members.begin(), orbit.members.end()), orbit.members.end());
  return orbit;
}

std::optional<int> is_adam_equivalent(const ConnectionSet& a, const ConnectionSet& b) {
  if (a.order() != b.order())
    throw Error(ErrorCode::OrderMismatch,
                "C" + std::to_string(a.order()) + " vs C" + std::to_string(b.order()));
  if (a.size() != b.size()) return std::nullopt;
  for (int x : units(a.order()).units)
    if (multiply_set(a, x) == b) return x;
  return std::nullopt;
}

}  // namespace circiso
