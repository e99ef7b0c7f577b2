#pragma once
// Pair and tuple classification: multiplier (Type-1), theta (Type-2),
// oracle-certified non-isomorphism, or an honest "unknown".

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "circiso/iso_oracle.hpp"
#include "circiso/multipliers.hpp"

namespace circiso {

struct Type1 {
  int x = 1;  // b = x * a, smallest such unit
};

struct Type2 {
  int m = 0;
  int t = 0;
  /// Source followed by its image under theta_{n,m,t}.
  std::vector<ConnectionSet> chain;
};

struct NonIsomorphic {
  IsoVerdict certificate;
};

struct Unknown {
  std::string reason;
};

using Verdict = std::variant<Type1, Type2, NonIsomorphic, Unknown>;

std::string_view verdict_kind(const Verdict& v);  // "Type1", "Type2", ...

struct Classification {
  Verdict verdict;
  AdamOrbit orbit;  // of the first member

  std::string_view kind() const { return verdict_kind(verdict); }
  /// "Type2 m=3 t=2", "Type1 x=5", "NonIsomorphic spectrum 4", "Unknown budget"
  std::string summary() const;
};

struct TupleRecord {
  std::vector<ConnectionSet> members;
  /// t -> theta image of members[0].
  std::map<int, ConnectionSet> theta_images;
  Classification classification;
};

/// Type-1 or Type-2 witness without consulting the oracle. Requires equal
/// orders; Type-2 additionally needs |a| = |b| >= 3 and a common jump
/// divisible by m. m ascends, then t ascends; first hit wins.
std::optional<Verdict> find_witness(const ConnectionSet& a, const ConnectionSet& b);

/// Throws OrderMismatch on different orders, InvalidParams when a == b.
Classification classify_pair(const ConnectionSet& a, const ConnectionSet& b,
                             std::uint64_t budget = kDefaultIsoBudget);

/// Throws OrderMismatch, or InvalidParams for fewer than two or repeated members.
TupleRecord classify_tuple(std::span<const ConnectionSet> members, std::uint64_t budget = kDefaultIsoBudget);

}  // namespace circiso
