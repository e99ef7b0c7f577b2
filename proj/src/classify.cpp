#include "circiso/classify.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "circiso/error.hpp"
#include "circiso/theta.hpp"

namespace circiso {

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};

void require_same_order(const ConnectionSet& a, const ConnectionSet& b) {
  if (a.order() != b.order())
    throw Error(ErrorCode::OrderMismatch, to_text(a) + " vs " + to_text(b));
}

bool shares_multiple(const ConnectionSet& a, const ConnectionSet& b, int m) {
  for (int r : a.jumps())
    if (r % m == 0 && b.contains(r)) return true;
  return false;
}

Verdict oracle_verdict(const ConnectionSet& a, const ConnectionSet& b, std::uint64_t budget) {
  IsoVerdict iso = isomorphic(CirculantGraph(a), CirculantGraph(b), budget);
  switch (iso.kind) {
    case IsoVerdict::Kind::NonIsomorphic:
      return NonIsomorphic{std::move(iso)};
    case IsoVerdict::Kind::Isomorphic:
      return Unknown{"isomorphic, no Type-1/Type-2 witness found"};
    case IsoVerdict::Kind::Timeout:
      break;
  }
  return Unknown{"budget"};
}

}  // namespace

std::string_view verdict_kind(const Verdict& v) {
  return std::visit(overloaded{
                        [](const Type1&) { return std::string_view("Type1"); },
                        [](const Type2&) { return std::string_view("Type2"); },
                        [](const NonIsomorphic&) { return std::string_view("NonIsomorphic"); },
                        [](const Unknown&) { return std::string_view("Unknown"); },
                    },
                    v);
}

std::string Classification::summary() const {
  std::ostringstream os;
  os << kind();
  std::visit(overloaded{
                 [&](const Type1& w) { os << " x=" << w.x; },
                 [&](const Type2& w) { os << " m=" << w.m << " t=" << w.t; },
                 [&](const NonIsomorphic& w) {
                   os << ' ' << w.certificate.invariant;
                   if (w.certificate.invariant == "spectrum") os << ' ' << w.certificate.index;
                 },
                 [&](const Unknown& w) { os << ' ' << w.reason; },
             },
             verdict);
  return os.str();
}

std::optional<Verdict> find_witness(const ConnectionSet& a, const ConnectionSet& b) {
  require_same_order(a, b);
  if (auto x = is_adam_equivalent(a, b)) return Type1{*x};
  if (a.size() != b.size() || a.size() < 3) return std::nullopt;
  const int n = a.order();
  for (int m : cube_divisor_moduli(n)) {
    if (!shares_multiple(a, b, m)) continue;
    for (int t = 1; t <= n / m - 1; ++t) {
      auto image = theta_image(a, m, t);
      if (image && *image == b) return Type2{m, t, {a, b}};
    }
  }
  return std::nullopt;
}

Classification classify_pair(const ConnectionSet& a, const ConnectionSet& b, std::uint64_t budget) {
  require_same_order(a, b);
  if (a == b) throw Error(ErrorCode::InvalidParams, "classify_pair needs two distinct sets");
  Classification out{Unknown{}, adam_orbit(a)};
  if (auto w = find_witness(a, b))
    out.verdict = std::move(*w);
  else
    out.verdict = oracle_verdict(a, b, budget);
  return out;
}

TupleRecord classify_tuple(std::span<const ConnectionSet> members, std::uint64_t budget) {
  if (members.size() < 2) throw Error(ErrorCode::InvalidParams, "a tuple needs at least two members");
  for (std::size_t i = 1; i < members.size(); ++i) require_same_order(members[0], members[i]);
  if (std::set<ConnectionSet>(members.begin(), members.end()).size() != members.size())
    throw Error(ErrorCode::InvalidParams, "tuple members must be pairwise distinct");

  const std::size_t k = members.size();
  TupleRecord rec;
  rec.members.assign(members.begin(), members.end());
  rec.classification.orbit = adam_orbit(members[0]);

  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  bool all_adam = true;
  std::optional<Type2> first_type2;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      auto w = find_witness(members[i], members[j]);
      if (!w) {
        all_adam = false;
        continue;
      }
      if (auto* t2 = std::get_if<Type2>(&*w)) {
        all_adam = false;
        if (!first_type2) first_type2 = *t2;
      }
      parent[find(j)] = find(i);
    }

  bool connected = true;
  for (std::size_t i = 1; i < k; ++i) connected = connected && find(i) == find(0);

  if (connected && all_adam) {
    rec.classification.verdict = Type1{*is_adam_equivalent(members[0], members[1])};
  } else if (connected) {
    rec.classification.verdict = *first_type2;
    const int m = first_type2->m;
    const int n = members[0].order();
    if (theta_params_valid(n, m, members[0])) {
      std::set<std::size_t> placed;
      for (int t = 1; t <= n / m - 1 && placed.size() + 1 < k; ++t) {
        auto image = theta_image(members[0], m, t);
        if (!image) continue;
        for (std::size_t j = 1; j < k; ++j)
          if (*image == members[j] && placed.insert(j).second) rec.theta_images.emplace(t, *image);
      }
    }
  } else {
    // Some pair lacks a witness: let the oracle decide between the first two
    // components that failed to join.
    std::size_t other = 1;
    while (find(other) == find(0)) ++other;
    Verdict v = oracle_verdict(members[0], members[other], budget);
    rec.classification.verdict = std::move(v);
  }
  return rec;
}

}  // namespace circiso
