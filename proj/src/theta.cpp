#include "circiso/theta.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "circiso/error.hpp"

namespace circiso {

namespace {

std::string params_text(int n, int m, int t) {
  return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " t=" + std::to_string(t);
}

bool cube_divides(int m, int n) {
  const long long cube = static_cast<long long>(m) * m * m;
  return cube <= n && n % cube == 0;
}

std::optional<ConnectionSet> image_by_edges(const ConnectionSet& cs, const ThetaParams& p) {
  if (p.t() == 0) return cs;
  return is_circulant(image_under(CirculantGraph(cs), theta_vertex_map(p)));
}

void require_valid(const ConnectionSet& cs, int m, int t) {
  const int n = cs.order();
  if (!theta_params_valid(n, m, cs))
    throw Error(ErrorCode::InvalidParams,
                params_text(n, m, t) + ": need m^3 | n and a jump divisible by m in " + to_text(cs));
  ThetaParams(n, m, t);  // range check on t
}

bool same_multiples(const ConnectionSet& a, const ConnectionSet& b, int m) {
  std::vector<int> ma, mb;
  for (int j : a.jumps())
    if (j % m == 0) ma.push_back(j);
  for (int j : b.jumps())
    if (j % m == 0) mb.push_back(j);
  return ma == mb;
}

}  // namespace

ThetaParams::ThetaParams(int n, int m, int t) : n_(n), m_(m), t_(t) {
  if (m < 2 || n < 2 || !cube_divides(m, n))
    throw Error(ErrorCode::InvalidParams, params_text(n, m, t) + ": m >= 2 with m^3 | n required");
  if (t < 0 || t > max_t())
    throw Error(ErrorCode::InvalidParams, params_text(n, m, t) + ": t outside [0, n/m - 1]");
}

bool theta_params_valid(int n, int m, const ConnectionSet& cs) {
  if (m < 2 || !cube_divides(m, n)) return false;
  return std::any_of(cs.jumps().begin(), cs.jumps().end(), [m](int r) { return r % m == 0; });
}

std::vector<int> cube_divisor_moduli(int n) {
  std::vector<int> out;
  for (int m = 2; static_cast<long long>(m) * m * m <= n; ++m)
    if (cube_divides(m, n)) out.push_back(m);
  return out;
}

Permutation theta_vertex_map(const ThetaParams& p) {
  const int n = p.n(), m = p.m(), t = p.t();
  Permutation map(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const long long shift = static_cast<long long>(x % m) * t * m;
    map[static_cast<std::size_t>(x)] = static_cast<int>((x + shift) % n);
  }
  if (!is_permutation_of_order(map, n))
    throw Error(ErrorCode::NotBijective, params_text(n, m, t));
  return map;
}

std::optional<ConnectionSet> theta_image(const ConnectionSet& cs, int m, int t) {
  require_valid(cs, m, t);
  return image_by_edges(cs, ThetaParams(cs.order(), m, t));
}

std::optional<ConnectionSet> theta_image_by_classes(const ConnectionSet& cs, int m, int t) {
  const ThetaParams p(cs.order(), m, t);
  const int n = p.n();
  const auto diffs = full_difference_set(cs);
  std::vector<int> first;
  for (int j = 0; j < m; ++j) {
    std::vector<int> d;
    d.reserve(diffs.size());
    for (int s : diffs) {
      const long long step = static_cast<long long>((j + s) % m - j) * t * m;
      d.push_back(static_cast<int>((((s + step) % n) + n) % n));
    }
    std::sort(d.begin(), d.end());
    if (j == 0)
      first = std::move(d);
    else if (d != first)
      return std::nullopt;
  }
  return reflexive_reduce(std::span<const int>(first), n);
}

bool verify_theta_witness(const ThetaWitness& w) {
  const ThetaParams& p = w.params;
  if (w.source.order() != p.n() || w.image.order() != p.n()) return false;
  if (w.vertex_map.size() != static_cast<std::size_t>(p.n())) return false;
  for (int x = 0; x < p.n(); ++x) {
    const long long expect = (x + static_cast<long long>(x % p.m()) * p.t() * p.m()) % p.n();
    if (w.vertex_map[static_cast<std::size_t>(x)] != expect) return false;
  }
  const CirculantGraph src(w.source), dst(w.image);
  if (src.edge_count() != dst.edge_count()) return false;
  for (const Edge& e : src.edges())
    if (!dst.adjacent(w.vertex_map[static_cast<std::size_t>(e.u)],
                      w.vertex_map[static_cast<std::size_t>(e.v)]))
      return false;
  return true;
}

std::optional<ThetaWitness> theta_witness(const ConnectionSet& cs, int m, int t) {
  auto image = theta_image(cs, m, t);
  if (!image) return std::nullopt;
  const ThetaParams p(cs.order(), m, t);
  ThetaWitness w{p, cs, *image, theta_vertex_map(p)};
  if (!verify_theta_witness(w))
    throw std::logic_error("θ witness failed re-verification for " + to_text(cs) + " " +
                           params_text(p.n(), m, t));
  return w;
}

std::vector<std::pair<int, ConnectionSet>> theta_scan(const ConnectionSet& cs, int m) {
  require_valid(cs, m, 0);
  const ThetaParams probe(cs.order(), m, 0);
  std::vector<std::pair<int, ConnectionSet>> out;
  for (int t = 1; t <= probe.max_t(); ++t) {
    auto image = image_by_edges(cs, ThetaParams(cs.order(), m, t));
    if (!image) continue;
    if (!same_multiples(cs, *image, m))
      throw std::logic_error("θ moved a multiple of m: " + to_text(cs) + " -> " + to_text(*image));
    out.emplace_back(t, std::move(*image));
  }
  return out;
}

std::optional<ConnectionSet> union_shift(const ConnectionSet& cs, std::span<const int> extra, int m,
                                         int t) {
  const int n = cs.order();
  for (int e : extra) {
    if (m <= 0 || e % m != 0)
      throw Error(ErrorCode::NotMultipleOfM, std::to_string(e) + " is not a multiple of " + std::to_string(m));
    if (e < 1 || e > n / 2)
      throw Error(ErrorCode::InvalidParams, std::to_string(e) + " is not a reduced jump mod " + std::to_string(n));
  }
  const ConnectionSet whole = cs.with(extra);
  require_valid(whole, m, t);
  auto image = image_by_edges(cs, ThetaParams(n, m, t));
  if (!image) return std::nullopt;
  auto shifted = image->with(extra);
#ifndef NDEBUG
  if (image_by_edges(whole, ThetaParams(n, m, t)) != std::optional<ConnectionSet>(shifted))
    throw std::logic_error("union property violated for " + to_text(whole));
#endif
  return shifted;
}

}  // namespace circiso
