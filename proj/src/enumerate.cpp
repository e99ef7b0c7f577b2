#include "circiso/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

#include "circiso/error.hpp"
#include "circiso/kernels.hpp"
#include "circiso/theta.hpp"

namespace circiso {

int worker_count() {
  if (const char* env = std::getenv("CIRCIO_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < std::min(threads, count); ++w) pool.emplace_back(work);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

// ---------------------------------------------------------------- families

FamilySpec family_a() { return {'a', 54, reflexive_reduce({1, 17, 19}, 54), {3, 6, 9, 12, 15, 18, 21, 24, 27}}; }
FamilySpec family_b() { return {'b', 54, reflexive_reduce({2, 16, 20}, 54), {3, 6, 9, 12, 15, 18, 21, 24, 27}}; }

FamilySpec family(char name) {
  if (name == 'a' || name == 'A') return family_a();
  if (name == 'b' || name == 'B') return family_b();
  throw Error(ErrorCode::InvalidParams, std::string("unknown family '") + name + "'");
}

std::vector<std::vector<int>> ordered_subsets(const std::vector<int>& pool) {
  std::vector<std::vector<int>> out;
  const std::size_t k = pool.size();
  for (std::size_t size = 1; size <= k; ++size) {
    // lexicographic combinations of indices
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (;;) {
      std::vector<int> subset;
      for (std::size_t i : idx) subset.push_back(pool[i]);
      out.push_back(std::move(subset));
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == k - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

std::vector<TupleRecord> enumerate_family(const FamilySpec& spec, int workers) {
  const auto subsets = ordered_subsets(spec.pool);
  std::vector<TupleRecord> rows(subsets.size());
  parallel_for(subsets.size(), workers, [&](std::size_t i) {
    const ConnectionSet r = spec.base.with(subsets[i]);
    auto t2 = theta_image(r, 3, 2);
    auto t4 = theta_image(r, 3, 4);
    if (!t2 || !t4) throw std::logic_error("family member without circulant image: " + to_text(r));
    std::vector<ConnectionSet> members{r, *t2, *t4};
    TupleRecord rec = classify_tuple(members);
    rec.theta_images = {{2, *t2}, {4, *t4}};
    rows[i] = std::move(rec);
  });
  return rows;
}

// ---------------------------------------------------------------- full scan

namespace {

using JumpMask = std::uint32_t;  // bit j-1 <-> jump j, j <= 27


ConnectionSet set_of(int n, JumpMask mask) {
  std::vector<int> jumps;
  for (int j = 1; j <= n / 2; ++j)
    if ((mask >> (j - 1)) & 1U) jumps.push_back(j);
  return reflexive_reduce(std::span<const int>(jumps), n);
}

class UnitTable {
 public:
  explicit UnitTable(int n) : n_(n) {
    for (int u : units(n).units) {
      std::vector<JumpMask> img(static_cast<std::size_t>(n / 2 + 1), 0);
      for (int j = 1; j <= n / 2; ++j) img[static_cast<std::size_t>(j)] = JumpMask{1} << (reduce_residue(static_cast<long long>(u) * j, n) - 1);
      images_.push_back(std::move(img));
    }
  }

  JumpMask multiply(JumpMask mask, std::size_t unit) const {
    JumpMask out = 0;
    const auto& img = images_[unit];
    while (mask) {
      const int j = std::countr_zero(mask) + 1;
      out |= img[static_cast<std::size_t>(j)];
      mask &= mask - 1;
    }
    return out;
  }

  std::size_t size() const { return images_.size(); }

  JumpMask orbit_min(JumpMask a) const {
    JumpMask best = a;
    for (std::size_t u = 0; u < images_.size(); ++u) best = std::min(best, multiply(a, u));
    return best;
  }

 private:
  int n_;
  std::vector<std::vector<JumpMask>> images_;
};

struct Witness {
  int m = 0;
  int t = 0;
  bool reversed = false;
};

using PairKey = std::uint64_t;

PairKey pair_key(JumpMask a, JumpMask b) {
  if (a > b) std::swap(a, b);
  return (PairKey{a} << 32) | b;
}

// Subsets Q of the jumps not divisible by m, with their theta images at every
// t, come from OR-ing precomputed per-jump rows: word (t, j) holds the
// residues s + ((j + s) mod m - j) t m for s = +-jump. The image is circulant
// at t iff the m words of group t agree.
class ModulusScan {
 public:
  ModulusScan(int n, int m) : n_(n), m_(m), ts_(n / m - 1) {
    for (int j = 1; j <= n / 2; ++j) (j % m == 0 ? multiples_ : free_).push_back(j);
    const std::size_t width = static_cast<std::size_t>(ts_) * static_cast<std::size_t>(m);
    for (int s : free_) {
      std::vector<std::uint64_t> row(width, 0);
      for (int t = 1; t <= ts_; ++t)
        for (int j = 0; j < m; ++j)
          for (int r : {s, n - s}) {
            const long long d = (r + static_cast<long long>((j + r) % m - j) * t * m) % n;
            const auto at = static_cast<std::size_t>(t - 1) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j);
            row[at] |= std::uint64_t{1} << ((d + n) % n);
          }
      rows_.push_back(std::move(row));
    }
  }

  std::size_t free_count() const { return free_.size(); }
  const std::vector<int>& multiples() const { return multiples_; }

  struct Hit {
    JumpMask q;
    JumpMask s;
    int t;
  };

  // Enumerates subsets whose first `fixed` free jumps follow `prefix`.
  void run_chunk(std::uint64_t prefix, std::size_t fixed, std::vector<Hit>& out) const {
    const std::size_t width = static_cast<std::size_t>(ts_) * static_cast<std::size_t>(m_);
    std::vector<std::vector<std::uint64_t>> stack(free_.size() + 1, std::vector<std::uint64_t>(width, 0));
    JumpMask q = 0;
    for (std::size_t i = 0; i < fixed; ++i)
      if ((prefix >> i) & 1U) {
        kernels::or_accumulate(stack[0], rows_[i]);
        q |= JumpMask{1} << (free_[i] - 1);
      }
    dfs(fixed, fixed, q, stack, out);
  }

 private:
  void dfs(std::size_t i, std::size_t level0, JumpMask q, std::vector<std::vector<std::uint64_t>>& stack,
           std::vector<Hit>& out) const {
    const std::size_t level = i - level0;
    if (i == free_.size()) {
      if (q != 0) leaf(q, stack[level], out);
      return;
    }
    stack[level + 1] = stack[level];
    dfs(i + 1, level0, q, stack, out);
    stack[level + 1] = stack[level];
    kernels::or_accumulate(stack[level + 1], rows_[i]);
    dfs(i + 1, level0, q | (JumpMask{1} << (free_[i] - 1)), stack, out);
  }

  void leaf(JumpMask q, const std::vector<std::uint64_t>& acc, std::vector<Hit>& out) const {
    std::uint64_t good = kernels::uniform_groups(acc, static_cast<std::size_t>(m_));
    while (good) {
      const int g = std::countr_zero(good);
      good &= good - 1;
      std::uint64_t d0 = acc[static_cast<std::size_t>(g) * static_cast<std::size_t>(m_)];
      JumpMask s = 0;
      while (d0) {
        const int r = std::countr_zero(d0);
        d0 &= d0 - 1;
        s |= JumpMask{1} << (reduce_residue(r, n_) - 1);
      }
      if (s != q) out.push_back({q, s, g + 1});
    }
  }

  int n_;
  int m_;
  int ts_;
  std::vector<int> free_;
  std::vector<int> multiples_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

ScanReport full_scan(int n, const ScanOptions& options) {
  if (n < 2) throw Error(ErrorCode::InvalidParams, "scan order must be at least 2");
  if (n > 54) throw Error(ErrorCode::Intractable, "full scans are limited to n <= 54, got " + std::to_string(n));

  ScanReport report;
  report.n = n;
  report.convention =
      "pair: unordered {R, S} with R != S, |R| = |S| >= 3, S = theta_{n,m,t}(R) for some valid m and t, "
      "S outside the Adam orbit of R; class: connected component of the pair relation; "
      "triple: class of exactly three sets; mod_adam identifies sets in one Adam orbit; "
      "mod_complement identifies an object with its complement in [1, n/2]";

  const UnitTable unit_table(n);
  std::map<PairKey, Witness> pairs;

  for (int m : cube_divisor_moduli(n)) {
    const ModulusScan scan(n, m);
    const std::size_t free = scan.free_count();
    if (free >= 64 || (std::uint64_t{1} << free) > options.ceiling)
      throw Error(ErrorCode::Intractable,
                  "subset space 2^" + std::to_string(free) + " exceeds the configured ceiling");

    const std::size_t fixed = std::min<std::size_t>(free, 8);
    const std::size_t chunks = std::size_t{1} << fixed;
    std::vector<std::vector<std::pair<PairKey, Witness>>> found(chunks);
    const auto& mult = scan.multiples();
    // Subsets of the multiples, indexed compactly, and for each unit the
    // subsets it fixes.
    const std::size_t subsets = std::size_t{1} << mult.size();
    std::vector<JumpMask> sub_mask(subsets, 0);
    for (std::size_t c = 1; c < subsets; ++c)
      for (std::size_t b = 0; b < mult.size(); ++b)
        if ((c >> b) & 1U) sub_mask[c] |= JumpMask{1} << (mult[b] - 1);
    const std::size_t words = (subsets + 63) / 64;
    std::vector<std::vector<std::uint64_t>> fixes(unit_table.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t u = 0; u < unit_table.size(); ++u)
      for (std::size_t c = 1; c < subsets; ++c)
        if (unit_table.multiply(sub_mask[c], u) == sub_mask[c]) fixes[u][c / 64] |= std::uint64_t{1} << (c % 64);

    parallel_for(chunks, options.workers, [&](std::size_t c) {
      std::vector<ModulusScan::Hit> hits;
      scan.run_chunk(c, fixed, hits);
      auto& sink = found[c];
      std::vector<std::uint64_t> adam(words);
      for (const auto& h : hits) {
        if (std::popcount(h.q) != std::popcount(h.s)) continue;
        // Units preserve divisibility by m, so x R = S splits into x Q = S_Q
        // and x M = M.
        std::fill(adam.begin(), adam.end(), 0);
        for (std::size_t u = 0; u < unit_table.size(); ++u)
          if (unit_table.multiply(h.q, u) == h.s) kernels::or_accumulate(adam, fixes[u]);
        for (std::size_t k = subsets - 1; k >= 1; --k) {
          if ((adam[k / 64] >> (k % 64)) & 1U) continue;
          const JumpMask sub = sub_mask[k];
          const JumpMask r = h.q | sub;
          const JumpMask s = h.s | sub;
          const int size = std::popcount(r);
          if (size < 3) continue;
          if (options.max_jump_count && size > *options.max_jump_count) continue;
          sink.emplace_back(pair_key(r, s), Witness{m, h.t, r > s});
        }
      }
    });
    for (const auto& chunk : found)
      for (const auto& [key, w] : chunk) pairs.emplace(key, w);
  }

  const JumpMask full = n / 2 >= 32 ? ~JumpMask{0} : (JumpMask{1} << (n / 2)) - 1;
  auto lo = [](PairKey k) { return static_cast<JumpMask>(k >> 32); };
  auto hi = [](PairKey k) { return static_cast<JumpMask>(k & 0xffffffffU); };

  std::set<PairKey> pairs_adam, pairs_comp;
  std::map<JumpMask, std::size_t> index;
  for (const auto& [key, w] : pairs) {
    const JumpMask a = lo(key), b = hi(key);
    pairs_adam.insert(pair_key(unit_table.orbit_min(a), unit_table.orbit_min(b)));
    pairs_comp.insert(std::min(key, pair_key(full ^ a, full ^ b)));
    index.emplace(a, 0);
    index.emplace(b, 0);
    ConnectionSet ra = set_of(n, a), rb = set_of(n, b);
    if (rb < ra)
      report.pairs.push_back({std::move(rb), std::move(ra), w.m, w.t, !w.reversed});
    else
      report.pairs.push_back({std::move(ra), std::move(rb), w.m, w.t, w.reversed});
  }
  std::sort(report.pairs.begin(), report.pairs.end(),
            [](const ScanPair& x, const ScanPair& y) { return std::tie(x.r, x.s) < std::tie(y.r, y.s); });
  std::size_t next = 0;
  std::vector<JumpMask> vertices;
  for (auto& [mask, i] : index) {
    i = next++;
    vertices.push_back(mask);
  }
  DisjointSets ds(vertices.size());
  for (const auto& [key, w] : pairs) ds.unite(index[lo(key)], index[hi(key)]);

  std::map<std::size_t, std::vector<JumpMask>> by_root;
  for (std::size_t i = 0; i < vertices.size(); ++i) by_root[ds.find(i)].push_back(vertices[i]);
  std::set<std::vector<JumpMask>> classes;
  for (auto& [root, members] : by_root) classes.insert(members);  // members already sorted

  auto adam_key = [&](const std::vector<JumpMask>& cls) {
    std::vector<JumpMask> key;
    for (JumpMask x : cls) key.push_back(unit_table.orbit_min(x));
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    return key;
  };
  auto comp_key = [&](const std::vector<JumpMask>& cls) {
    std::vector<JumpMask> c;
    for (JumpMask x : cls) c.push_back(full ^ x);
    std::sort(c.begin(), c.end());
    return std::min(cls, c);
  };

  std::set<std::vector<JumpMask>> cls_adam, cls_comp, tri_adam, tri_comp;
  std::uint64_t triples = 0;
  std::map<std::vector<JumpMask>, const std::vector<JumpMask>*> first_of_adam;
  for (const auto& cls : classes) {
    auto ak = adam_key(cls);
    cls_adam.insert(ak);
    cls_comp.insert(comp_key(cls));
    first_of_adam.emplace(ak, &cls);
    if (cls.size() == 3) {
      ++triples;
      tri_adam.insert(ak);
      tri_comp.insert(comp_key(cls));
    }
  }

  report.counts = {
      {"pairs_raw", pairs.size()},
      {"pairs_mod_adam", pairs_adam.size()},
      {"pairs_mod_complement", pairs_comp.size()},
      {"classes_raw", classes.size()},
      {"classes_mod_adam", cls_adam.size()},
      {"classes_mod_complement", cls_comp.size()},
      {"triples_raw", triples},
      {"triples_mod_adam", tri_adam.size()},
      {"triples_mod_complement", tri_comp.size()},
  };

  // First pair (in key order) of every class, by the class's smallest member.
  std::map<JumpMask, std::pair<PairKey, Witness>> first_pair;
  for (const auto& [key, w] : pairs) first_pair.emplace(vertices[ds.find(index[lo(key)])], std::pair{key, w});

  for (const auto& cls : classes) {
    if (first_of_adam.at(adam_key(cls)) != &cls) continue;
    TupleRecord rec;
    for (JumpMask x : cls) rec.members.push_back(set_of(n, x));
    rec.classification.orbit = adam_orbit(rec.members.front());
    const auto& [key, w] = first_pair.at(cls.front());
    ConnectionSet src = set_of(n, w.reversed ? hi(key) : lo(key));
    ConnectionSet dst = set_of(n, w.reversed ? lo(key) : hi(key));
    if (src == rec.members.front()) rec.theta_images.emplace(w.t, dst);
    rec.classification.verdict = Type2{w.m, w.t, {std::move(src), std::move(dst)}};
    report.records.push_back(std::move(rec));
  }
  return report;
}

// ---------------------------------------------------------------- generators

std::pair<ConnectionSet, ConnectionSet> generate_a17c(int k, int s) {
  const int odd = 2 * s - 1;
  if (k < 2 || odd < 1 || odd > 2 * k - 1)
    throw Error(ErrorCode::InvalidParams,
                "need k >= 2 and 1 <= 2s-1 <= 2k-1, got k=" + std::to_string(k) + " s=" + std::to_string(s));
  if (k == odd) throw Error(ErrorCode::DegeneratePair, "k = 2s-1 gives the same graph twice");
  const int n = 8 * k;
  return {reflexive_reduce({2, odd, 4 * k - odd}, n), reflexive_reduce({2, 2 * k - odd, 2 * k + odd}, n)};
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

ConnectionSet generate_c1(int base, int p, int x, int y, int i) {
  if (base < 1) throw Error(ErrorCode::InvalidParams, "base must be positive");
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidParams, "p must be an odd prime");
  if (i < 1 || i > p) throw Error(ErrorCode::InvalidIndex, "i=" + std::to_string(i) + " outside [1, p]");
  if (x < 1 || x > p - 1) throw Error(ErrorCode::InvalidParams, "x outside [1, p-1]");
  if (y < 0 || y > base * p - 1) throw Error(ErrorCode::InvalidParams, "y outside [0, base*p-1]");
  const long long xy = x + static_cast<long long>(y) * p;
  if (xy < 1 || xy > static_cast<long long>(base) * p * p - 1)
    throw Error(ErrorCode::InvalidParams, "x+yp outside [1, base*p^2-1]");

  const long long np2 = static_cast<long long>(base) * p * p;
  const long long np3 = np2 * p;
  const long long d = static_cast<long long>(i - 1) * x * p * base + xy;
  std::vector<long long> raw{p, d};
  for (int j = 1; j <= p - 1; ++j) {
    raw.push_back(j * np2 - d);
    raw.push_back(j * np2 + d);
  }
  raw.push_back(np3 - d);
  raw.push_back(np3 - p);
  return reflexive_reduce(std::span<const long long>(raw), static_cast<int>(np3));
}

std::vector<ConnectionSet> generate_c1_tuple(int base, int p, int x, int y) {
  std::vector<ConnectionSet> out;
  for (int i = 1; i <= p; ++i) out.push_back(generate_c1(base, p, x, y, i));
  return out;
}

// ---------------------------------------------------------------- probes

std::vector<ProbeEntry> probe_open_problems(std::uint64_t budget, int workers) {
  std::vector<ProbeEntry> entries;
  for (int s : {3, 9, 15, 21}) {
    entries.push_back({"op1(a)", s, reflexive_reduce({1, s, 23}, 48), reflexive_reduce({s, 11, 13}, 48), {}});
    entries.push_back({"op1(b)", s, reflexive_reduce({5, s, 19}, 48), reflexive_reduce({s, 7, 17}, 48), {}});
  }
  for (int s : {2, 4, 8, 10, 14, 16, 20, 22, 26}) {
    const ConnectionSet a = reflexive_reduce({1, s, 17, 19}, 54);
    const ConnectionSet b = reflexive_reduce({5, s, 13, 23}, 54);
    const ConnectionSet c = reflexive_reduce({s, 7, 11, 25}, 54);
    entries.push_back({"op5", s, a, b, {}});
    entries.push_back({"op5", s, a, c, {}});
    entries.push_back({"op5", s, b, c, {}});
  }
  parallel_for(entries.size(), workers, [&](std::size_t i) {
    entries[i].verdict = isomorphic(CirculantGraph(entries[i].a), CirculantGraph(entries[i].b), budget);
  });
  return entries;
}

}  // namespace circiso
