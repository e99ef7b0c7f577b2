#pragma once
// The order-54 triple families, exhaustive Type-2 scans for small orders, the
// two closed-form generators and the open-problem probes.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circiso/classify.hpp"

namespace circiso {

/// CIRCIO_WORKERS when set to a positive integer, else the hardware thread
/// count (at least 1).
int worker_count();

/// Runs fn(i) for i in [0, count) on `workers` threads. fn must only write to
/// per-index state; the first exception thrown is rethrown after joining.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

struct FamilySpec {
  char name = 'a';
  int n = 54;
  ConnectionSet base;
  std::vector<int> pool;  // {3, 6, ..., 27}
};

FamilySpec family_a();  // base {1, 17, 19}
FamilySpec family_b();  // base {2, 16, 20}
/// 'a' or 'b'; anything else throws InvalidParams.
FamilySpec family(char name);

/// Nonempty subsets of the pool ordered by size, then lexicographically.
std::vector<std::vector<int>> ordered_subsets(const std::vector<int>& pool);

/// One record per nonempty subset M: members R = base + M and its images at
/// t = 2 and t = 4 under m = 3, classified as a triple.
std::vector<TupleRecord> enumerate_family(const FamilySpec& spec, int workers = worker_count());

struct ScanOptions {
  std::optional<int> max_jump_count;
  /// Largest number of non-multiple subsets enumerated per modulus.
  std::uint64_t ceiling = std::uint64_t{1} << 24;
  int workers = worker_count();
};

struct ScanPair {
  ConnectionSet r;  // r < s
  ConnectionSet s;
  int m = 0;
  int t = 0;  // theta_{n,m,t}(r) = s, or the reverse direction when reversed
  bool reversed = false;
};

struct ScanReport {
  int n = 0;
  std::string convention;
  /// pairs_raw, pairs_mod_adam, pairs_mod_complement, classes_raw,
  /// classes_mod_adam, classes_mod_complement, triples_raw, ...
  std::map<std::string, std::uint64_t> counts;
  /// Every Type-2 pair, sorted.
  std::vector<ScanPair> pairs;
  /// One record per theta class modulo Adam equivalence.
  std::vector<TupleRecord> records;
};

/// Throws Intractable when n > 54 or the subset space exceeds the ceiling.
ScanReport full_scan(int n, const ScanOptions& options = {});

/// Pair over order 8k: R = {2, 2s-1, 4k-(2s-1)},
/// S = {2, 2k-(2s-1), 2k+2s-1}. Throws DegeneratePair when k = 2s-1 and
/// InvalidParams outside k >= 2, 1 <= 2s-1 <= 2k-1.
std::pair<ConnectionSet, ConnectionSet> generate_a17c(int k, int s);

/// R_i over order base*p^3 with d = (i-1)*x*p*base + x + y*p. Throws
/// InvalidIndex unless 1 <= i <= p, InvalidParams for the other ranges.
ConnectionSet generate_c1(int base, int p, int x, int y, int i);
/// R_1 .. R_p.
std::vector<ConnectionSet> generate_c1_tuple(int base, int p, int x, int y);

struct ProbeEntry {
  std::string problem;  // "op1(a)", "op1(b)", "op5"
  int s = 0;
  ConnectionSet a;
  ConnectionSet b;
  IsoVerdict verdict;
};

std::vector<ProbeEntry> probe_open_problems(std::uint64_t budget = kDefaultIsoBudget,
                                            int workers = worker_count());

}  // namespace circiso
