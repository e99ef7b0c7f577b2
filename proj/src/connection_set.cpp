#include "circiso/connection_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "circiso/error.hpp"

namespace circiso {

int reduce_residue(long long r, int n) {
  long long m = r % n;
  if (m < 0) m += n;
  return static_cast<int>(std::min<long long>(m, n - m));
}

bool ConnectionSet::contains(int jump) const {
  return std::binary_search(jumps_.begin(), jumps_.end(), jump);
}

bool ConnectionSet::has_half_jump() const {
  return n_ % 2 == 0 && !jumps_.empty() && jumps_.back() == n_ / 2;
}

std::uint64_t ConnectionSet::mask() const {
  if (n_ > 127) throw Error(ErrorCode::InvalidParams, "mask() needs n <= 127");
  std::uint64_t bits = 0;
  for (int j : jumps_) bits |= std::uint64_t{1} << j;
  return bits;
}

ConnectionSet ConnectionSet::from_mask(int n, std::uint64_t mask) {
  if (n < 2 || n > 127) throw Error(ErrorCode::InvalidParams, "from_mask needs 2 <= n <= 127");
  std::vector<long long> raw;
  for (int j = 1; j <= n / 2; ++j)
    if (mask >> j & 1U) raw.push_back(j);
  if ((mask & 1U) != 0 || (n / 2 < 63 && (mask >> (n / 2 + 1)) != 0))
    throw Error(ErrorCode::InvalidParams, "mask has bits outside [1, n/2]");
  return reflexive_reduce(raw, n);
}

ConnectionSet ConnectionSet::with(std::span<const int> extra) const {
  std::vector<long long> raw(jumps_.begin(), jumps_.end());
  raw.insert(raw.end(), extra.begin(), extra.end());
  return reflexive_reduce(raw, n_);
}

ConnectionSet ConnectionSet::without(std::span<const int> removed) const {
  std::vector<int> kept;
  for (int j : jumps_)
    if (std::find(removed.begin(), removed.end(), j) == removed.end()) kept.push_back(j);
  return ConnectionSet(n_, std::move(kept));
}

ConnectionSet ConnectionSet::complement() const {
  std::vector<int> rest;
  for (int j = 1; j <= n_ / 2; ++j)
    if (!contains(j)) rest.push_back(j);
  return ConnectionSet(n_, std::move(rest));
}

std::strong_ordering operator<=>(const ConnectionSet& a, const ConnectionSet& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.jumps_.begin(), a.jumps_.end(),
                                                b.jumps_.begin(), b.jumps_.end());
}

ConnectionSet reflexive_reduce(std::span<const long long> raw, int n) {
  if (n < 2) throw Error(ErrorCode::InvalidParams, "order must be at least 2");
  std::vector<int> jumps;
  jumps.reserve(raw.size());
  for (long long r : raw) {
    int j = reduce_residue(r, n);
    if (j == 0) throw Error(ErrorCode::ZeroJump, std::to_string(r) + " is 0 mod " + std::to_string(n));
    jumps.push_back(j);
  }
  std::sort(jumps.begin(), jumps.end());
  jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
  return ConnectionSet(n, std::move(jumps));
}

ConnectionSet reflexive_reduce(std::initializer_list<long long> raw, int n) {
  return reflexive_reduce(std::span<const long long>(raw.begin(), raw.size()), n);
}

ConnectionSet reflexive_reduce(std::span<const int> raw, int n) {
  std::vector<long long> wide(raw.begin(), raw.end());
  return reflexive_reduce(wide, n);
}

std::vector<int> full_difference_set(const ConnectionSet& cs) {
  const int n = cs.order();
  std::vector<int> out;
  out.reserve(2 * cs.size());
  for (int s : cs.jumps()) {
    out.push_back(s);
    if (n - s != s) out.push_back(n - s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_text(const ConnectionSet& cs) {
  std::string out = "C" + std::to_string(cs.order()) + "(";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(cs.jumps()[i]);
  }
  out += ')';
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  bool done() {
    skip_ws();
    return pos_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, "'" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ConnectionSet parse_connection_set(std::string_view text) {
  Cursor cur(text);
  if (!cur.eat('C')) cur.fail("expected 'C'");
  long long n = cur.integer();
  if (n < 2 || n > 1'000'000) cur.fail("order out of range");
  if (!cur.eat('(')) cur.fail("expected '('");
  std::vector<long long> raw;
  if (!cur.eat(')')) {
    do {
      raw.push_back(cur.integer());
    } while (cur.eat(','));
    if (!cur.eat(')')) cur.fail("expected ',' or ')'");
  }
  if (!cur.done()) cur.fail("trailing characters");
  return reflexive_reduce(raw, static_cast<int>(n));
}

}  // namespace circiso
