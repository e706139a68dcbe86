// Small shared helpers: union-find over names, joins, odometers.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace fincat {

using StrMap = std::map<std::string, std::string>;
using PairKey = std::pair<std::string, std::string>;
using CompTable = std::map<PairKey, std::string>;

namespace detail {

// Union-find keyed by string, root = lexicographically least member.
// Keeping the least name at the root makes class names canonical.
class NamedUnionFind {
 public:
  void add(const std::string& x) { parent_.emplace(x, x); }

  const std::string& find(const std::string& x) const {
    const std::string* cur = &x;
    while (true) {
      const std::string& p = parent_.at(*cur);
      if (p == *cur) return parent_.find(*cur)->first;
      cur = &p;
    }
  }

  bool unite(const std::string& a, const std::string& b) {
    std::string ra = find(a);
    std::string rb = find(b);
    if (ra == rb) return false;
    if (rb < ra) std::swap(ra, rb);
    parent_[rb] = ra;  // lesser name wins
    return true;
  }

  bool same(const std::string& a, const std::string& b) const {
    return find(a) == find(b);
  }

 private:
  std::map<std::string, std::string> parent_;
};

// Plain index-based union-find with path compression.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Merges so that the smaller index becomes the root.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
};

inline std::string join(const std::vector<std::string>& parts,
                        const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

// Visits every assignment slot -> option, options indexed per slot.
// Assignments are produced in lexicographic order of the index tuple,
// which is what makes enumeration order reproducible everywhere.
inline void for_each_assignment(
    const std::vector<std::size_t>& option_counts,
    const std::function<void(const std::vector<std::size_t>&)>& visit) {
  for (std::size_t c : option_counts)
    if (c == 0) return;
  std::vector<std::size_t> pick(option_counts.size(), 0);
  while (true) {
    visit(pick);
    std::size_t i = pick.size();
    while (i > 0) {
      --i;
      if (++pick[i] < option_counts[i]) break;
      pick[i] = 0;
      if (i == 0) return;
    }
    if (option_counts.empty()) return;
  }
}

// a^b with saturation at UINT64_MAX.
inline std::uint64_t saturating_pow(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    if (a != 0 && r > UINT64_MAX / a) return UINT64_MAX;
    r *= a;
  }
  return r;
}

}  // namespace detail
}  // namespace fincat
