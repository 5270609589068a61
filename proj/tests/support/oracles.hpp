#pragma once

// Test-side oracles, kept independent of the library's implementation paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "finord/poset.hpp"

namespace oracles {

// Counts of labelled posets on n elements (OEIS A001035).
inline constexpr long kLabelledPosetCounts[] = {1, 1, 3, 19, 219, 4231};

// Reflexive-transitive closure by naive saturation: keep adding pairs that
// two existing pairs force, until nothing changes.
inline std::set<std::pair<int, int>> naive_closure(int n,
                                                   std::vector<std::pair<int, int>> pairs) {
  std::set<std::pair<int, int>> rel(pairs.begin(), pairs.end());
  for (int i = 0; i < n; ++i) rel.insert({i, i});
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<int, int>> fresh;
    for (const auto& [a, b] : rel)
      for (const auto& [c, d] : rel)
        if (b == c && !rel.count({a, d})) fresh.push_back({a, d});
    for (const auto& p : fresh) changed |= rel.insert(p).second;
  }
  return rel;
}

// All subsets of {0..n-1} that are down-closed, found by filtering every
// subset against the raw order relation.
inline std::vector<std::uint64_t> naive_down_sets(const finord::FinitePoset& p) {
  std::vector<std::uint64_t> out;
  const int n = p.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool closed = true;
    for (int x = 0; x < n && closed; ++x)
      for (int y = 0; y < n && closed; ++y)
        if ((mask >> x & 1) && p.leq(y, x) && !(mask >> y & 1)) closed = false;
    if (closed) out.push_back(mask);
  }
  return out;
}

// Least upper bound computed directly from the order, without tables:
// scan the upper bounds and pick the one below all others. Returns -1 when
// there is none.
inline int naive_lub(const finord::FinitePoset& p, int x, int y) {
  for (int z = 0; z < p.size(); ++z) {
    if (!p.leq(x, z) || !p.leq(y, z)) continue;
    bool least = true;
    for (int w = 0; w < p.size() && least; ++w)
      if (p.leq(x, w) && p.leq(y, w) && !p.leq(z, w)) least = false;
    if (least) return z;
  }
  return -1;
}

inline int naive_glb(const finord::FinitePoset& p, int x, int y) {
  for (int z = 0; z < p.size(); ++z) {
    if (!p.leq(z, x) || !p.leq(z, y)) continue;
    bool greatest = true;
    for (int w = 0; w < p.size() && greatest; ++w)
      if (p.leq(w, x) && p.leq(w, y) && !p.leq(w, z)) greatest = false;
    if (greatest) return z;
  }
  return -1;
}

inline std::vector<int> sorted(std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace oracles
