#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "kgraphic/oracle.hpp"
#include "kgraphic/seqcore.hpp"

namespace kgtest {

// Every nonincreasing vector of length n with entries in [lo, hi].
inline void for_each_nonincreasing(int n, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int top) {
    if (static_cast<int>(cur.size()) == n) {
      fn(cur);
      return;
    }
    for (int v = top; v >= lo; --v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(hi);
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

// Graph on n vertices from a bitmask over the pairs (0,1),(0,2),...,(n-2,n-1).
inline kgraphic::SimpleGraph graph_from_mask(int n, std::uint64_t mask) {
  kgraphic::SimpleGraph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

// Degree vector of the graph encoded by mask, without building a SimpleGraph.
inline std::vector<int> mask_degrees(int n, std::uint64_t mask) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
      }
    }
  }
  return deg;
}

// Sorted (nonincreasing, zeros kept) degree sequences of all labeled graphs on n vertices.
inline std::set<std::vector<int>> realizable_by_brute_force(int n) {
  std::set<std::vector<int>> out;
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t m = 0; m < total; ++m) {
    auto d = mask_degrees(n, m);
    std::sort(d.begin(), d.end(), std::greater<>());
    out.insert(std::move(d));
  }
  return out;
}

// K_{2,s} subgraph test by explicit choice of the two-vertex side and an s-subset.
inline bool brute_contains_k2s(const kgraphic::SimpleGraph& g, int s) {
  const int n = g.n();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> others;
      for (int v = 0; v < n; ++v) {
        if (v != a && v != b) others.push_back(v);
      }
      const int m = static_cast<int>(others.size());
      if (m < s) continue;
      std::vector<bool> pick(static_cast<std::size_t>(m), false);
      std::fill(pick.begin(), pick.begin() + s, true);
      do {
        bool all = true;
        for (int i = 0; i < m && all; ++i) {
          if (pick[static_cast<std::size_t>(i)]) {
            const int v = others[static_cast<std::size_t>(i)];
            all = g.has_edge(a, v) && g.has_edge(b, v);
          }
        }
        if (all) return true;
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  return false;
}

}  // namespace kgtest
