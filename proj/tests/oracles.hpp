#ifndef PDR_TESTS_ORACLES_HPP
#define PDR_TESTS_ORACLES_HPP

// Slow reference implementations kept deliberately independent of the
// library internals: adjacency lists and int vectors instead of bitmasks,
// one forcing step at a time instead of simultaneous rounds, and plain
// permutation search instead of refinement. Used to cross-check the fast
// paths in the unit tests.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "pdr/graph.hpp"
#include "pdr/properties.hpp"

namespace oracle {

inline std::vector<std::vector<int>> adj_lists(const pdr::Graph& g) {
  std::vector<std::vector<int>> a(g.n());
  for (auto [u, v] : g.edges()) {
    a[u].push_back(v);
    a[v].push_back(u);
  }
  return a;
}

// power domination / zero forcing / domination decided with a sequential
// scheduler: apply any single applicable force, rescan from scratch
inline bool slow_is_x_set(const pdr::Graph& g, const std::vector<int>& s,
                          pdr::PropertyKind kind) {
  auto adj = adj_lists(g);
  std::set<int> obs(s.begin(), s.end());
  if (kind != pdr::PropertyKind::ZeroForcing)
    for (int v : s)
      for (int w : adj[v]) obs.insert(w);
  if (kind == pdr::PropertyKind::Domination) return (int)obs.size() == g.n();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v : obs) {
      std::vector<int> dark;
      for (int w : adj[v])
        if (!obs.count(w)) dark.push_back(w);
      if (dark.size() == 1) {
        obs.insert(dark[0]);
        moved = true;
        break;  // one force per pass, order independence is the point
      }
    }
  }
  return (int)obs.size() == g.n();
}

inline bool slow_is_x_set(const pdr::Graph& g, pdr::Mask m,
                          pdr::PropertyKind kind) {
  std::vector<int> s;
  for (pdr::Mask r = m; r; r &= r - 1) s.push_back(pdr::lowbit(r));
  return slow_is_x_set(g, s, kind);
}

inline int slow_x_number(const pdr::Graph& g, pdr::PropertyKind kind) {
  for (int k = 1; k <= g.n(); ++k) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (slow_is_x_set(g, idx, kind)) return k;
      int i = k - 1;
      while (i >= 0 && idx[i] == g.n() - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return g.n();
}

// minimum vertex covers by exhaustive subset scan over int sets
inline std::vector<pdr::Mask> slow_min_vertex_covers(const pdr::Graph& g) {
  auto edges = g.edges();
  std::vector<pdr::Mask> best;
  int best_card = g.n() + 1;
  for (pdr::Mask s = 0; s < (pdr::Mask{1} << g.n()); ++s) {
    bool covers = true;
    for (auto [u, v] : edges)
      if (!((s >> u) & 1) && !((s >> v) & 1)) {
        covers = false;
        break;
      }
    if (!covers) continue;
    int c = pdr::popcnt(s);
    if (c < best_card) {
      best_card = c;
      best.clear();
    }
    if (c == best_card) best.push_back(s);
  }
  return best;
}

// canonical form by trying every relabeling; usable up to n = 8 or so
inline std::vector<pdr::Mask> slow_canonical(const pdr::Graph& g) {
  int n = g.n();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<pdr::Mask> best;
  do {
    std::vector<pdr::Mask> rows(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a[p[i]][p[j]]) rows[i] |= pdr::bit(j);
    if (best.empty() || rows < best) best = rows;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline bool slow_isomorphic(const pdr::Graph& g, const pdr::Graph& h) {
  if (g.n() != h.n() || g.ecount() != h.ecount()) return false;
  return slow_canonical(g) == slow_canonical(h);
}

}  // namespace oracle

#endif
