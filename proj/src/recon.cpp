#include "pdr/recon.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <unordered_map>

#include "json.hpp"
#include "pdr/iso.hpp"

namespace pdr {

std::size_t recon_cap() {
  if (const char* env = std::getenv("PDRECON_RECON_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return (std::size_t)v;
  }
  return kReconCapDefault;
}

std::size_t ReconGraph::index_of(Mask m) const {
  auto it = std::lower_bound(verts.begin(), verts.end(), m);
  if (it == verts.end() || *it != m) return npos;
  return (std::size_t)(it - verts.begin());
}

namespace {

// adjacency between X-sets: one-vertex additions looked up from the sorted
// vertex list; each pair is generated once from its subset side
Csr tar_edges(const std::vector<Mask>& verts, int n, int k) {
  std::size_t order = verts.size();
  std::vector<std::uint32_t> deg(order + 1, 0);
  auto index_of = [&](Mask m) -> std::size_t {
    auto it = std::lower_bound(verts.begin(), verts.end(), m);
    if (it == verts.end() || *it != m) return ReconGraph::npos;
    return (std::size_t)(it - verts.begin());
  };

  // up-neighbors per vertex, recorded once and mirrored when building rows
  std::vector<std::vector<std::uint32_t>> up(order);
#pragma omp parallel for schedule(dynamic, 1024)
  for (long long i = 0; i < (long long)order; ++i) {
    Mask s = verts[i];
    if (popcnt(s) >= k) continue;
    for (Mask rest = full_mask(n) & ~s; rest; rest &= rest - 1) {
      Mask t = s | (rest & -rest);
      std::size_t j = index_of(t);
      if (j != ReconGraph::npos) up[i].push_back((std::uint32_t)j);
    }
  }

  Csr g;
  g.off.assign(order + 1, 0);
  for (std::size_t i = 0; i < order; ++i) {
    deg[i] += (std::uint32_t)up[i].size();
    for (std::uint32_t j : up[i]) ++deg[j];
  }
  for (std::size_t i = 0; i < order; ++i) g.off[i + 1] = g.off[i] + deg[i];
  g.nbr.assign(g.off[order], 0);
  std::vector<std::uint32_t> fill(order, 0);
  for (std::size_t i = 0; i < order; ++i)
    for (std::uint32_t j : up[i]) {
      g.nbr[g.off[i] + fill[i]++] = j;
      g.nbr[g.off[j] + fill[j]++] = (std::uint32_t)i;
    }
  // rows come out sorted: up-neighbors of i are visited in ascending mask
  // order, and down-neighbors j < i arrive in ascending i order; but the two
  // ranges interleave, so sort each row once
#pragma omp parallel for schedule(dynamic, 1024)
  for (long long i = 0; i < (long long)order; ++i)
    std::sort(g.nbr.begin() + g.off[i], g.nbr.begin() + g.off[i + 1]);
  return g;
}

std::size_t effective_cap(std::size_t cap) { return cap ? cap : recon_cap(); }

}  // namespace

ReconGraph build_tar(const Graph& g, PropertyKind kind, int k, std::size_t cap) {
  cap = effective_cap(cap);
  if (g.n() > kExhaustiveOrderCap)
    throw Error(Errc::ReconTooLarge,
                "TAR needs the 2^n membership table, order capped at " +
                    std::to_string(kExhaustiveOrderCap));
  XTable t = x_table(g, kind);
  int x = g.n();
  for (Mask m = 1; m < (Mask{1} << g.n()); ++m)
    if (t.isx[m]) x = std::min(x, popcnt(m));

  if (k == kFull) k = g.n();
  if (k < x)
    throw Error(Errc::KBelowXNumber, "k=" + std::to_string(k) +
                                         " below x-number " + std::to_string(x));
  ReconGraph r;
  r.base = g;
  r.kind = kind;
  r.model = k == g.n() ? ReconModel::TarFull : ReconModel::TarK;
  r.k = k;
  r.verts = par::filter_masks(1, Mask{1} << g.n(), [&](Mask m) {
    return t.isx[m] && popcnt(m) <= k;
  });
  if (r.verts.size() > cap)
    throw Error(Errc::ReconTooLarge,
                "TAR order " + std::to_string(r.verts.size()) + " exceeds cap " +
                    std::to_string(cap));
  r.adj = tar_edges(r.verts, g.n(), k);
  return r;
}

ReconGraph build_tj(const Graph& g, PropertyKind kind, std::size_t cap) {
  cap = effective_cap(cap);
  ReconGraph r;
  r.base = g;
  r.kind = kind;
  r.model = ReconModel::TJ;
  SetFamily f = minimum_x_sets(g, kind);
  r.k = f.sets.empty() ? 0 : popcnt(f.sets.front());
  r.verts = std::move(f.sets);
  if (r.verts.size() > cap)
    throw Error(Errc::ReconTooLarge,
                "TJ order " + std::to_string(r.verts.size()) + " exceeds cap " +
                    std::to_string(cap));

  // sets adjacent iff they differ by one swap, i.e. share a (k-1)-subset
  std::size_t order = r.verts.size();
  std::unordered_map<Mask, std::vector<std::uint32_t>> groups;
  for (std::size_t i = 0; i < order; ++i)
    for (Mask s = r.verts[i]; s; s &= s - 1)
      groups[r.verts[i] ^ (s & -s)].push_back((std::uint32_t)i);

  std::vector<std::vector<std::uint32_t>> rows(order);
  for (auto& [key, members] : groups)
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        rows[members[a]].push_back(members[b]);
        rows[members[b]].push_back(members[a]);
      }
  r.adj.off.assign(order + 1, 0);
  for (std::size_t i = 0; i < order; ++i) {
    std::sort(rows[i].begin(), rows[i].end());
    r.adj.off[i + 1] = r.adj.off[i] + (std::uint32_t)rows[i].size();
  }
  r.adj.nbr.reserve(r.adj.off[order]);
  for (auto& row : rows)
    r.adj.nbr.insert(r.adj.nbr.end(), row.begin(), row.end());
  return r;
}

ReconMetrics recon_metrics(const ReconGraph& r) {
  ReconMetrics m;
  std::size_t n = r.verts.size();
  m.order = n;
  m.size = r.adj.size();
  if (n == 0) return m;
  m.min_degree = r.adj.degree(0);
  for (std::size_t v = 0; v < n; ++v) {
    int d = r.adj.degree(v);
    m.max_degree = std::max(m.max_degree, d);
    m.min_degree = std::min(m.min_degree, d);
  }

  // components and 2-coloring in one sweep
  std::vector<int> color(n, -1);
  std::vector<std::uint32_t> fifo;
  m.bipartite = true;
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    ++m.components;
    color[s] = 0;
    fifo.clear();
    fifo.push_back((std::uint32_t)s);
    for (std::size_t h = 0; h < fifo.size(); ++h) {
      std::uint32_t v = fifo[h];
      for (std::uint32_t i = r.adj.off[v]; i < r.adj.off[v + 1]; ++i) {
        std::uint32_t w = r.adj.nbr[i];
        if (color[w] < 0) {
          color[w] = color[v] ^ 1;
          fifo.push_back(w);
        } else if (color[w] == color[v]) {
          m.bipartite = false;
        }
      }
    }
  }

  if (m.components == 1) {
    if (n <= (std::size_t{1} << 14)) {
      auto ecc = par::eccentricities(r.adj);
      m.diameter = *std::max_element(ecc.begin(), ecc.end());
    } else {
      // sample a spread of sources; lower bound flagged as sampled
      std::vector<int> dist(n);
      std::vector<std::uint32_t> q;
      q.reserve(n);
      int best = 0;
      for (std::size_t s = 0; s < n; s += n / 64 + 1)
        best = std::max(best, detail::bfs_ecc(r.adj, (std::uint32_t)s, dist, q));
      m.diameter = best;
      m.diameter_sampled = true;
    }
  }
  return m;
}

std::pair<int, int> tar_distance(const ReconGraph& r, Mask a, Mask b) {
  std::size_t ia = r.index_of(a), ib = r.index_of(b);
  if (ia == ReconGraph::npos || ib == ReconGraph::npos)
    throw Error(Errc::NotAVertex, "set is not a vertex of the recon graph");
  int sym = popcnt(a ^ b);
  if (ia == ib) return {0, sym};
  std::vector<int> dist(r.verts.size(), -1);
  std::vector<std::uint32_t> fifo{(std::uint32_t)ia};
  dist[ia] = 0;
  for (std::size_t h = 0; h < fifo.size(); ++h) {
    std::uint32_t v = fifo[h];
    for (std::uint32_t i = r.adj.off[v]; i < r.adj.off[v + 1]; ++i) {
      std::uint32_t w = r.adj.nbr[i];
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        if (w == ib) return {dist[w], sym};
        fifo.push_back(w);
      }
    }
  }
  return {-1, sym};
}

Thresholds connectivity_thresholds(const Graph& g, PropertyKind kind,
                                   std::size_t cap) {
  ReconGraph full = build_tar(g, kind, kFull, cap);
  int n = g.n();
  int x = n;
  for (Mask m : full.verts) x = std::min(x, popcnt(m));

  std::vector<int> card(full.verts.size());
  for (std::size_t i = 0; i < card.size(); ++i) card[i] = popcnt(full.verts[i]);

  auto connected_at = [&](int k) {
    // union-find over edges whose larger endpoint still fits the budget
    std::vector<std::uint32_t> parent(full.verts.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = (std::uint32_t)i;
    std::function<std::uint32_t(std::uint32_t)> find =
        [&](std::uint32_t v) -> std::uint32_t {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    for (std::size_t v = 0; v < full.verts.size(); ++v) {
      if (card[v] > k) continue;
      for (std::uint32_t i = full.adj.off[v]; i < full.adj.off[v + 1]; ++i) {
        std::uint32_t w = full.adj.nbr[i];
        if (card[w] > k) continue;
        parent[find((std::uint32_t)v)] = find(w);
      }
    }
    std::uint32_t root = ~0u;
    for (std::size_t v = 0; v < full.verts.size(); ++v) {
      if (card[v] > k) continue;
      std::uint32_t rv = find((std::uint32_t)v);
      if (root == ~0u) root = rv;
      if (rv != root) return false;
    }
    return true;
  };

  Thresholds th;
  th.under_x0 = n;
  th.x0 = x;
  int last_disconnected = x - 1;
  bool seen_connected = false;
  for (int k = x; k <= n; ++k) {
    if (connected_at(k)) {
      if (!seen_connected) {
        th.under_x0 = k;
        seen_connected = true;
      }
    } else {
      last_disconnected = k;
    }
  }
  th.x0 = last_disconnected + 1;
  if (th.x0 < x) th.x0 = x;
  return th;
}

int hypercube_dimension(const Graph& g, PropertyKind kind, DimMode mode) {
  if (mode == DimMode::Formula) return g.n() - x_number(g, kind);

  ReconGraph full = build_tar(g, kind);
  if (full.verts.size() > (std::size_t{1} << 12))
    throw Error(Errc::SearchTooLarge, "embedding search capped at order 2^12");
  int x = g.n();
  for (Mask m : full.verts) x = std::min(x, popcnt(m));
  if (g.n() - x > 4)
    throw Error(Errc::SearchTooLarge,
                "embedding search capped at target dimension 4");

  // an induced t-cube in a subset lattice is always a subcube: a base set
  // plus all subsets of t free coordinates, every one of them an X-set
  auto embeds = [&](int t) {
    if (t == 0) return !full.verts.empty();
    std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic, 256)
    for (long long i = 0; i < (long long)full.verts.size(); ++i) {
      if (found.load(std::memory_order_relaxed)) continue;
      Mask base = full.verts[i];
      Mask free = full_mask(g.n()) & ~base;
      bool hit = seq::any_combo(popcnt(free), t, [&](Mask packed) {
        // unpack chosen free coordinates
        Mask coords = 0;
        Mask rest = free;
        for (Mask p = packed; p; p &= p - 1) {
          int want = lowbit(p);
          Mask r2 = rest;
          for (int idx = 0; idx < want; ++idx) r2 &= r2 - 1;
          coords |= r2 & -r2;
        }
        for (Mask sub = coords;; sub = (sub - 1) & coords) {
          if (full.index_of(base | sub) == ReconGraph::npos) return false;
          if (sub == 0) break;
        }
        return true;
      });
      if (hit) found.store(true, std::memory_order_relaxed);
    }
    return found.load();
  };

  int best = 0;
  for (int t = 1; t <= 4 && t <= g.n(); ++t) {
    if (embeds(t))
      best = t;
    else
      break;  // smaller cubes embed inside larger ones
  }
  return best;
}

Bitmat to_bitmat(const ReconGraph& r) {
  if (r.verts.size() > (std::size_t)kCanonicalOrderCap)
    throw Error(Errc::TooLargeForCanonical,
                "recon graph too large for dense matrix");
  Bitmat b((int)r.verts.size());
  for (std::size_t v = 0; v < r.verts.size(); ++v)
    for (std::uint32_t i = r.adj.off[v]; i < r.adj.off[v + 1]; ++i)
      if ((std::size_t)r.adj.nbr[i] > v) b.set_edge((int)v, (int)r.adj.nbr[i]);
  return b;
}

std::string to_json(const ReconGraph& r) {
  nlohmann::ordered_json j;
  j["base"] = nlohmann::ordered_json::parse(pdr::to_json(r.base));
  j["model"] = r.model == ReconModel::TJ
                   ? "tj"
                   : (r.model == ReconModel::TarFull ? "tar_full" : "tar_k");
  j["kind"] = kind_name(r.kind);
  j["k"] = r.k;
  auto& verts = j["verts"] = nlohmann::json::array();
  for (Mask m : r.verts) {
    auto& s = verts.emplace_back(nlohmann::json::array());
    for (Mask b = m; b; b &= b - 1) s.push_back(lowbit(b));
  }
  auto& edges = j["edges"] = nlohmann::json::array();
  for (std::size_t v = 0; v < r.verts.size(); ++v)
    for (std::uint32_t i = r.adj.off[v]; i < r.adj.off[v + 1]; ++i)
      if ((std::size_t)r.adj.nbr[i] > v)
        edges.push_back({(std::uint32_t)v, r.adj.nbr[i]});
  return j.dump();
}

std::string to_dot(const ReconGraph& r) {
  auto label = [&](Mask m) {
    std::string s = "{";
    bool first = true;
    for (Mask b = m; b; b &= b - 1) {
      if (!first) s += ",";
      s += std::to_string(lowbit(b));
      first = false;
    }
    return s + "}";
  };
  std::string out = "graph recon {\n";
  for (std::size_t v = 0; v < r.verts.size(); ++v)
    out += "  n" + std::to_string(v) + " [label=\"" + label(r.verts[v]) + "\"];\n";
  for (std::size_t v = 0; v < r.verts.size(); ++v)
    for (std::uint32_t i = r.adj.off[v]; i < r.adj.off[v + 1]; ++i)
      if ((std::size_t)r.adj.nbr[i] > v)
        out += "  n" + std::to_string(v) + " -- n" + std::to_string(r.adj.nbr[i]) +
               ";\n";
  out += "}\n";
  return out;
}

}  // namespace pdr
