#include "pdr/iso.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_set>

#include "pdr/kernels.hpp"
#include "pdr/recon.hpp"

namespace pdr {

std::string CanonicalForm::hex() const {
  std::string s = std::to_string(n) + ":";
  if (bits.empty()) return s + "0";
  char buf[17];
  for (Mask w : bits) {
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)w);
    s += buf;
  }
  return s;
}

Bitmat to_bitmat(const Graph& g) {
  Bitmat b(g.n());
  for (auto [u, v] : g.edges()) b.set_edge(u, v);
  return b;
}

Bitmat cartesian_product(const Bitmat& g, const Bitmat& h) {
  long long n = (long long)g.n() * h.n();
  if (n > 8192)
    throw Error(Errc::OrderOutOfRange,
                "product order " + std::to_string(n) + " exceeds dense cap 8192");
  Bitmat p((int)n);
  for (int a1 = 0; a1 < g.n(); ++a1)
    for (int b1 = 0; b1 < h.n(); ++b1) {
      int u = a1 * h.n() + b1;
      for (int b2 = b1 + 1; b2 < h.n(); ++b2)
        if (h.get(b1, b2)) p.set_edge(u, a1 * h.n() + b2);
      for (int a2 = a1 + 1; a2 < g.n(); ++a2)
        if (g.get(a1, a2)) p.set_edge(u, a2 * h.n() + b1);
    }
  return p;
}

namespace {

// Individualization-refinement search. The ordered partition lives in
// lab/ptn (lab a vertex permutation, ptn[i]==0 closing a cell at i); the
// canonical form is the least packed adjacency triangle over all leaves,
// with branches on interchangeable twins collapsed.
struct Canon {
  const Bitmat& g;
  int n, words;
  std::vector<Mask> wmask;         // splitter bitset, reused
  std::vector<std::pair<int, int>> bucket;  // (count, vertex) sort scratch
  std::vector<Mask> leafbits;
  std::vector<Mask> best;
  std::vector<int> best_lab;
  bool have_best = false;

  explicit Canon(const Bitmat& gg)
      : g(gg), n(gg.n()), words(gg.words()), wmask(gg.words(), 0) {}

  int cell_end(const std::vector<int>& ptn, int s) const {
    while (ptn[s] == 1) ++s;
    return s + 1;
  }

  void refine(std::vector<int>& lab, std::vector<int>& ptn,
              std::vector<int>& active) {
    for (std::size_t head = 0; head < active.size(); ++head) {
      int ws = active[head];
      int we = cell_end(ptn, ws);
      std::fill(wmask.begin(), wmask.end(), 0);
      for (int p = ws; p < we; ++p)
        wmask[lab[p] >> 6] |= Mask{1} << (lab[p] & 63);

      for (int s = 0; s < n;) {
        int e = cell_end(ptn, s);
        if (e - s > 1) {
          bucket.clear();
          bool differ = false;
          for (int p = s; p < e; ++p) {
            const Mask* row = g.row(lab[p]);
            int c = 0;
            for (int w = 0; w < words; ++w) c += popcnt(row[w] & wmask[w]);
            if (!bucket.empty() && c != bucket.front().first) differ = true;
            bucket.emplace_back(c, lab[p]);
          }
          if (differ) {
            std::sort(bucket.begin(), bucket.end());
            for (int i = 0; i < e - s; ++i) {
              lab[s + i] = bucket[i].second;
              bool last = i + 1 == e - s ||
                          bucket[i + 1].first != bucket[i].first;
              ptn[s + i] = last ? 0 : 1;
              if (i == 0 || bucket[i - 1].first != bucket[i].first)
                active.push_back(s + i);
            }
          }
        }
        s = e;
      }
    }
    active.clear();
  }

  bool twins(int u, int v) const {
    const Mask* ru = g.row(u);
    const Mask* rv = g.row(v);
    for (int w = 0; w < words; ++w) {
      Mask clear = 0;
      if ((u >> 6) == w) clear |= Mask{1} << (u & 63);
      if ((v >> 6) == w) clear |= Mask{1} << (v & 63);
      if ((ru[w] & ~clear) != (rv[w] & ~clear)) return false;
    }
    return true;
  }

  void leaf(const std::vector<int>& lab) {
    std::size_t m = (std::size_t)n * (n - 1) / 2;
    leafbits.assign((m + 63) / 64, 0);
    std::size_t idx = 0;
    for (int p = 0; p < n; ++p) {
      const Mask* row = g.row(lab[p]);
      for (int q = p + 1; q < n; ++q, ++idx)
        if ((row[lab[q] >> 6] >> (lab[q] & 63)) & 1)
          leafbits[idx >> 6] |= Mask{1} << (idx & 63);
    }
    if (!have_best || leafbits < best) {
      best = leafbits;
      best_lab = lab;
      have_best = true;
    }
  }

  void descend(std::vector<int> lab, std::vector<int> ptn,
               std::vector<int> active) {
    refine(lab, ptn, active);
    int target = -1, te = -1;
    for (int s = 0; s < n;) {
      int e = cell_end(ptn, s);
      if (e - s > 1) {
        target = s;
        te = e;
        break;
      }
      s = e;
    }
    if (target < 0) {
      leaf(lab);
      return;
    }
    std::vector<int> branched;
    for (int i = target; i < te; ++i) {
      int v = lab[i];
      bool dup = false;
      for (int u : branched)
        if (twins(u, v)) {
          dup = true;
          break;
        }
      if (dup) continue;
      branched.push_back(v);
      std::vector<int> clab = lab, cptn = ptn;
      std::swap(clab[target], clab[i]);
      cptn[target] = 0;
      std::vector<int> cactive{target};
      if (target + 1 < te) cactive.push_back(target + 1);
      descend(std::move(clab), std::move(cptn), std::move(cactive));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Bitmat& g) {
  int n = g.n();
  if (n > kCanonicalOrderCap)
    throw Error(Errc::TooLargeForCanonical,
                "order " + std::to_string(n) + " past canonical cap " +
                    std::to_string(kCanonicalOrderCap));
  CanonicalForm f;
  f.n = n;
  if (n == 0) return f;
  Canon c(g);
  std::vector<int> lab(n), ptn(n, 1);
  for (int i = 0; i < n; ++i) lab[i] = i;
  ptn[n - 1] = 0;
  c.descend(std::move(lab), std::move(ptn), {0});
  f.bits = std::move(c.best);
  f.relabel.assign(n, 0);
  for (int p = 0; p < n; ++p) f.relabel[c.best_lab[p]] = p;
  return f;
}

CanonicalForm canonical_form(const Graph& g) {
  return canonical_form(to_bitmat(g));
}

std::optional<std::vector<int>> are_isomorphic(const Bitmat& g,
                                               const Bitmat& h) {
  if (g.n() != h.n()) return std::nullopt;
  int n = g.n();
  std::vector<int> dg(n), dh(n);
  for (int v = 0; v < n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  {
    auto sg = dg, sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return std::nullopt;
  }
  CanonicalForm cg = canonical_form(g), ch = canonical_form(h);
  if (cg != ch) return std::nullopt;
  std::vector<int> invh(n);
  for (int v = 0; v < n; ++v) invh[ch.relabel[v]] = v;
  std::vector<int> map(n);
  for (int v = 0; v < n; ++v) map[v] = invh[cg.relabel[v]];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.get(i, j) != h.get(map[i], map[j])) return std::nullopt;
  return map;
}

std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h) {
  return are_isomorphic(to_bitmat(g), to_bitmat(h));
}

namespace {

Graph graph_from_edge_mask(int n, Mask emask, const std::string& name) {
  std::vector<std::pair<int, int>> edges;
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++idx)
      if ((emask >> idx) & 1) edges.push_back({i, j});
  return Graph(n, edges, name);
}

}  // namespace

void enumerate_graphs(int n, const EnumOptions& opt,
                      const std::function<void(const Graph&)>& sink) {
  if (n < 1 || n > 7)
    throw Error(Errc::OrderTooLargeForEnumeration,
                "enumeration handles orders 1..7, got " + std::to_string(n));
  int m = n * (n - 1) / 2;
  Mask total = Mask{1} << m;

  // pair bit layout matches graph_from_edge_mask: row-major upper triangle
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});

  auto keep = [&](Mask emask, Mask* adj) {
    for (int v = 0; v < n; ++v) adj[v] = 0;
    for (int b = 0; b < m; ++b)
      if ((emask >> b) & 1) {
        adj[pairs[b].first] |= bit(pairs[b].second);
        adj[pairs[b].second] |= bit(pairs[b].first);
      }
    if (opt.no_isolated)
      for (int v = 0; v < n; ++v)
        if (!adj[v]) return false;
    if (opt.connected) {
      Mask seen = 1, frontier = 1;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj[lowbit(f)];
        frontier = next & ~seen;
        seen |= next;
      }
      if (seen != full_mask(n)) return false;
    }
    return true;
  };

  if (!opt.dedup) {
    Mask adj[8];
    for (Mask emask = 0; emask < total; ++emask) {
      if (!keep(emask, adj)) continue;
      sink(graph_from_edge_mask(n, emask, ""));
    }
    return;
  }

  int nc = worker_count() * 4;
  if ((Mask)nc > total) nc = (int)total;
  std::vector<std::vector<Mask>> chunk_keys(nc);
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < nc; ++c) {
    std::unordered_set<Mask> seen;
    Mask adj[8];
    Mask a = total * c / nc, b = total * (c + 1) / nc;
    for (Mask emask = a; emask < b; ++emask) {
      if (!keep(emask, adj)) continue;
      Bitmat bm(n);
      for (int b2 = 0; b2 < m; ++b2)
        if ((emask >> b2) & 1) bm.set_edge(pairs[b2].first, pairs[b2].second);
      CanonicalForm f = canonical_form(bm);
      seen.insert(f.bits.empty() ? 0 : f.bits[0]);
    }
    chunk_keys[c].assign(seen.begin(), seen.end());
  }
  std::unordered_set<Mask> all;
  for (auto& v : chunk_keys) all.insert(v.begin(), v.end());
  std::vector<Mask> keys(all.begin(), all.end());
  std::sort(keys.begin(), keys.end());
  char buf[32];
  for (Mask key : keys) {
    std::snprintf(buf, sizeof buf, "g%d_%llx", n, (unsigned long long)key);
    sink(graph_from_edge_mask(n, key, buf));
  }
}

std::vector<Graph> enumerate_graphs(int n, const EnumOptions& opt) {
  std::vector<Graph> out;
  enumerate_graphs(n, opt, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> uniqueness_search(const Graph& target, int n,
                                     PropertyKind kind) {
  ReconGraph t = build_tar(target, kind);
  std::vector<int> tdeg(t.verts.size());
  for (std::size_t v = 0; v < t.verts.size(); ++v) tdeg[v] = t.adj.degree(v);
  std::sort(tdeg.begin(), tdeg.end());
  CanonicalForm tc = canonical_form(to_bitmat(t));

  std::vector<Graph> matches;
  EnumOptions opt;
  opt.no_isolated = true;
  enumerate_graphs(n, opt, [&](const Graph& h) {
    ReconGraph r = build_tar(h, kind);
    if (r.verts.size() != t.verts.size() || r.adj.size() != t.adj.size())
      return;
    std::vector<int> rdeg(r.verts.size());
    for (std::size_t v = 0; v < r.verts.size(); ++v) rdeg[v] = r.adj.degree(v);
    std::sort(rdeg.begin(), rdeg.end());
    if (rdeg != tdeg) return;
    if (canonical_form(to_bitmat(r)) == tc) matches.push_back(h);
  });
  return matches;
}

}  // namespace pdr
