#ifndef PDR_KERNELS_HPP
#define PDR_KERNELS_HPP

// Scan kernels shared by the search and reconfiguration code. Each kernel
// comes in two flavors with identical results: pdr::par (OpenMP, ranges
// partitioned across workers, per-chunk buffers merged in chunk order) and
// pdr::seq (plain loops, kept as the reference the tests compare against).

#include <atomic>
#include <cstdint>
#include <queue>
#include <vector>

#include "pdr/core.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pdr {

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_worker_count(int w) {
#ifdef _OPENMP
  if (w > 0) omp_set_num_threads(w);
#else
  (void)w;
#endif
}

// binomial coefficient saturated at 2^62 so cardinality scans can test
// feasibility without overflow
inline std::uint64_t comb64(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  const std::uint64_t cap = std::uint64_t{1} << 62;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > cap / (std::uint64_t)(n - k + i)) return cap;
    r = r * (n - k + i) / i;
  }
  return r < cap ? r : cap;
}

// r-th k-subset of {0..n-1} in ascending numeric (colexicographic) order
inline Mask combo_unrank(int n, int k, std::uint64_t r) {
  Mask m = 0;
  while (k > 0) {
    int c = k - 1;
    while (c + 1 < n && comb64(c + 1, k) <= r) ++c;
    m |= bit(c);
    r -= comb64(c, k);
    n = c;
    --k;
  }
  return m;
}

// compressed sparse row adjacency for reconfiguration-scale graphs
struct Csr {
  std::vector<std::uint32_t> off;  // size order+1
  std::vector<std::uint32_t> nbr;
  std::size_t order() const { return off.empty() ? 0 : off.size() - 1; }
  std::size_t size() const { return nbr.size() / 2; }
  int degree(std::size_t v) const { return int(off[v + 1] - off[v]); }
};

namespace detail {

inline int bfs_ecc(const Csr& g, std::uint32_t src, std::vector<int>& dist,
                   std::vector<std::uint32_t>& fifo) {
  std::fill(dist.begin(), dist.end(), -1);
  fifo.clear();
  fifo.push_back(src);
  dist[src] = 0;
  int ecc = 0;
  for (std::size_t head = 0; head < fifo.size(); ++head) {
    std::uint32_t v = fifo[head];
    for (std::uint32_t i = g.off[v]; i < g.off[v + 1]; ++i) {
      std::uint32_t w = g.nbr[i];
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        if (dist[w] > ecc) ecc = dist[w];
        fifo.push_back(w);
      }
    }
  }
  return ecc;
}

}  // namespace detail

namespace seq {

template <class Pred>
std::vector<Mask> filter_masks(Mask lo, Mask hi, Pred&& pred) {
  std::vector<Mask> out;
  for (Mask m = lo; m < hi; ++m)
    if (pred(m)) out.push_back(m);
  return out;
}

template <class Pred>
std::uint64_t count_masks(Mask lo, Mask hi, Pred&& pred) {
  std::uint64_t c = 0;
  for (Mask m = lo; m < hi; ++m)
    if (pred(m)) ++c;
  return c;
}

template <class Pred>
bool any_mask(Mask lo, Mask hi, Pred&& pred) {
  for (Mask m = lo; m < hi; ++m)
    if (pred(m)) return true;
  return false;
}

// all k-subsets of {0..n-1} satisfying pred, ascending numeric order
template <class Pred>
std::vector<Mask> filter_combos(int n, int k, Pred&& pred) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    if (pred(Mask{0})) out.push_back(0);
    return out;
  }
  std::uint64_t total = comb64(n, k);
  Mask m = full_mask(k);
  for (std::uint64_t i = 0; i < total; ++i, m = gosper_next(m))
    if (pred(m)) out.push_back(m);
  return out;
}

template <class Pred>
bool any_combo(int n, int k, Pred&& pred) {
  if (k < 0 || k > n) return false;
  if (k == 0) return pred(Mask{0});
  std::uint64_t total = comb64(n, k);
  Mask m = full_mask(k);
  for (std::uint64_t i = 0; i < total; ++i, m = gosper_next(m))
    if (pred(m)) return true;
  return false;
}

template <class Fn>
void for_each_combo(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  std::uint64_t total = comb64(n, k);
  Mask m = full_mask(k);
  for (std::uint64_t i = 0; i < total; ++i, m = gosper_next(m)) fn(m);
}

// eccentricity of every vertex within its component
inline std::vector<int> eccentricities(const Csr& g) {
  std::size_t n = g.order();
  std::vector<int> ecc(n, 0), dist(n);
  std::vector<std::uint32_t> fifo;
  fifo.reserve(n);
  for (std::size_t v = 0; v < n; ++v)
    ecc[v] = detail::bfs_ecc(g, (std::uint32_t)v, dist, fifo);
  return ecc;
}

}  // namespace seq

namespace par {

namespace detail {

inline int chunks_for(std::uint64_t span) {
  int w = worker_count();
  std::uint64_t c = (std::uint64_t)w * 8;
  if (c > span) c = span;
  return c ? (int)c : 1;
}

}  // namespace detail

template <class Pred>
std::vector<Mask> filter_masks(Mask lo, Mask hi, Pred&& pred) {
  if (hi <= lo) return {};
  int nc = detail::chunks_for(hi - lo);
  std::vector<std::vector<Mask>> buf(nc);
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < nc; ++c) {
    Mask a = lo + (hi - lo) * c / nc;
    Mask b = lo + (hi - lo) * (c + 1) / nc;
    for (Mask m = a; m < b; ++m)
      if (pred(m)) buf[c].push_back(m);
  }
  std::vector<Mask> out;
  for (auto& v : buf) out.insert(out.end(), v.begin(), v.end());
  return out;
}

template <class Pred>
std::uint64_t count_masks(Mask lo, Mask hi, Pred&& pred) {
  if (hi <= lo) return 0;
  int nc = detail::chunks_for(hi - lo);
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (int c = 0; c < nc; ++c) {
    Mask a = lo + (hi - lo) * c / nc;
    Mask b = lo + (hi - lo) * (c + 1) / nc;
    for (Mask m = a; m < b; ++m)
      if (pred(m)) ++total;
  }
  return total;
}

template <class Pred>
bool any_mask(Mask lo, Mask hi, Pred&& pred) {
  if (hi <= lo) return false;
  int nc = detail::chunks_for(hi - lo);
  std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < nc; ++c) {
    if (found.load(std::memory_order_relaxed)) continue;
    Mask a = lo + (hi - lo) * c / nc;
    Mask b = lo + (hi - lo) * (c + 1) / nc;
    for (Mask m = a; m < b; ++m) {
      if (pred(m)) {
        found.store(true, std::memory_order_relaxed);
        break;
      }
      if (!(m & 0xfff) && found.load(std::memory_order_relaxed)) break;
    }
  }
  return found.load();
}

template <class Pred>
std::vector<Mask> filter_combos(int n, int k, Pred&& pred) {
  if (k < 0 || k > n) return {};
  if (k == 0) return seq::filter_combos(n, k, pred);
  std::uint64_t total = comb64(n, k);
  int nc = detail::chunks_for(total);
  std::vector<std::vector<Mask>> buf(nc);
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < nc; ++c) {
    std::uint64_t a = total * c / nc, b = total * (c + 1) / nc;
    Mask m = combo_unrank(n, k, a);
    for (std::uint64_t i = a; i < b; ++i, m = gosper_next(m))
      if (pred(m)) buf[c].push_back(m);
  }
  std::vector<Mask> out;
  for (auto& v : buf) out.insert(out.end(), v.begin(), v.end());
  return out;
}

template <class Pred>
bool any_combo(int n, int k, Pred&& pred) {
  if (k < 0 || k > n) return false;
  if (k == 0) return pred(Mask{0});
  std::uint64_t total = comb64(n, k);
  int nc = detail::chunks_for(total);
  std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < nc; ++c) {
    if (found.load(std::memory_order_relaxed)) continue;
    std::uint64_t a = total * c / nc, b = total * (c + 1) / nc;
    Mask m = combo_unrank(n, k, a);
    for (std::uint64_t i = a; i < b; ++i, m = gosper_next(m)) {
      if (pred(m)) {
        found.store(true, std::memory_order_relaxed);
        break;
      }
    }
  }
  return found.load();
}

// fn must tolerate any call order; writes to disjoint slots are the intended use
template <class Fn>
void for_each_combo(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  std::uint64_t total = comb64(n, k);
  int nc = detail::chunks_for(total);
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < nc; ++c) {
    std::uint64_t a = total * c / nc, b = total * (c + 1) / nc;
    Mask m = combo_unrank(n, k, a);
    for (std::uint64_t i = a; i < b; ++i, m = gosper_next(m)) fn(m);
  }
}

inline std::vector<int> eccentricities(const Csr& g) {
  std::size_t n = g.order();
  std::vector<int> ecc(n, 0);
#pragma omp parallel
  {
    std::vector<int> dist(n);
    std::vector<std::uint32_t> fifo;
    fifo.reserve(n);
#pragma omp for schedule(dynamic, 64)
    for (long long v = 0; v < (long long)n; ++v)
      ecc[v] = pdr::detail::bfs_ecc(g, (std::uint32_t)v, dist, fifo);
  }
  return ecc;
}

}  // namespace par
}  // namespace pdr

#endif
