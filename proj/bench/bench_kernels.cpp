// Timing comparison between the serial reference kernels and the parallel
// lane. Not a ctest target; run manually when touching the kernels.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "pdr/graph.hpp"
#include "pdr/kernels.hpp"
#include "pdr/properties.hpp"
#include "pdr/recon.hpp"

using namespace pdr;

namespace {

double time_ms(const std::function<void()>& fn, int repeats) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    if (ms < best) best = ms;
  }
  return best;
}

void row(const char* label, double seq_ms, double par_ms) {
  std::printf("%-34s %10.2f %10.2f %8.2fx\n", label, seq_ms, par_ms,
              par_ms > 0 ? seq_ms / par_ms : 0.0);
}

}  // namespace

int main() {
  std::printf("%-34s %10s %10s %9s   (%d workers)\n", "kernel", "seq ms",
              "par ms", "speedup", worker_count());

  {
    auto pred = [](Mask m) { return popcnt(m) % 3 == 1; };
    volatile std::size_t sink = 0;
    double s = time_ms([&] { sink = seq::count_masks(1, Mask{1} << 22, pred); }, 3);
    double p = time_ms([&] { sink = par::count_masks(1, Mask{1} << 22, pred); }, 3);
    row("count_masks 2^22", s, p);
  }
  {
    Graph g = generate("paper_Gn:4");
    XTable t = x_table(g, PropertyKind::PowerDomination);
    auto pred = [&](Mask m) { return t.isx[m] != 0; };
    volatile std::size_t sink = 0;
    double s = time_ms([&] { sink = seq::filter_masks(1, Mask{1} << g.n(), pred).size(); }, 3);
    double p = time_ms([&] { sink = par::filter_masks(1, Mask{1} << g.n(), pred).size(); }, 3);
    row("filter_masks membership 2^19", s, p);
  }
  {
    Graph g = generate("grid:4,6");
    auto pred = [&](Mask m) { return is_x_set(g, m, PropertyKind::PowerDomination); };
    volatile std::size_t sink = 0;
    double s = time_ms([&] { sink = seq::filter_combos(24, 3, pred).size(); }, 3);
    double p = time_ms([&] { sink = par::filter_combos(24, 3, pred).size(); }, 3);
    row("filter_combos C(24,3) propagate", s, p);
  }
  {
    ReconGraph t = build_tar(generate("star:12"), PropertyKind::PowerDomination);
    volatile int sink = 0;
    double s = time_ms([&] { sink = seq::eccentricities(t.adj).back(); }, 3);
    double p = time_ms([&] { sink = par::eccentricities(t.adj).back(); }, 3);
    row("eccentricities 4109-vertex tar", s, p);
  }
  {
    Graph g = generate("paper_Gn:4");
    double s = 0, p = 0;
    p = time_ms([&] { build_tar(g, PropertyKind::PowerDomination); }, 1);
    std::printf("%-34s %10s %10.2f\n", "build_tar order-19 base", "-", p);
    (void)s;
  }
  return 0;
}
