#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pdr/iso.hpp"
#include "pdr/properties.hpp"

using namespace pdr;

namespace {
Graph kab(int a, int b) {
  return generate("complete_bipartite:" + std::to_string(a) + "," +
                  std::to_string(b));
}

Graph rnd_graph(std::mt19937_64& rng, int n, int percent) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((int)(rng() % 100) < percent) e.push_back({i, j});
  return Graph(n, e);
}
}  // namespace

TEST_CASE("propagation traces are layered fixpoints") {
  // three legs of length two hanging off a center
  Graph spider(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
  ObservationTrace t = propagate(spider, bit(0));
  CHECK(t.success);
  CHECK(t.rounds == 2);
  CHECK(t.layers.front() == bit(0));
  CHECK(t.layers[1] == spider.closed_nbhd(bit(0)));
  CHECK(t.layers.back() == spider.vmask());
  CHECK(t.new_per_round[1] == (bit(4) | bit(5) | bit(6)));  // simultaneous
  for (std::size_t i = 0; i + 1 < t.layers.size(); ++i) {
    CHECK((t.layers[i] & ~t.layers[i + 1]) == 0);
    CHECK(t.layers[i] != t.layers[i + 1]);
    CHECK(t.new_per_round[i] == (t.layers[i + 1] & ~t.layers[i]));
  }

  ObservationTrace p = propagate(generate("path:5"), bit(0));
  CHECK(p.success);
  CHECK(p.rounds == 4);

  // zero forcing starts bare: no neighborhood round
  ObservationTrace z =
      propagate(generate("path:3"), bit(0), PropertyKind::ZeroForcing);
  CHECK(z.layers[0] == bit(0));
  CHECK(z.layers[1] == (bit(0) | bit(1)));
  CHECK(z.success);

  // domination is just the neighborhood test
  ObservationTrace d =
      propagate(generate("path:4"), bit(1), PropertyKind::Domination);
  CHECK_FALSE(d.success);
  CHECK(d.rounds == 1);
}

TEST_CASE("known numbers for the basic families") {
  CHECK(x_number(generate("path:9"), PropertyKind::PowerDomination) == 1);
  CHECK(x_number(generate("cycle:9"), PropertyKind::PowerDomination) == 1);
  CHECK(x_number(generate("complete:9"), PropertyKind::PowerDomination) == 1);
  CHECK(x_number(generate("wheel:9"), PropertyKind::PowerDomination) == 1);
  CHECK(x_number(generate("complete_bipartite:2,5"),
                 PropertyKind::PowerDomination) == 1);
  CHECK(x_number(generate("complete_bipartite:3,3"),
                 PropertyKind::PowerDomination) == 2);

  CHECK(x_number(generate("path:9"), PropertyKind::ZeroForcing) == 1);
  CHECK(x_number(generate("cycle:9"), PropertyKind::ZeroForcing) == 2);
  CHECK(x_number(generate("complete:6"), PropertyKind::ZeroForcing) == 5);
  CHECK(x_number(generate("hypercube:3"), PropertyKind::ZeroForcing) == 4);

  CHECK(x_number(generate("complete:7"), PropertyKind::Domination) == 1);
  CHECK(x_number(generate("path:7"), PropertyKind::Domination) == 3);
  CHECK(x_number(generate("cycle:6"), PropertyKind::Domination) == 2);
  CHECK(x_number(generate("grid:5,12"), PropertyKind::PowerDomination) == 2);
}

TEST_CASE("minimum and minimal families on small graphs") {
  // the star only observes everything from its center
  SetFamily star_min = minimum_x_sets(generate("star:3"),
                                      PropertyKind::PowerDomination);
  CHECK(star_min.sets == std::vector<Mask>{bit(0)});
  SetFamily star_all = minimal_x_sets(generate("star:3"),
                                      PropertyKind::PowerDomination);
  CHECK(star_all.sets.size() == 4);  // center or any two leaves
  CHECK(upper_x(generate("star:3"), PropertyKind::PowerDomination) == 2);

  // every vertex of an odd cycle works alone
  SetFamily c5 = minimal_x_sets(generate("cycle:5"),
                                PropertyKind::PowerDomination);
  CHECK(c5.sets.size() == 5);
  for (Mask m : c5.sets) CHECK(popcnt(m) == 1);

  CHECK(upper_x(kab(3, 5), PropertyKind::PowerDomination) == 4);
  CHECK(upper_x(generate("star:4"), PropertyKind::PowerDomination) == 3);

  SetFamily k33 = minimum_x_sets(kab(3, 3), PropertyKind::PowerDomination);
  CHECK(k33.sets.size() == 15);  // every 2-subset of the 6 vertices
  SetFamily k34 = minimum_x_sets(kab(3, 4), PropertyKind::PowerDomination);
  CHECK(k34.sets.size() == 15);  // 12 crossing pairs plus 3 inside the triple
  CHECK(minimal_x_sets(kab(3, 4), PropertyKind::PowerDomination).sets.size() ==
        19);
}

TEST_CASE("minimal census values for the pinned families") {
  for (int t : {3, 4, 5}) {
    SetFamily a = minimal_x_sets(kab(2, t), PropertyKind::PowerDomination);
    SetFamily b = minimal_x_sets(generate("k2t_edge:" + std::to_string(t)),
                                 PropertyKind::PowerDomination);
    CHECK(a.sets == b.sets);
    CHECK((int)a.sets.size() == t + 2);
  }
  CHECK(minimal_x_sets(generate("star_edge:4"), PropertyKind::PowerDomination)
            .sets.size() == 5);
  CHECK(minimal_x_sets(generate("star_pendant:3"),
                       PropertyKind::PowerDomination)
            .sets.size() == 6);
}

TEST_CASE("hub-and-blocks minimum set census") {
  Graph g3 = generate("paper_Gn:3");
  CHECK(x_number(g3, PropertyKind::PowerDomination) == 2);
  CHECK(upper_x(g3, PropertyKind::PowerDomination) == 2);
  CHECK(minimum_x_sets(g3, PropertyKind::PowerDomination).sets.size() == 28);

  Graph g4 = generate("paper_Gn:4");
  CHECK(x_number(g4, PropertyKind::PowerDomination) == 3);
  CHECK(minimum_x_sets(g4, PropertyKind::PowerDomination).sets.size() == 257);
}

TEST_CASE("corona constructions have power-of-three census") {
  const char* base[] = {"complete:1", "complete:2", "path:3"};
  std::size_t want = 3;
  for (int d = 1; d <= 3; ++d) {
    Graph g = generate("corona:2:" + std::string(base[d - 1]));
    SetFamily f = minimum_x_sets(g, PropertyKind::PowerDomination);
    CHECK(f.sets.size() == want);
    want *= 3;
  }
}

TEST_CASE("grid minimum sets avoid singletons and use both halves") {
  Graph g = generate("grid:5,12");
  SetFamily f = minimum_x_sets(g, PropertyKind::PowerDomination);
  CHECK(f.sets.size() == 158);
  for (Mask m : f.sets) CHECK(popcnt(m) == 2);
}

TEST_CASE("slow scheduler agrees with the layered propagation") {
  // exhaustive over every graph class up to order 5, every subset, all kinds
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_graphs(n, EnumOptions{})) {
      for (Mask m = 0; m < (Mask{1} << n); ++m)
        for (PropertyKind k : {PropertyKind::Domination,
                               PropertyKind::PowerDomination,
                               PropertyKind::ZeroForcing}) {
          CAPTURE(g.name());
          CAPTURE(m);
          CHECK(is_x_set(g, m, k) == oracle::slow_is_x_set(g, m, k));
        }
    }
  }
  // random spot checks at a size where bit tricks could drift
  std::mt19937_64 rng(7);
  for (int i = 0; i < 25; ++i) {
    Graph g = rnd_graph(rng, 9, 15 + (int)(rng() % 60));
    for (PropertyKind k : {PropertyKind::Domination,
                           PropertyKind::PowerDomination,
                           PropertyKind::ZeroForcing}) {
      CHECK(x_number(g, k) == oracle::slow_x_number(g, k));
      for (int j = 0; j < 40; ++j) {
        Mask m = rng() & full_mask(9);
        CHECK(is_x_set(g, m, k) == oracle::slow_is_x_set(g, m, k));
      }
    }
  }
}

TEST_CASE("membership table equals direct testing and closure holds") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10; ++i) {
    int n = 4 + (int)(rng() % 7);
    Graph g = rnd_graph(rng, n, 20 + (int)(rng() % 50));
    for (PropertyKind k : {PropertyKind::Domination,
                           PropertyKind::PowerDomination,
                           PropertyKind::ZeroForcing}) {
      XTable t = x_table(g, k);
      for (Mask m = 0; m < (Mask{1} << n); ++m) {
        CHECK(t(m) == is_x_set(g, m, k));
        if (t(m) && m != g.vmask()) {
          // supersets stay in
          Mask out = g.vmask() & ~m;
          Mask one = out & (~out + 1);
          CHECK(t(m | one));
        }
      }
    }
  }
}

TEST_CASE("minimality agrees with the slow oracle") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, EnumOptions{}))
      for (PropertyKind k : {PropertyKind::PowerDomination,
                             PropertyKind::ZeroForcing}) {
        SetFamily f = minimal_x_sets(g, k);
        std::vector<Mask> slow;
        for (Mask m = 1; m < (Mask{1} << n); ++m) {
          if (!oracle::slow_is_x_set(g, m, k)) continue;
          bool minimal = true;
          for (Mask t = m; t; t &= t - 1)
            if (oracle::slow_is_x_set(g, m ^ (t & -t), k)) {
              minimal = false;
              break;
            }
          if (minimal) slow.push_back(m);
        }
        CHECK(f.sets == slow);
      }
}

TEST_CASE("axioms validate on assorted graphs") {
  for (const char* s : {"path:6", "cycle:5", "complete_bipartite:3,4",
                        "wheel:6", "star_pendant:4"})
    for (PropertyKind k : {PropertyKind::Domination,
                           PropertyKind::PowerDomination,
                           PropertyKind::ZeroForcing}) {
      AxiomReport r = validate_axioms(generate(s), k);
      CAPTURE(s);
      CHECK(r.ok());
      CHECK(r.co_singletons.has_value());  // no isolated vertices here
    }
  // disconnected graph engages the component factorization rule
  Graph two = disjoint_union(generate("path:3"), generate("cycle:4"));
  AxiomReport r = validate_axioms(two, PropertyKind::PowerDomination);
  CHECK(r.ok());
  CHECK(r.component_rule.has_value());
  CHECK(*r.component_rule);
}

TEST_CASE("vertex covers match the exhaustive oracle") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    int n = 2 + (int)(rng() % 7);
    Graph g = rnd_graph(rng, n, 20 + (int)(rng() % 60));
    CHECK(min_vertex_covers(g).sets == oracle::slow_min_vertex_covers(g));
  }
  SetFamily p4 = min_vertex_covers(generate("path:4"));
  CHECK(p4.sets == std::vector<Mask>{0b0101, 0b0110, 0b1010});
}

TEST_CASE("set family json is stable and self-describing") {
  SetFamily f = minimum_x_sets(generate("star:3"),
                               PropertyKind::PowerDomination);
  std::string j = to_json(f);
  CHECK(j.find("\"power_domination\"") != std::string::npos);
  CHECK(j.find("\"minimum\"") != std::string::npos);
  CHECK(to_json(f) == j);
}

TEST_CASE("exhaustive caps throw past the order limit") {
  std::vector<std::pair<int, int>> none;
  Graph big(23, none);
  CHECK_THROWS_AS(x_table(big, PropertyKind::Domination), Error);
  CHECK_THROWS_AS(minimal_x_sets(big, PropertyKind::Domination), Error);
}
