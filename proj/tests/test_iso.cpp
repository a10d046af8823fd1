#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pdr/iso.hpp"
#include "pdr/properties.hpp"
#include "pdr/recon.hpp"

using namespace pdr;

namespace {
Graph relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> p(g.n());
  std::iota(p.begin(), p.end(), 0);
  for (int i = g.n() - 1; i > 0; --i)
    std::swap(p[i], p[(int)(rng() % (i + 1))]);
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges()) e.push_back({p[u], p[v]});
  return Graph(g.n(), e);
}
}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(3);
  for (const char* s : {"path:7", "cycle:8", "star_edge:5", "paper_Gn:3",
                        "grid:3,4", "k23:path:3"}) {
    Graph g = generate(s);
    CanonicalForm base = canonical_form(g);
    for (int i = 0; i < 6; ++i) {
      CanonicalForm other = canonical_form(relabel(g, rng));
      CAPTURE(s);
      CHECK(base == other);
      CHECK(base.hex() == other.hex());
    }
  }
}

TEST_CASE("canonical form separates same-degree non-isomorphic pairs") {
  // both 2-regular on 6 vertices
  Graph c6 = generate("cycle:6");
  Graph cc = disjoint_union(generate("cycle:3"), generate("cycle:3"));
  CHECK(canonical_form(c6) != canonical_form(cc));
  CHECK_FALSE(are_isomorphic(c6, cc).has_value());

  // both 3-regular on 6 vertices
  Graph k33 = generate("complete_bipartite:3,3");
  Graph prism = cartesian_product(generate("cycle:3"), generate("path:2"));
  CHECK(canonical_form(k33) != canonical_form(prism));
}

TEST_CASE("canonical form agrees with the permutation oracle") {
  // every graph on up to 4 vertices: classes must match exactly
  for (int n = 1; n <= 4; ++n) {
    EnumOptions all;
    all.dedup = false;
    std::set<std::string> fast;
    std::set<std::vector<Mask>> slow;
    for (const Graph& g : enumerate_graphs(n, all)) {
      fast.insert(canonical_form(g).hex());
      slow.insert(oracle::slow_canonical(g));
    }
    CHECK(fast.size() == slow.size());
  }
  // random pair comparisons at order 6
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    std::vector<std::pair<int, int>> e1, e2;
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v) {
        if (rng() % 2) e1.push_back({u, v});
        if (rng() % 2) e2.push_back({u, v});
      }
    Graph a(6, e1), b(6, e2);
    CHECK((canonical_form(a) == canonical_form(b)) ==
          oracle::slow_isomorphic(a, b));
  }
}

TEST_CASE("isomorphism certificates are genuine maps") {
  std::mt19937_64 rng(23);
  Graph g = generate("k23:cycle:3");
  Graph h = relabel(g, rng);
  auto m = are_isomorphic(g, h);
  REQUIRE(m.has_value());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      CHECK(g.has_edge(u, v) == h.has_edge((*m)[u], (*m)[v]));
}

TEST_CASE("enumeration counts match the catalogue") {
  const std::size_t all[] = {0, 1, 2, 4, 11, 34, 156};
  const std::size_t connected[] = {0, 1, 1, 2, 6, 21, 112};
  const std::size_t no_isolated[] = {0, 0, 1, 2, 7, 23, 122};
  for (int n = 1; n <= 6; ++n) {
    EnumOptions opt;
    CHECK(enumerate_graphs(n, opt).size() == all[n]);
    opt.connected = true;
    CHECK(enumerate_graphs(n, opt).size() == connected[n]);
    EnumOptions iso_free;
    iso_free.no_isolated = true;
    CHECK(enumerate_graphs(n, iso_free).size() == no_isolated[n]);
  }
  CHECK_THROWS_AS(enumerate_graphs(8, EnumOptions{}), Error);
  CHECK_THROWS_AS(enumerate_graphs(0, EnumOptions{}), Error);
}

TEST_CASE("enumeration without dedup lists labeled graphs") {
  EnumOptions raw;
  raw.dedup = false;
  CHECK(enumerate_graphs(3, raw).size() == 8);  // 2^C(3,2)
  std::size_t count = 0;
  enumerate_graphs(4, raw, [&](const Graph& g) {
    (void)g;
    ++count;
  });
  CHECK(count == 64);
}

TEST_CASE("uniqueness search recovers the target class") {
  Graph k33 = generate("complete_bipartite:3,3");
  std::vector<Graph> found =
      uniqueness_search(k33, 6, PropertyKind::PowerDomination);
  REQUIRE(found.size() == 1);
  CHECK(are_isomorphic(found[0], k33).has_value());

  Graph k24 = generate("complete_bipartite:2,4");
  std::vector<Graph> pair =
      uniqueness_search(k24, 6, PropertyKind::PowerDomination);
  CHECK(pair.size() == 2);
}

TEST_CASE("bitmat round trip and degree bookkeeping") {
  Graph g = generate("wheel:6");
  Bitmat b = to_bitmat(g);
  CHECK(b.n() == 6);
  CHECK(b.ecount() == g.ecount());
  for (int v = 0; v < 6; ++v) CHECK(b.degree(v) == g.degree(v));
  CHECK(b.get(0, 1));
  CHECK(b.get(1, 0));
}

TEST_CASE("cartesian product on dense matrices matches the graph builder") {
  Graph a = generate("path:3"), b = generate("cycle:4");
  Bitmat prod = cartesian_product(to_bitmat(a), to_bitmat(b));
  Graph direct = cartesian_product(a, b);
  CHECK(prod.n() == direct.n());
  CHECK(are_isomorphic(prod, to_bitmat(direct)).has_value());
  for (int u = 0; u < direct.n(); ++u)
    for (int v = u + 1; v < direct.n(); ++v)
      CHECK(prod.get(u, v) == direct.has_edge(u, v));
}
