#include "doctest.h"
#include "pdr/graph.hpp"

using namespace pdr;

TEST_CASE("basic families have the right orders and sizes") {
  struct Row {
    const char* spec;
    int n, m;
  };
  const Row rows[] = {
      {"path:1", 1, 0},          {"path:5", 5, 4},
      {"cycle:3", 3, 3},         {"cycle:8", 8, 8},
      {"complete:6", 6, 15},     {"complete_bipartite:3,4", 7, 12},
      {"wheel:5", 5, 8},         {"star:6", 7, 6},
      {"star_edge:4", 5, 5},     {"star_pendant:4", 6, 5},
      {"k2t_edge:3", 5, 7},      {"hypercube:4", 16, 32},
      {"paper_Gn:3", 11, 15},    {"grid:3,4", 12, 17},
      {"grid:5,12", 60, 103},
  };
  for (const Row& r : rows) {
    Graph g = generate(r.spec);
    CAPTURE(r.spec);
    CHECK(g.n() == r.n);
    CHECK(g.ecount() == r.m);
  }
}

TEST_CASE("wheel is a cycle plus a dominating hub") {
  Graph w = generate("wheel:7");
  CHECK(w.degree(0) == 6);
  for (int v = 1; v < 7; ++v) CHECK(w.degree(v) == 3);
  CHECK(w.closed_nbhd(bit(0)) == w.vmask());
}

TEST_CASE("star variants modify the right spots") {
  Graph se = generate("star_edge:5");  // leaves 1 and 2 joined
  CHECK(se.has_edge(1, 2));
  CHECK(se.degree(0) == 5);
  Graph sp = generate("star_pendant:5");  // pendant hangs off leaf 1
  CHECK(sp.n() == 7);
  CHECK(sp.degree(6) == 1);
  CHECK(sp.has_edge(1, 6));
  CHECK(sp.degree(1) == 2);
}

TEST_CASE("k2t_edge joins the two high-degree vertices") {
  Graph g = generate("k2t_edge:4");
  CHECK(g.n() == 6);
  CHECK(g.has_edge(0, 1));
  CHECK(g.degree(0) == 5);
  CHECK(g.degree(1) == 5);
  for (int v = 2; v < 6; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("hub-and-blocks construction") {
  for (int n : {3, 4, 5}) {
    Graph g = generate("paper_Gn:" + std::to_string(n));
    CHECK(g.n() == n * n + n - 1);
    // hub vertices are pairwise non-adjacent
    for (int i = 0; i + 1 < n - 1; ++i)
      for (int j = i + 1; j < n - 1; ++j) CHECK_FALSE(g.has_edge(i, j));
    // each hub vertex sees exactly one vertex per block
    for (int j = 0; j < n - 1; ++j) CHECK(g.degree(j) == n);
    // blocks are n-cliques, so block vertex j<n-1 has n-1+1 neighbors
    int base = n - 1;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n - 1; ++j)
        CHECK(g.degree(base + i * n + j) == n);
      CHECK(g.degree(base + i * n + n - 1) == n - 1);  // no hub tie
    }
  }
}

TEST_CASE("grid adjacency is rook-step only") {
  Graph g = generate("grid:3,4");
  auto at = [](int i, int j) { return i * 4 + j; };
  CHECK(g.has_edge(at(0, 0), at(0, 1)));
  CHECK(g.has_edge(at(0, 0), at(1, 0)));
  CHECK_FALSE(g.has_edge(at(0, 0), at(1, 1)));
  CHECK(g.degree(at(1, 1)) == 4);
  CHECK(g.degree(at(0, 0)) == 2);
}

TEST_CASE("hypercube neighbors differ in one coordinate") {
  Graph q = generate("hypercube:3");
  for (int u = 0; u < 8; ++u)
    for (int v = u + 1; v < 8; ++v)
      CHECK(q.has_edge(u, v) == (popcnt(Mask(u ^ v)) == 1));
}

TEST_CASE("cartesian product of paths is a grid") {
  Graph p3 = generate("path:3"), p4 = generate("path:4");
  Graph prod = cartesian_product(p3, p4);
  Graph grid = generate("grid:3,4");
  REQUIRE(prod.n() == grid.n());
  for (int u = 0; u < prod.n(); ++u)
    for (int v = u + 1; v < prod.n(); ++v)
      CHECK(prod.has_edge(u, v) == grid.has_edge(u, v));
}

TEST_CASE("disjoint union shifts the second operand") {
  Graph u = disjoint_union(generate("complete:3"), generate("path:2"));
  CHECK(u.n() == 5);
  CHECK(u.ecount() == 4);
  CHECK(u.has_edge(3, 4));
  CHECK_FALSE(u.connected());
  CHECK(u.components().size() == 2);
}

TEST_CASE("add_leaves appends fresh pendants") {
  Graph g = generate("cycle:4");
  Graph one = add_leaves(g, 2, 3);
  CHECK(one.n() == 7);
  CHECK(one.degree(2) == 5);
  for (int v = 4; v < 7; ++v) {
    CHECK(one.degree(v) == 1);
    CHECK(one.has_edge(2, v));
  }
  Graph corona = add_leaves(g, kAllVertices, 2);
  CHECK(corona.n() == 12);
  for (int v = 0; v < 4; ++v) CHECK(corona.degree(v) == 4);
  Graph via_spec = generate("corona:2:cycle:4");
  CHECK(via_spec.n() == corona.n());
  CHECK(via_spec.edges() == corona.edges());
}

TEST_CASE("k23 expansion replaces edges with bipartite gadgets") {
  Graph p2 = generate("path:2");
  Graph x = k23_expansion(p2);
  CHECK(x.n() == 5);
  CHECK(x.ecount() == 6);
  CHECK_FALSE(x.has_edge(0, 1));  // original edge removed
  for (int s = 2; s < 5; ++s) {
    CHECK(x.has_edge(0, s));
    CHECK(x.has_edge(1, s));
  }
  Graph c3x = generate("k23:cycle:3");
  CHECK(c3x.n() == 3 + 9);
  CHECK(c3x.ecount() == 18);
}

TEST_CASE("family spec round-trips through str") {
  for (const char* s :
       {"path:7", "complete_bipartite:3,4", "k23:cycle:5",
        "corona:2:complete:3", "k23:corona:1:complete:4", "grid:5,12"}) {
    FamilySpec f = FamilySpec::parse(s);
    CHECK(f.str() == s);
    CHECK(generate(f).n() == generate(s).n());
  }
}

TEST_CASE("bad family specs are rejected") {
  CHECK_THROWS_AS(generate("nonsense:3"), Error);
  CHECK_THROWS_AS(generate("path"), Error);
  CHECK_THROWS_AS(generate("path:0"), Error);
  CHECK_THROWS_AS(generate("cycle:2"), Error);
  CHECK_THROWS_AS(generate("complete_bipartite:3"), Error);
  CHECK_THROWS_AS(generate("grid:9,9"), Error);  // 81 > 64 vertices
  CHECK_THROWS_AS(generate("paper_Gn:8"), Error);
  CHECK_THROWS_AS(generate("k23:complete:7"), Error);  // 7+3*21 > 64
}

TEST_CASE("graph text formats round-trip") {
  for (const char* s : {"path:6", "complete_bipartite:2,5", "wheel:6",
                        "k23:path:3", "paper_Gn:3"}) {
    Graph g = generate(s);
    Graph via_el = graph_from_edge_list(to_edge_list(g));
    CHECK(via_el.n() == g.n());
    CHECK(via_el.edges() == g.edges());
    Graph via_js = graph_from_json(to_json(g));
    CHECK(via_js.n() == g.n());
    CHECK(via_js.edges() == g.edges());
    CHECK(via_js.name() == g.name());
    // byte stability: serialize, parse, serialize again
    CHECK(to_json(via_js) == to_json(g));
    CHECK(to_edge_list(via_el) == to_edge_list(g));
    // autodetection picks the right parser
    CHECK(parse_graph(to_json(g)).edges() == g.edges());
    CHECK(parse_graph(to_edge_list(g)).edges() == g.edges());
  }
}

TEST_CASE("edge list parser rejects malformed input") {
  CHECK_THROWS_AS(graph_from_edge_list("not numbers"), Error);
  CHECK_THROWS_AS(graph_from_edge_list("2 1\n0 0\n"), Error);   // self loop
  CHECK_THROWS_AS(graph_from_edge_list("2 1\n0 5\n"), Error);   // range
  CHECK_THROWS_AS(graph_from_json("{\"n\": 2}"), Error);        // no edges key
}

TEST_CASE("analyze reports structure") {
  GraphStats st = analyze(generate("cycle:6"));
  CHECK(st.max_degree == 2);
  CHECK(st.min_degree == 2);
  CHECK(st.component_count == 1);
  CHECK(st.bipartite);
  CHECK(st.component_diameters == std::vector<int>{3});

  GraphStats odd = analyze(generate("cycle:5"));
  CHECK_FALSE(odd.bipartite);

  Graph two = disjoint_union(generate("path:3"), generate("complete:3"));
  GraphStats st2 = analyze(two);
  CHECK(st2.component_count == 2);
  CHECK(st2.component_diameters == std::vector<int>{2, 1});
  CHECK_FALSE(st2.bipartite);
  CHECK(st2.isolated == 0);

  Graph lone(3, {{0, 1}});
  CHECK(analyze(lone).isolated == bit(2));
}

TEST_CASE("induced subgraph renumbers ascending") {
  Graph g = generate("cycle:5");
  Graph h = g.induced(bit(0) | bit(1) | bit(3));
  CHECK(h.n() == 3);
  CHECK(h.ecount() == 1);  // only 0-1 survives
  CHECK(h.has_edge(0, 1));
}
