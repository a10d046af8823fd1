#ifndef PDR_GRAPH_HPP
#define PDR_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdr/core.hpp"

namespace pdr {

// Simple undirected graph on at most 64 vertices, adjacency kept as one
// mask per vertex so neighborhood unions are single word ops.
class Graph {
public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges,
        std::string name = {});

  int n() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string s) { name_ = std::move(s); }

  Mask adj(int v) const { return adj_[v]; }
  Mask vmask() const { return full_mask(n_); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
  int degree(int v) const { return popcnt(adj_[v]); }
  int ecount() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  // N[s] = s together with every neighbor of s
  Mask closed_nbhd(Mask s) const {
    Mask r = s;
    for (Mask m = s; m; m &= m - 1) r |= adj_[lowbit(m)];
    return r;
  }

  Mask isolated() const;          // vertices of degree 0
  Mask component_of(int v) const; // vertices reachable from v
  std::vector<Mask> components() const;
  bool connected() const { return n_ > 0 && component_of(0) == vmask(); }

  // subgraph induced by s, vertices renumbered in ascending order of index
  Graph induced(Mask s) const;

private:
  int n_ = 0;
  std::vector<Mask> adj_;
  std::string name_;
};

enum class Family {
  Path,
  Cycle,
  Complete,
  CompleteBipartite,
  Wheel,
  Star,
  StarEdge,
  StarPendant,
  K2tEdge,
  Hypercube,
  PaperGn,
  Grid,
};

// Parsed family expression: zero or more composing wrappers around a named
// base family, e.g. "k23:corona:1:complete:4". Wrappers apply inner-first.
struct FamilySpec {
  struct Wrap {
    bool k23 = false;  // otherwise corona with r added leaves per vertex
    int r = 0;
  };
  Family family = Family::Path;
  std::vector<int> args;
  std::vector<Wrap> wraps;  // outermost first

  static FamilySpec parse(const std::string& text);
  std::string str() const;
};

Graph generate(const FamilySpec& spec);
Graph generate(const std::string& spec);

// (g,h) -> g*|V(H)|+h; result order must stay within 64
Graph cartesian_product(const Graph& g, const Graph& h);

// H's vertices shifted up by |V(G)|
Graph disjoint_union(const Graph& g, const Graph& h);

// r new leaves attached to vertex v, or to every vertex when v < 0;
// new vertices are appended after the originals
Graph add_leaves(const Graph& g, int v, int r);
inline constexpr int kAllVertices = -1;

// every edge uv replaced by a complete bipartite gadget: u,v on one side,
// three fresh subdividers on the other; originals keep their indices and
// gadget triples are appended in lexicographic (min,max) edge order
Graph k23_expansion(const Graph& g);

struct GraphStats {
  std::vector<int> degree_sequence;  // non-increasing
  int max_degree = 0;
  int min_degree = 0;
  int component_count = 0;
  bool bipartite = false;
  std::vector<int> component_diameters;  // per component, ascending vertex order
  Mask isolated = 0;
};

GraphStats analyze(const Graph& g);

// --- text formats ---

// "n m" header then one "u v" line per edge, 0-based, u < v
std::string to_edge_list(const Graph& g);
// {"n": .., "edges": [[u,v], ..], "name": ".."} with edges sorted
std::string to_json(const Graph& g);
std::string to_dot(const Graph& g);

Graph graph_from_edge_list(const std::string& text);
Graph graph_from_json(const std::string& text);
// autodetects JSON (first non-space '{') versus edge list
Graph parse_graph(const std::string& text);

}  // namespace pdr

#endif
