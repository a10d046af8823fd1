#include "pdr/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "json.hpp"

namespace pdr {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::string name)
    : n_(n), adj_(n > 0 ? n : 0, 0), name_(std::move(name)) {
  if (n < 1 || n > 64)
    throw Error(Errc::OrderOutOfRange,
                "graph order must be in [1,64], got " + std::to_string(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(Errc::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") out of range for n=" + std::to_string(n));
    if (u == v)
      throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
}

int Graph::ecount() const {
  int s = 0;
  for (int v = 0; v < n_; ++v) s += degree(v);
  return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (Mask m = adj_[u] & ~full_mask(u + 1); m; m &= m - 1)
      out.emplace_back(u, lowbit(m));
  return out;
}

Mask Graph::isolated() const {
  Mask r = 0;
  for (int v = 0; v < n_; ++v)
    if (!adj_[v]) r |= bit(v);
  return r;
}

Mask Graph::component_of(int v) const {
  Mask reach = bit(v), frontier = bit(v);
  while (frontier) {
    Mask nf = 0;
    for (Mask m = frontier; m; m &= m - 1) nf |= adj_[lowbit(m)];
    nf &= ~reach;
    reach |= nf;
    frontier = nf;
  }
  return reach;
}

std::vector<Mask> Graph::components() const {
  std::vector<Mask> out;
  Mask left = vmask();
  while (left) {
    Mask c = component_of(lowbit(left));
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

Graph Graph::induced(Mask s) const {
  if (s & ~vmask())
    throw Error(Errc::SetOutOfRange, "induced set has bits above order");
  std::vector<int> verts;
  for (Mask m = s; m; m &= m - 1) verts.push_back(lowbit(m));
  if (verts.empty())
    throw Error(Errc::OrderOutOfRange, "induced subgraph would be empty");
  std::vector<std::pair<int, int>> es;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (has_edge(verts[i], verts[j])) es.emplace_back((int)i, (int)j);
  return Graph((int)verts.size(), es, name_);
}

// --- generators ---

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::ParamOutOfRange, what);
}

Graph gen_path(int n) {
  need(n >= 1 && n <= 64, "path:n needs 1<=n<=64");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph gen_cycle(int n) {
  need(n >= 3 && n <= 64, "cycle:n needs 3<=n<=64");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, e);
}

Graph gen_complete(int n) {
  need(n >= 1 && n <= 64, "complete:n needs 1<=n<=64");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph gen_complete_bipartite(int a, int b) {
  need(a >= 1 && b >= 1 && a + b <= 64, "complete_bipartite:a,b needs a,b>=1, a+b<=64");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

Graph gen_wheel(int n) {
  // hub 0, rim 1..n-1
  need(n >= 4 && n <= 64, "wheel:n needs 4<=n<=64");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  for (int i = 1; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, n - 1);
  return Graph(n, e);
}

Graph gen_star(int t) {
  // center 0, leaves 1..t
  need(t >= 1 && t <= 63, "star:t needs 1<=t<=63");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= t; ++i) e.emplace_back(0, i);
  return Graph(t + 1, e);
}

Graph gen_star_edge(int t) {
  // star plus an edge between leaves 1 and 2
  need(t >= 2 && t <= 63, "star_edge:t needs 2<=t<=63");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= t; ++i) e.emplace_back(0, i);
  e.emplace_back(1, 2);
  return Graph(t + 1, e);
}

Graph gen_star_pendant(int t) {
  // star plus a pendant vertex t+1 hanging from leaf 1
  need(t >= 1 && t <= 62, "star_pendant:t needs 1<=t<=62");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= t; ++i) e.emplace_back(0, i);
  e.emplace_back(1, t + 1);
  return Graph(t + 2, e);
}

Graph gen_k2t_edge(int t) {
  // K_{2,t} with the two high-degree vertices 0,1 joined
  need(t >= 1 && t <= 62, "k2t_edge:t needs 1<=t<=62");
  std::vector<std::pair<int, int>> e;
  for (int j = 0; j < t; ++j) {
    e.emplace_back(0, 2 + j);
    e.emplace_back(1, 2 + j);
  }
  e.emplace_back(0, 1);
  return Graph(t + 2, e);
}

Graph gen_hypercube(int d) {
  need(d >= 0 && d <= 6, "hypercube:d needs 0<=d<=6");
  int n = 1 << d;
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (!((v >> b) & 1)) e.emplace_back(v, v | (1 << b));
  return Graph(n, e);
}

// order n^2+n-1: hub vertices u_1..u_{n-1} first, then n clique blocks of
// size n; the j-th vertex of every block is tied to u_j, the block's last
// vertex has no hub neighbor
Graph gen_paper_gn(int n) {
  need(n >= 3 && n * n + n - 1 <= 64, "paper_Gn:n needs 3<=n<=7");
  int order = n * n + n - 1;
  auto u = [&](int j) { return j - 1; };                       // j=1..n-1
  auto v = [&](int i, int j) { return (n - 1) + (i - 1) * n + (j - 1); };
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j)
      for (int p = j + 1; p <= n; ++p) e.emplace_back(v(i, j), v(i, p));
    for (int j = 1; j <= n - 1; ++j) e.emplace_back(v(i, j), u(j));
  }
  return Graph(order, e);
}

}  // namespace

Graph cartesian_product(const Graph& g, const Graph& h) {
  long long n = (long long)g.n() * h.n();
  if (n < 1 || n > 64)
    throw Error(Errc::OrderOutOfRange,
                "product order " + std::to_string(n) + " exceeds 64");
  auto id = [&](int a, int b) { return a * h.n() + b; };
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < g.n(); ++a)
    for (int b = 0; b < h.n(); ++b) {
      for (Mask m = h.adj(b) & ~full_mask(b + 1); m; m &= m - 1)
        e.emplace_back(id(a, b), id(a, lowbit(m)));
      for (Mask m = g.adj(a) & ~full_mask(a + 1); m; m &= m - 1)
        e.emplace_back(id(a, b), id(lowbit(m), b));
    }
  return Graph((int)n, e, "(" + g.name() + ")x(" + h.name() + ")");
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  int n = g.n() + h.n();
  if (n > 64)
    throw Error(Errc::OrderOutOfRange,
                "union order " + std::to_string(n) + " exceeds 64");
  auto e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(u + g.n(), v + g.n());
  return Graph(n, e, "(" + g.name() + ")+(" + h.name() + ")");
}

Graph add_leaves(const Graph& g, int v, int r) {
  if (v != kAllVertices && (v < 0 || v >= g.n()))
    throw Error(Errc::VertexOutOfRange, "add_leaves: no vertex " + std::to_string(v));
  if (r < 1) throw Error(Errc::ParamOutOfRange, "add_leaves: r must be >= 1");
  long long extra = v == kAllVertices ? (long long)g.n() * r : r;
  if (g.n() + extra > 64)
    throw Error(Errc::OrderOutOfRange, "add_leaves: result exceeds 64 vertices");
  auto e = g.edges();
  int next = g.n();
  if (v == kAllVertices) {
    for (int w = 0; w < g.n(); ++w)
      for (int i = 0; i < r; ++i) e.emplace_back(w, next++);
  } else {
    for (int i = 0; i < r; ++i) e.emplace_back(v, next++);
  }
  return Graph(g.n() + (int)extra, e, g.name());
}

Graph k23_expansion(const Graph& g) {
  int m = g.ecount();
  long long n = g.n() + 3LL * m;
  if (n > 64)
    throw Error(Errc::OrderOutOfRange,
                "k23 expansion order " + std::to_string(n) + " exceeds 64");
  std::vector<std::pair<int, int>> e;
  int next = g.n();
  for (auto [u, v] : g.edges()) {  // edges() is already (min,max) lexicographic
    for (int t = 0; t < 3; ++t) {
      e.emplace_back(u, next);
      e.emplace_back(v, next);
      ++next;
    }
  }
  return Graph((int)n, e, "k23(" + g.name() + ")");
}

GraphStats analyze(const Graph& g) {
  GraphStats s;
  for (int v = 0; v < g.n(); ++v) s.degree_sequence.push_back(g.degree(v));
  std::sort(s.degree_sequence.rbegin(), s.degree_sequence.rend());
  s.max_degree = s.degree_sequence.front();
  s.min_degree = s.degree_sequence.back();
  s.isolated = g.isolated();

  auto comps = g.components();
  s.component_count = (int)comps.size();

  // 2-coloring per component
  s.bipartite = true;
  std::vector<int> color(g.n(), -1);
  for (Mask c : comps) {
    int root = lowbit(c);
    color[root] = 0;
    std::vector<int> fifo{root};
    for (std::size_t h = 0; h < fifo.size(); ++h) {
      int v = fifo[h];
      for (Mask m = g.adj(v); m; m &= m - 1) {
        int w = lowbit(m);
        if (color[w] < 0) {
          color[w] = color[v] ^ 1;
          fifo.push_back(w);
        } else if (color[w] == color[v]) {
          s.bipartite = false;
        }
      }
    }
  }

  // per-component diameter by BFS from every member
  for (Mask c : comps) {
    int diam = 0;
    for (Mask m = c; m; m &= m - 1) {
      int src = lowbit(m);
      std::vector<int> dist(g.n(), -1);
      dist[src] = 0;
      std::vector<int> fifo{src};
      for (std::size_t h = 0; h < fifo.size(); ++h) {
        int v = fifo[h];
        for (Mask a = g.adj(v); a; a &= a - 1) {
          int w = lowbit(a);
          if (dist[w] < 0) {
            dist[w] = dist[v] + 1;
            diam = std::max(diam, dist[w]);
            fifo.push_back(w);
          }
        }
      }
    }
    s.component_diameters.push_back(diam);
  }
  return s;
}

// --- family grammar ---

namespace {

const std::map<std::string, Family>& family_names() {
  static const std::map<std::string, Family> m = {
      {"path", Family::Path},
      {"cycle", Family::Cycle},
      {"complete", Family::Complete},
      {"complete_bipartite", Family::CompleteBipartite},
      {"wheel", Family::Wheel},
      {"star", Family::Star},
      {"star_edge", Family::StarEdge},
      {"star_pendant", Family::StarPendant},
      {"k2t_edge", Family::K2tEdge},
      {"hypercube", Family::Hypercube},
      {"paper_Gn", Family::PaperGn},
      {"grid", Family::Grid},
  };
  return m;
}

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v;
  try {
    v = std::stoi(s, &pos);
  } catch (...) {
    throw Error(Errc::ParseError, "expected integer, got '" + s + "'");
  }
  if (pos != s.size())
    throw Error(Errc::ParseError, "expected integer, got '" + s + "'");
  return v;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  FamilySpec spec;
  std::string rest = text;
  for (;;) {
    if (rest.rfind("k23:", 0) == 0) {
      spec.wraps.push_back({true, 0});
      rest = rest.substr(4);
    } else if (rest.rfind("corona:", 0) == 0) {
      rest = rest.substr(7);
      auto colon = rest.find(':');
      if (colon == std::string::npos)
        throw Error(Errc::ParseError, "corona needs a leaf count: corona:R:<family>");
      spec.wraps.push_back({false, parse_int(rest.substr(0, colon))});
      rest = rest.substr(colon + 1);
    } else {
      break;
    }
  }
  auto colon = rest.find(':');
  std::string name = colon == std::string::npos ? rest : rest.substr(0, colon);
  auto it = family_names().find(name);
  if (it == family_names().end())
    throw Error(Errc::ParseError, "unknown family '" + name + "'");
  spec.family = it->second;
  if (colon != std::string::npos) {
    std::string args = rest.substr(colon + 1);
    std::stringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ',')) spec.args.push_back(parse_int(tok));
    if (args.empty() || args.back() == ',')
      throw Error(Errc::ParseError, "trailing comma in '" + args + "'");
  }
  return spec;
}

std::string FamilySpec::str() const {
  std::string out;
  for (const auto& w : wraps)
    out += w.k23 ? "k23:" : "corona:" + std::to_string(w.r) + ":";
  for (const auto& [name, fam] : family_names())
    if (fam == family) {
      out += name;
      break;
    }
  for (std::size_t i = 0; i < args.size(); ++i)
    out += (i ? "," : ":") + std::to_string(args[i]);
  return out;
}

Graph generate(const FamilySpec& spec) {
  auto arity = [&](std::size_t want) {
    if (spec.args.size() != want)
      throw Error(Errc::ParamOutOfRange,
                  "family takes " + std::to_string(want) + " parameter(s), got " +
                      std::to_string(spec.args.size()));
  };
  Graph g;
  switch (spec.family) {
    case Family::Path: arity(1); g = gen_path(spec.args[0]); break;
    case Family::Cycle: arity(1); g = gen_cycle(spec.args[0]); break;
    case Family::Complete: arity(1); g = gen_complete(spec.args[0]); break;
    case Family::CompleteBipartite:
      arity(2);
      g = gen_complete_bipartite(spec.args[0], spec.args[1]);
      break;
    case Family::Wheel: arity(1); g = gen_wheel(spec.args[0]); break;
    case Family::Star: arity(1); g = gen_star(spec.args[0]); break;
    case Family::StarEdge: arity(1); g = gen_star_edge(spec.args[0]); break;
    case Family::StarPendant: arity(1); g = gen_star_pendant(spec.args[0]); break;
    case Family::K2tEdge: arity(1); g = gen_k2t_edge(spec.args[0]); break;
    case Family::Hypercube: arity(1); g = gen_hypercube(spec.args[0]); break;
    case Family::PaperGn: arity(1); g = gen_paper_gn(spec.args[0]); break;
    case Family::Grid:
      arity(2);
      need(spec.args[0] >= 1 && spec.args[1] >= 1 &&
               (long long)spec.args[0] * spec.args[1] <= 64,
           "grid:a,b needs a,b>=1 and a*b<=64");
      g = cartesian_product(gen_path(spec.args[0]), gen_path(spec.args[1]));
      break;
  }
  // wrappers are stored outermost first, so apply from the inside out
  for (auto it = spec.wraps.rbegin(); it != spec.wraps.rend(); ++it)
    g = it->k23 ? k23_expansion(g) : add_leaves(g, kAllVertices, it->r);
  g.set_name(spec.str());
  return g;
}

Graph generate(const std::string& spec) { return generate(FamilySpec::parse(spec)); }

// --- formats ---

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.ecount()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n, m;
  if (!(in >> n >> m)) throw Error(Errc::ParseError, "missing 'n m' header");
  if (n < 1 || n > 64)
    throw Error(Errc::OrderOutOfRange, "order must be in [1,64], got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  std::vector<Mask> seen(n, 0);
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v))
      throw Error(Errc::ParseError, "expected " + std::to_string(m) + " edges, found " +
                                        std::to_string(i));
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(Errc::VertexOutOfRange, "edge endpoint out of range");
    if (u == v) throw Error(Errc::SelfLoop, "self-loop at " + std::to_string(u));
    if ((seen[u] >> v) & 1)
      throw Error(Errc::ParseError, "duplicate edge " + std::to_string(u) + " " +
                                        std::to_string(v));
    seen[u] |= bit((int)v);
    seen[v] |= bit((int)u);
    edges.emplace_back((int)u, (int)v);
  }
  std::string tail;
  if (in >> tail) throw Error(Errc::ParseError, "trailing data '" + tail + "'");
  return Graph((int)n, edges);
}

std::string to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  auto& es = j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) es.push_back({u, v});
  j["name"] = g.name();
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw Error(Errc::ParseError, "graph json needs keys n, edges");
  long long n = j["n"].get<long long>();
  if (n < 1 || n > 64)
    throw Error(Errc::OrderOutOfRange, "order must be in [1,64], got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  std::vector<Mask> seen(n, 0);
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw Error(Errc::ParseError, "edge entries must be [u,v]");
    long long u = e[0].get<long long>(), v = e[1].get<long long>();
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(Errc::VertexOutOfRange, "edge endpoint out of range");
    if (u == v) throw Error(Errc::SelfLoop, "self-loop at " + std::to_string(u));
    if ((seen[u] >> v) & 1) throw Error(Errc::ParseError, "duplicate edge");
    seen[u] |= bit((int)v);
    seen[v] |= bit((int)u);
    edges.emplace_back((int)u, (int)v);
  }
  Graph g((int)n, edges);
  if (j.contains("name")) g.set_name(j["name"].get<std::string>());
  return g;
}

std::string to_dot(const Graph& g) {
  std::string out = "graph g {\n";
  for (int v = 0; v < g.n(); ++v)
    if (!g.adj(v)) out += "  " + std::to_string(v) + ";\n";
  for (auto [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

Graph parse_graph(const std::string& text) {
  for (char c : text) {
    if (std::isspace((unsigned char)c)) continue;
    return c == '{' ? graph_from_json(text) : graph_from_edge_list(text);
  }
  throw Error(Errc::ParseError, "empty graph input");
}

}  // namespace pdr
