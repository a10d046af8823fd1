#include "pdr/properties.hpp"

#include <algorithm>

#include "json.hpp"
#include "pdr/kernels.hpp"

namespace pdr {

const char* kind_name(PropertyKind k) {
  switch (k) {
    case PropertyKind::Domination: return "domination";
    case PropertyKind::PowerDomination: return "power_domination";
    case PropertyKind::ZeroForcing: return "zero_forcing";
  }
  return "?";
}

PropertyKind kind_from_name(const std::string& s) {
  if (s == "domination" || s == "dom") return PropertyKind::Domination;
  if (s == "power_domination" || s == "pd") return PropertyKind::PowerDomination;
  if (s == "zero_forcing" || s == "zf") return PropertyKind::ZeroForcing;
  throw Error(Errc::ParseError, "unknown property kind '" + s + "'");
}

namespace {

// one simultaneous forcing round: every observed vertex with a unique
// unobserved neighbor claims it
inline Mask force_round(const Graph& g, Mask cur) {
  Mask add = 0;
  for (Mask m = cur; m; m &= m - 1) {
    Mask un = g.adj(lowbit(m)) & ~cur;
    if (un && !(un & (un - 1))) add |= un;
  }
  return cur | add;
}

// run forcing to the fixpoint, success = everything observed
inline bool force_fill(const Graph& g, Mask obs) {
  const Mask all = g.vmask();
  for (;;) {
    if (obs == all) return true;
    Mask nxt = force_round(g, obs);
    if (nxt == obs) return false;
    obs = nxt;
  }
}

}  // namespace

bool is_x_set(const Graph& g, Mask s, PropertyKind kind) {
  switch (kind) {
    case PropertyKind::Domination:
      return s && g.closed_nbhd(s) == g.vmask();
    case PropertyKind::PowerDomination:
      return s && force_fill(g, g.closed_nbhd(s));
    case PropertyKind::ZeroForcing:
      return s && force_fill(g, s);
  }
  return false;
}

ObservationTrace propagate(const Graph& g, Mask start, PropertyKind kind) {
  if (start & ~g.vmask())
    throw Error(Errc::SetOutOfRange, "start set has bits above graph order");
  ObservationTrace t;
  t.start = start;
  t.layers.push_back(start);
  Mask cur = start;
  for (;;) {
    Mask nxt;
    if (t.layers.size() == 1 && kind != PropertyKind::ZeroForcing)
      nxt = g.closed_nbhd(cur);
    else if (kind == PropertyKind::Domination)
      break;  // domination stops after the neighborhood round
    else
      nxt = force_round(g, cur);
    if (nxt == cur) break;
    t.layers.push_back(nxt);
    t.new_per_round.push_back(nxt & ~cur);
    cur = nxt;
  }
  t.rounds = (int)t.layers.size() - 1;
  t.success = start != 0 && cur == g.vmask();
  return t;
}

int x_number(const Graph& g, PropertyKind kind) {
  for (int k = 1; k <= g.n(); ++k)
    if (par::any_combo(g.n(), k, [&](Mask m) { return is_x_set(g, m, kind); }))
      return k;
  return g.n();  // unreachable: V itself always qualifies
}

SetFamily minimum_x_sets(const Graph& g, PropertyKind kind) {
  int x = x_number(g, kind);
  SetFamily f;
  f.kind = kind_name(kind);
  f.role = "minimum";
  f.n = g.n();
  f.sets = par::filter_combos(g.n(), x,
                              [&](Mask m) { return is_x_set(g, m, kind); });
  return f;
}

XTable x_table(const Graph& g, PropertyKind kind) {
  if (g.n() > kExhaustiveOrderCap)
    throw Error(Errc::OrderTooLargeForExhaustive,
                "2^n membership table needs n <= " +
                    std::to_string(kExhaustiveOrderCap) + ", got " +
                    std::to_string(g.n()));
  XTable t;
  t.n = g.n();
  t.isx.assign(std::size_t{1} << g.n(), 0);
  // cardinality layers: a set is in X if any single deletion already is
  // (closure under supersets), otherwise the propagation engine decides
  for (int p = 1; p <= g.n(); ++p) {
    auto* isx = t.isx.data();
    par::for_each_combo(g.n(), p, [&, isx](Mask m) {
      bool in = false;
      for (Mask s = m; s; s &= s - 1)
        if (isx[m ^ (s & -s)]) {
          in = true;
          break;
        }
      isx[m] = (in || is_x_set(g, m, kind)) ? 1 : 0;
    });
  }
  return t;
}

SetFamily minimal_x_sets(const Graph& g, PropertyKind kind) {
  XTable t = x_table(g, kind);
  SetFamily f;
  f.kind = kind_name(kind);
  f.role = "minimal";
  f.n = g.n();
  f.sets = par::filter_masks(1, Mask{1} << g.n(),
                             [&](Mask m) { return t.minimal(m); });
  return f;
}

int upper_x(const Graph& g, PropertyKind kind) {
  XTable t = x_table(g, kind);
  int best = 0;
  for (Mask m = 1; m < (Mask{1} << g.n()); ++m)
    if (t.minimal(m)) best = std::max(best, popcnt(m));
  return best;
}

SetFamily min_vertex_covers(const Graph& g) {
  auto is_vc = [&](Mask s) {
    Mask un = g.vmask() & ~s;
    for (Mask m = un; m; m &= m - 1)
      if (g.adj(lowbit(m)) & un) return false;
    return true;
  };
  SetFamily f;
  f.kind = "vertex_cover";
  f.role = "minimum";
  f.n = g.n();
  for (int k = 0; k <= g.n(); ++k) {
    f.sets = par::filter_combos(g.n(), k, is_vc);
    if (!f.sets.empty()) break;
  }
  return f;
}

std::string to_json(const SetFamily& f) {
  nlohmann::ordered_json j;
  j["kind"] = f.kind;
  j["role"] = f.role;
  if (f.role == "all_up_to_k") j["k"] = f.k;
  auto& sets = j["sets"] = nlohmann::json::array();
  for (Mask m : f.sets) {
    auto& s = sets.emplace_back(nlohmann::json::array());
    for (Mask b = m; b; b &= b - 1) s.push_back(lowbit(b));
  }
  return j.dump();
}

AxiomReport validate_axioms(const Graph& g, PropertyKind kind) {
  if (g.n() > 20)
    throw Error(Errc::OrderTooLargeForExhaustive,
                "axiom validation is exhaustive, order capped at 20");
  XTable t = x_table(g, kind);
  const Mask full = g.vmask();
  AxiomReport r;

  r.superset_closed =
      0 == par::count_masks(1, Mask{1} << g.n(), [&](Mask m) {
        if (!t(m)) return false;
        for (Mask rest = full & ~m; rest; rest &= rest - 1)
          if (!t(m | (rest & -rest))) return true;  // violation
        return false;
      });

  r.empty_excluded = !is_x_set(g, 0, kind) && !t.isx[0];

  auto comps = g.components();
  if (comps.size() > 1) {
    // X-sets of the whole graph are exactly the unions of one X-set per part
    std::vector<XTable> sub;
    std::vector<std::vector<int>> verts;
    for (Mask c : comps) {
      sub.push_back(x_table(g.induced(c), kind));
      std::vector<int> vs;
      for (Mask m = c; m; m &= m - 1) vs.push_back(lowbit(m));
      verts.push_back(vs);
    }
    r.component_rule =
        0 == par::count_masks(0, Mask{1} << g.n(), [&](Mask m) {
          bool want = t(m);
          bool got = true;
          for (std::size_t i = 0; i < comps.size(); ++i) {
            Mask local = 0;
            for (std::size_t j = 0; j < verts[i].size(); ++j)
              if ((m >> verts[i][j]) & 1) local |= bit((int)j);
            if (!sub[i](local)) {
              got = false;
              break;
            }
          }
          return want != got;
        });
  }

  if (!g.isolated()) {
    bool ok = true;
    for (int v = 0; v < g.n(); ++v)
      if (!t(full ^ bit(v))) ok = false;
    r.co_singletons = ok;
  }
  return r;
}

}  // namespace pdr
