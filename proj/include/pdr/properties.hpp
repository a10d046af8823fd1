#ifndef PDR_PROPERTIES_HPP
#define PDR_PROPERTIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "pdr/graph.hpp"

namespace pdr {

// Monotone vertex-set properties handled by the search code. All three
// close under supersets, exclude the empty set, decompose over components,
// and admit every (n-1)-subset when the graph has no isolated vertex.
enum class PropertyKind { Domination, PowerDomination, ZeroForcing };

const char* kind_name(PropertyKind k);  // "domination" etc
PropertyKind kind_from_name(const std::string& s);

// Round-by-round observation record. layers[0] is the start set; for
// domination and power domination layers[1] is its closed neighborhood;
// later rounds add, simultaneously, every vertex that is the unique
// unobserved neighbor of an observed vertex. Layers strictly increase and
// stop at the fixpoint.
struct ObservationTrace {
  Mask start = 0;
  std::vector<Mask> layers;
  std::vector<Mask> new_per_round;  // new_per_round[i] = layers[i+1] \ layers[i]
  bool success = false;
  int rounds = 0;  // layers.size() - 1
};

ObservationTrace propagate(const Graph& g, Mask start,
                           PropertyKind kind = PropertyKind::PowerDomination);

// fixpoint test without building the trace; the workhorse of every scan
bool is_x_set(const Graph& g, Mask s, PropertyKind kind);

int x_number(const Graph& g, PropertyKind kind);

struct SetFamily {
  std::string kind;  // "power_domination", ..., or "vertex_cover"
  std::string role;  // "minimum", "minimal", "all_up_to_k"
  int n = 0;
  int k = -1;  // meaningful for role all_up_to_k
  std::vector<Mask> sets;  // ascending mask order
};

SetFamily minimum_x_sets(const Graph& g, PropertyKind kind);

// every X-set whose single-vertex deletions all fail; exhaustive over 2^n,
// so the order is capped (OrderTooLargeForExhaustive past 22)
SetFamily minimal_x_sets(const Graph& g, PropertyKind kind);

// largest cardinality of a minimal X-set
int upper_x(const Graph& g, PropertyKind kind);

SetFamily min_vertex_covers(const Graph& g);

std::string to_json(const SetFamily& f);

struct AxiomReport {
  bool superset_closed = false;
  bool empty_excluded = false;
  std::optional<bool> component_rule;  // checked when g is disconnected
  std::optional<bool> co_singletons;   // checked when g has no isolated vertex
  bool ok() const {
    return superset_closed && empty_excluded &&
           component_rule.value_or(true) && co_singletons.value_or(true);
  }
};

// exhaustive check of the four property axioms; order capped at 20
AxiomReport validate_axioms(const Graph& g, PropertyKind kind);

// membership bitmap over all 2^n subsets, filled layer by cardinality layer
// so that closure under supersets replaces most propagation runs
struct XTable {
  int n = 0;
  std::vector<std::uint8_t> isx;
  bool operator()(Mask m) const { return isx[m] != 0; }
  bool minimal(Mask m) const {
    if (!m || !isx[m]) return false;
    for (Mask t = m; t; t &= t - 1)
      if (isx[m ^ (t & -t)]) return false;
    return true;
  }
};

XTable x_table(const Graph& g, PropertyKind kind);  // order capped at 22

inline constexpr int kExhaustiveOrderCap = 22;

}  // namespace pdr

#endif
