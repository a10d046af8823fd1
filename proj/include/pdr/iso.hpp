#ifndef PDR_ISO_HPP
#define PDR_ISO_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pdr/bitmat.hpp"
#include "pdr/graph.hpp"
#include "pdr/properties.hpp"

namespace pdr {

// Label-independent fingerprint: the lexicographically least packed upper
// triangle over the relabelings visited by the refinement search, plus one
// relabeling that achieves it.
struct CanonicalForm {
  int n = 0;
  std::vector<Mask> bits;     // upper triangle row-major under canonical labels
  std::vector<int> relabel;   // relabel[original] = canonical position

  std::string hex() const;
  bool operator==(const CanonicalForm& o) const {
    return n == o.n && bits == o.bits;
  }
  bool operator!=(const CanonicalForm& o) const { return !(*this == o); }
  bool operator<(const CanonicalForm& o) const {
    if (n != o.n) return n < o.n;
    return bits < o.bits;
  }
};

inline constexpr int kCanonicalOrderCap = 1024;

CanonicalForm canonical_form(const Bitmat& g);  // TooLargeForCanonical past cap
CanonicalForm canonical_form(const Graph& g);

Bitmat to_bitmat(const Graph& g);

// vertex bijection g -> h when isomorphic, verified edge by edge before return
std::optional<std::vector<int>> are_isomorphic(const Bitmat& g, const Bitmat& h);
std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h);

struct EnumOptions {
  bool connected = false;
  bool no_isolated = false;
  bool dedup = true;  // one representative per isomorphism class
};

// all graphs of the given order (capped at 7). With dedup, representatives
// are rebuilt from sorted canonical keys, so output order is reproducible;
// without dedup the labeled graphs stream in ascending edge-mask order.
void enumerate_graphs(int n, const EnumOptions& opt,
                      const std::function<void(const Graph&)>& sink);
std::vector<Graph> enumerate_graphs(int n, const EnumOptions& opt);

// isolated-vertex-free graphs H of the given order whose full TAR graph for
// the kind is isomorphic to the target's, up to isomorphism
std::vector<Graph> uniqueness_search(const Graph& target, int n,
                                     PropertyKind kind);

}  // namespace pdr

#endif
