#ifndef PDR_RECON_HPP
#define PDR_RECON_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdr/bitmat.hpp"
#include "pdr/graph.hpp"
#include "pdr/kernels.hpp"
#include "pdr/properties.hpp"

namespace pdr {

enum class ReconModel { TarFull, TarK, TJ };

// Reconfiguration graph over the X-sets of a base graph. TAR links sets
// differing by one vertex (within the cardinality budget k); TJ links
// minimum sets differing by a single swap.
struct ReconGraph {
  Graph base;
  PropertyKind kind = PropertyKind::PowerDomination;
  ReconModel model = ReconModel::TarFull;
  int k = 0;                 // cardinality budget (TAR); n for TarFull
  std::vector<Mask> verts;   // ascending
  Csr adj;                   // neighbor lists ascending

  static constexpr std::size_t npos = ~std::size_t{0};
  std::size_t index_of(Mask m) const;
};

// default vertex cap for reconfiguration graphs; the environment variable
// PDRECON_RECON_CAP overrides it, a per-call cap argument overrides both
inline constexpr std::size_t kReconCapDefault = std::size_t{1} << 22;
std::size_t recon_cap();

inline constexpr int kFull = -1;

ReconGraph build_tar(const Graph& g, PropertyKind kind, int k = kFull,
                     std::size_t cap = 0);
ReconGraph build_tj(const Graph& g, PropertyKind kind, std::size_t cap = 0);

struct ReconMetrics {
  std::size_t order = 0;
  std::size_t size = 0;
  int max_degree = 0;
  int min_degree = 0;
  int components = 0;
  std::optional<int> diameter;   // absent when disconnected
  bool diameter_sampled = false; // estimated from sampled sources past 2^14
  bool bipartite = false;
};

ReconMetrics recon_metrics(const ReconGraph& r);

// (bfs_distance, symmetric_difference); distance -1 when unreachable
std::pair<int, int> tar_distance(const ReconGraph& r, Mask a, Mask b);

struct Thresholds {
  int under_x0 = 0;  // least k whose k-TAR is connected
  int x0 = 0;        // least k with every j-TAR connected for j >= k
};

Thresholds connectivity_thresholds(const Graph& g, PropertyKind kind,
                                   std::size_t cap = 0);

enum class DimMode { Formula, Search };

// largest t with an induced t-dimensional hypercube in the full TAR graph;
// Formula evaluates n - x_number, Search embeds explicitly (t capped at 4,
// TAR order capped at 2^12)
int hypercube_dimension(const Graph& g, PropertyKind kind, DimMode mode);

Bitmat to_bitmat(const ReconGraph& r);

std::string to_json(const ReconGraph& r);
std::string to_dot(const ReconGraph& r);

}  // namespace pdr

#endif
