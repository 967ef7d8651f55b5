#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "innercore/depth.hpp"
#include "innercore/features.hpp"
#include "innercore/graph.hpp"

namespace innercore {

struct InnerCoreOptions {
  RidgePolicy ridge;
  // Re-estimate the inverse covariance from the surviving subgraph after every
  // batch (experimental). Off by default: the initial estimate is kept frozen.
  bool reestimate_covariance = false;
};

struct IterationRecord {
  std::uint64_t removed = 0;          // nodes peeled in this pass
  double max_remaining_depth = 0.0;   // over survivors, after recomputation
};

struct InnerCoreResult {
  std::vector<NodeId> members;        // ascending ids
  std::uint32_t iterations = 0;
  std::vector<IterationRecord> per_iteration;
  double epsilon = 1.0;
  double ridge_used = 0.0;
  std::chrono::duration<double> elapsed{0};
};

// Batch peeling: freeze the inverse covariance of the full graph, then repeatedly
// remove every node whose depth is >= epsilon and recompute features/depths on the
// induced survivor subgraph until no node qualifies. A final lone survivor is
// retained by convention (its depth relative to itself is 1).
InnerCoreResult inner_core(const SnapshotGraph& g, std::span<const Property> props,
                           double epsilon, const InnerCoreOptions& options = {});

struct AlphaDecomposition {
  std::vector<NodeId> node_ids;       // == g.nodes()
  std::vector<double> alpha;          // aligned with node_ids; survivors hold 1.0
  std::vector<double> levels;         // epsilon grid actually peeled, descending
  std::vector<NodeId> innermost;      // survivors of the final level
  double start_epsilon = 1.0;
  double step = 0.1;
  double ridge_used = 0.0;
  std::chrono::duration<double> elapsed{0};

  std::vector<NodeId> members_at_least(double alpha_min) const;
};

// Stepwise decomposition: exhaustively peel at epsilon = start, start-step, ...
// (same recomputation discipline as inner_core, covariance frozen once). A node
// removed while peeling at level e gets alpha = 1 - e; survivors get 1.0.
AlphaDecomposition alpha_core(const SnapshotGraph& g, std::span<const Property> props,
                              double start_epsilon = 1.0, double step = 0.1,
                              const InnerCoreOptions& options = {});

struct KCoreResult {
  std::vector<NodeId> node_ids;          // == g.nodes()
  std::vector<std::uint32_t> coreness;   // aligned with node_ids
};

// Classic bucket peeling on the undirected view. Self-loops are ignored.
// count_parallel: degree counts every parallel edge; otherwise distinct neighbors.
KCoreResult k_core(const SnapshotGraph& g, bool count_parallel = true);

}  // namespace innercore
