#pragma once

#include <cstdint>

#include "innercore/graph.hpp"

namespace innercore {

// Directed preferential-attachment multigraph with log-normal edge weights.
// Node i's attachment weight is (degree_i + 1)^attachment_exponent. The first
// min(nodes-1, edges) edges attach each new node to an earlier one (random
// direction); remaining edges sample both endpoints preferentially (no
// self-loops, parallels allowed). Exactly `edges` edges are produced; nodes
// that never got an edge do not appear. Deterministic per seed.
struct SyntheticSpec {
  std::uint32_t nodes = 1000;
  std::uint64_t edges = 5000;
  double attachment_exponent = 1.0;
  double weight_log_mean = 0.0;
  double weight_log_sigma = 2.0;
  std::uint64_t seed = 1;
  Date day{0};
};

SnapshotGraph generate(const SyntheticSpec& spec);

}  // namespace innercore
