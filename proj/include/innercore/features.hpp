#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "innercore/graph.hpp"

namespace innercore {

// Per-node structural properties. Conventions:
//  - neighbor counts are over distinct other nodes (a node is never its own neighbor);
//  - degree/strength count every parallel edge; a self-loop adds to both the in and
//    the out side but only once to the undirected total, so with no self-loops
//    deg = deg_in + deg_out and S = S_in + S_out exactly.
enum class Property : std::uint8_t {
  Neighbors,      // N
  NeighborsOut,   // N_out
  NeighborsIn,    // N_in
  Degree,         // deg
  DegreeOut,      // deg_out
  DegreeIn,       // deg_in
  Strength,       // S
  StrengthOut,    // S_out
  StrengthIn,     // S_in
};

Property parse_property(std::string_view name);
std::string_view property_name(Property p);
std::vector<Property> default_properties();  // deg_in, deg_out, S_in, S_out

struct FeatureMatrix {
  std::vector<NodeId> node_ids;  // ascending; aligned with rows of `values`
  Eigen::MatrixXd values;        // one row per node, one column per property
};

// Features over the whole snapshot.
FeatureMatrix compute_features(const SnapshotGraph& g, std::span<const Property> props);

// Features over the subgraph induced by `alive` (indexed by node position).
// Edges with a dead endpoint contribute nothing; rows cover alive nodes only.
FeatureMatrix compute_features(const SnapshotGraph& g, std::span<const Property> props,
                               const std::vector<std::uint8_t>& alive);

}  // namespace innercore
