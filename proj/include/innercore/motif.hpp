#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "innercore/graph.hpp"

namespace innercore {

// Center roles of 3-node motifs on the simple-direction projection (an arc u->v
// exists iff at least one parallel edge does; self-loops ignored). For a center v
// and an unordered neighbor pair {a, b}, v must be pure: both legs outgoing (sell
// side) or both incoming (buy side), with no reciprocal edge on either leg.
// The a-b relation picks the role: no edge (C1/C4), exactly one direction
// (C5a/C5b), both directions (C11/C6).
enum class CenterRole : std::uint8_t { C1 = 0, C4, C5a, C5b, C6, C11 };

inline constexpr std::size_t kRoleCount = 6;

std::string_view role_name(CenterRole r);
bool role_is_sell(CenterRole r);  // C1, C5a, C11 have two outgoing legs

struct MotifCounts {
  Date day;
  std::array<std::unordered_map<NodeId, std::uint64_t>, kRoleCount> counts;

  std::array<std::uint64_t, kRoleCount> totals() const;
};

// Subgraph keeping exactly the members and the edges with both endpoints among
// them. Members must all belong to g.
SnapshotGraph induced_subgraph(const SnapshotGraph& g, const std::vector<NodeId>& members);

// Counts, per node and role, the qualifying neighbor pairs. Counts are invariant
// to parallel-edge multiplicity.
MotifCounts enumerate_centers(const SnapshotGraph& g);

}  // namespace innercore
