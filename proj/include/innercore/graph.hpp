#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "innercore/address.hpp"
#include "innercore/date.hpp"

namespace innercore {

// One directed transfer. Parallel edges and self-loops are legal.
struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  double weight = 0.0;
  std::int64_t timestamp = 0;
};

// One day's directed weighted multigraph. Immutable after construction.
// Nodes are kept sorted ascending by id; the edge multiset preserves input order.
class SnapshotGraph {
 public:
  SnapshotGraph() = default;
  // Node set = distinct edge endpoints.
  SnapshotGraph(Date day, std::vector<Edge> edges);
  // Explicit node set (may include isolated nodes); every endpoint must be listed.
  SnapshotGraph(Date day, std::vector<NodeId> nodes, std::vector<Edge> edges);

  Date day() const { return day_; }
  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }

  std::optional<std::uint32_t> position_of(NodeId v) const {
    auto it = pos_.find(v);
    if (it == pos_.end()) return std::nullopt;
    return it->second;
  }

  // Incident edge indices by node position. A self-loop shows up in both lists.
  const std::vector<std::uint32_t>& out_edge_ids(std::uint32_t pos) const { return out_[pos]; }
  const std::vector<std::uint32_t>& in_edge_ids(std::uint32_t pos) const { return in_[pos]; }

 private:
  void build_index();

  Date day_{};
  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<NodeId, std::uint32_t> pos_;
  std::vector<std::vector<std::uint32_t>> out_, in_;
};

// Day-indexed sequence of snapshots plus the address book they share.
// Days may have gaps; querying a missing day yields an empty snapshot.
class TemporalGraph {
 public:
  TemporalGraph() = default;
  TemporalGraph(AddressBook book, std::vector<SnapshotGraph> snapshots);

  const AddressBook& book() const { return book_; }
  AddressBook& book() { return book_; }
  const std::vector<SnapshotGraph>& snapshots() const { return snaps_; }
  const SnapshotGraph& on(Date day) const;
  bool has_day(Date day) const { return by_day_.count(day.days) != 0; }
  bool empty() const { return snaps_.empty(); }
  Date first_day() const;
  Date last_day() const;

 private:
  AddressBook book_;
  std::vector<SnapshotGraph> snaps_;
  std::unordered_map<std::int32_t, std::size_t> by_day_;
  SnapshotGraph empty_snapshot_;
};

}  // namespace innercore
