#include "innercore/graph.hpp"

#include <algorithm>

#include "innercore/errors.hpp"

namespace innercore {

SnapshotGraph::SnapshotGraph(Date day, std::vector<Edge> edges)
    : day_(day), edges_(std::move(edges)) {
  nodes_.reserve(edges_.size() * 2);
  for (const Edge& e : edges_) {
    nodes_.push_back(e.src);
    nodes_.push_back(e.dst);
  }
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  build_index();
}

SnapshotGraph::SnapshotGraph(Date day, std::vector<NodeId> nodes, std::vector<Edge> edges)
    : day_(day), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  build_index();
}

void SnapshotGraph::build_index() {
  pos_.reserve(nodes_.size() * 2);
  for (std::uint32_t i = 0; i < nodes_.size(); ++i) pos_.emplace(nodes_[i], i);
  out_.assign(nodes_.size(), {});
  in_.assign(nodes_.size(), {});
  for (std::uint32_t idx = 0; idx < edges_.size(); ++idx) {
    const Edge& e = edges_[idx];
    auto a = pos_.find(e.src);
    auto b = pos_.find(e.dst);
    if (a == pos_.end() || b == pos_.end())
      throw InvariantViolation("SnapshotGraph: edge endpoint missing from node set");
    out_[a->second].push_back(idx);
    in_[b->second].push_back(idx);
  }
}

TemporalGraph::TemporalGraph(AddressBook book, std::vector<SnapshotGraph> snapshots)
    : book_(std::move(book)), snaps_(std::move(snapshots)) {
  std::sort(snaps_.begin(), snaps_.end(),
            [](const SnapshotGraph& a, const SnapshotGraph& b) { return a.day() < b.day(); });
  by_day_.reserve(snaps_.size() * 2);
  for (std::size_t i = 0; i < snaps_.size(); ++i) {
    if (!by_day_.emplace(snaps_[i].day().days, i).second)
      throw InvariantViolation("TemporalGraph: duplicate snapshot day " +
                               to_string(snaps_[i].day()));
  }
}

const SnapshotGraph& TemporalGraph::on(Date day) const {
  auto it = by_day_.find(day.days);
  return it == by_day_.end() ? empty_snapshot_ : snaps_[it->second];
}

Date TemporalGraph::first_day() const {
  if (snaps_.empty()) throw InvariantViolation("TemporalGraph: empty");
  return snaps_.front().day();
}

Date TemporalGraph::last_day() const {
  if (snaps_.empty()) throw InvariantViolation("TemporalGraph: empty");
  return snaps_.back().day();
}

}  // namespace innercore
