#include "innercore/motif.hpp"

#include <algorithm>

#include "innercore/errors.hpp"

namespace innercore {

std::string_view role_name(CenterRole r) {
  switch (r) {
    case CenterRole::C1: return "C1";
    case CenterRole::C4: return "C4";
    case CenterRole::C5a: return "C5a";
    case CenterRole::C5b: return "C5b";
    case CenterRole::C6: return "C6";
    case CenterRole::C11: return "C11";
  }
  throw InvariantViolation("role_name: bad enum value");
}

bool role_is_sell(CenterRole r) {
  return r == CenterRole::C1 || r == CenterRole::C5a || r == CenterRole::C11;
}

std::array<std::uint64_t, kRoleCount> MotifCounts::totals() const {
  std::array<std::uint64_t, kRoleCount> t{};
  for (std::size_t r = 0; r < kRoleCount; ++r)
    for (const auto& [node, c] : counts[r]) t[r] += c;
  return t;
}

SnapshotGraph induced_subgraph(const SnapshotGraph& g, const std::vector<NodeId>& members) {
  std::vector<NodeId> ms = members;
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  for (NodeId v : ms)
    if (!g.position_of(v)) throw InvariantViolation("induced_subgraph: member not in graph");
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (std::binary_search(ms.begin(), ms.end(), e.src) &&
        std::binary_search(ms.begin(), ms.end(), e.dst))
      kept.push_back(e);
  return SnapshotGraph(g.day(), std::move(ms), std::move(kept));
}

MotifCounts enumerate_centers(const SnapshotGraph& g) {
  constexpr std::uint8_t kOut = 1, kIn = 2;
  const std::size_t n = g.node_count();
  MotifCounts mc;
  mc.day = g.day();

  // simple-direction projection by node position
  std::vector<std::unordered_map<std::uint32_t, std::uint8_t>> adj(n);
  for (const Edge& e : g.edges()) {
    if (e.src == e.dst) continue;
    const std::uint32_t a = *g.position_of(e.src);
    const std::uint32_t b = *g.position_of(e.dst);
    adj[a][b] |= kOut;
    adj[b][a] |= kIn;
  }

  std::vector<std::pair<std::uint32_t, std::uint8_t>> nbrs;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (adj[v].size() < 2) continue;
    nbrs.assign(adj[v].begin(), adj[v].end());
    for (std::size_t i = 0; i + 1 < nbrs.size(); ++i) {
      const auto [a, va] = nbrs[i];
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const auto [b, vb] = nbrs[j];
        // the center must be pure: no reciprocal edge on either leg
        const bool sell = va == kOut && vb == kOut;
        const bool buy = va == kIn && vb == kIn;
        if (!sell && !buy) continue;
        auto it = adj[a].find(b);
        const std::uint8_t ab = it == adj[a].end() ? 0 : it->second;
        CenterRole role;
        if (ab == 0)
          role = sell ? CenterRole::C1 : CenterRole::C4;
        else if (ab == (kOut | kIn))
          role = sell ? CenterRole::C11 : CenterRole::C6;
        else
          role = sell ? CenterRole::C5a : CenterRole::C5b;
        ++mc.counts[static_cast<std::size_t>(role)][g.nodes()[v]];
      }
    }
  }
  return mc;
}

}  // namespace innercore
