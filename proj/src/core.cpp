#include "innercore/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "innercore/errors.hpp"

namespace innercore {

namespace {

// Shared batch-peeling state. The inverse covariance is estimated once from the
// full graph and kept frozen across removals unless reestimation is requested.
struct PeelContext {
  const SnapshotGraph* g = nullptr;
  std::span<const Property> props;
  InnerCoreOptions opts;
  std::vector<std::uint8_t> alive;             // node position -> alive
  std::vector<std::uint32_t> alive_positions;  // ascending positions of alive nodes
  Eigen::MatrixXd inv_cov;
  double ridge_used = 0.0;
  Eigen::VectorXd depths;                      // aligned with alive_positions

  void init(const SnapshotGraph& graph, std::span<const Property> properties,
            const InnerCoreOptions& options) {
    g = &graph;
    props = properties;
    opts = options;
    const std::size_t n = graph.node_count();
    alive.assign(n, 1);
    alive_positions.resize(n);
    std::iota(alive_positions.begin(), alive_positions.end(), 0u);
    FeatureMatrix f = compute_features(graph, props);
    auto ic = inverse_covariance(f.values, opts.ridge);
    inv_cov = std::move(ic.matrix);
    ridge_used = ic.ridge_used;
    depths = depth_vector(f.values, inv_cov);
  }

  void refresh() {
    FeatureMatrix f = compute_features(*g, props, alive);
    if (opts.reestimate_covariance && f.values.rows() >= 2) {
      auto ic = inverse_covariance(f.values, opts.ridge);
      inv_cov = std::move(ic.matrix);
    }
    depths = depth_vector(f.values, inv_cov);
  }

  // Removes every node with depth >= eps, recomputes, repeats until none qualify
  // or at most one node survives (kept by convention). Returns passes executed.
  std::uint32_t exhaust(double eps, std::vector<IterationRecord>* trace) {
    std::uint32_t passes = 0;
    while (true) {
      std::vector<std::uint32_t> keep;
      keep.reserve(alive_positions.size());
      std::uint64_t removed = 0;
      for (std::size_t i = 0; i < alive_positions.size(); ++i) {
        if (depths[static_cast<Eigen::Index>(i)] >= eps) {
          alive[alive_positions[i]] = 0;
          ++removed;
        } else {
          keep.push_back(alive_positions[i]);
        }
      }
      ++passes;
      if (removed == 0) {
        if (trace) trace->push_back({0, depths.size() > 0 ? depths.maxCoeff() : 0.0});
        break;
      }
      alive_positions = std::move(keep);
      if (alive_positions.size() <= 1) {
        if (trace) trace->push_back({removed, alive_positions.size() == 1 ? 1.0 : 0.0});
        depths.resize(static_cast<Eigen::Index>(alive_positions.size()));
        if (alive_positions.size() == 1) depths[0] = 1.0;
        break;
      }
      refresh();
      const double max_depth = depths.maxCoeff();
      if (trace) trace->push_back({removed, max_depth});
      if (max_depth < eps) break;
    }
    return passes;
  }

  std::vector<NodeId> alive_ids() const {
    std::vector<NodeId> ids;
    ids.reserve(alive_positions.size());
    for (std::uint32_t p : alive_positions) ids.push_back(g->nodes()[p]);
    return ids;
  }
};

}  // namespace

InnerCoreResult inner_core(const SnapshotGraph& g, std::span<const Property> props,
                           double epsilon, const InnerCoreOptions& options) {
  if (!(epsilon > 0.0) || !(epsilon <= 1.0))
    throw InputError("inner_core: epsilon must lie in (0, 1]");
  InnerCoreResult res;
  res.epsilon = epsilon;
  const auto t0 = std::chrono::steady_clock::now();
  if (g.node_count() <= 1) {
    res.members = g.nodes();  // a lone node is retained; depth about itself is 1
    res.elapsed = std::chrono::steady_clock::now() - t0;
    return res;
  }
  PeelContext ctx;
  ctx.init(g, props, options);
  res.ridge_used = ctx.ridge_used;
  res.iterations = ctx.exhaust(epsilon, &res.per_iteration);
  res.members = ctx.alive_ids();
  res.elapsed = std::chrono::steady_clock::now() - t0;
  return res;
}

std::vector<NodeId> AlphaDecomposition::members_at_least(double alpha_min) const {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < node_ids.size(); ++i)
    if (alpha[i] >= alpha_min - 1e-12) out.push_back(node_ids[i]);
  return out;
}

AlphaDecomposition alpha_core(const SnapshotGraph& g, std::span<const Property> props,
                              double start_epsilon, double step,
                              const InnerCoreOptions& options) {
  if (!(step > 0.0) || !(start_epsilon >= step) || !(start_epsilon <= 1.0))
    throw InputError("alpha_core: require 0 < step <= start_epsilon <= 1");
  AlphaDecomposition out;
  out.node_ids = g.nodes();
  out.start_epsilon = start_epsilon;
  out.step = step;
  for (int k = 0;; ++k) {
    double e = start_epsilon - k * step;
    const double snapped = std::round(e / step) * step;
    if (std::abs(snapped - e) < 1e-9) e = snapped;
    if (e <= 1e-12) break;
    out.levels.push_back(e);
  }
  out.alpha.assign(g.node_count(), 1.0);  // survivors keep the maximal value
  const auto t0 = std::chrono::steady_clock::now();
  if (g.node_count() <= 1) {
    out.innermost = g.nodes();
    out.elapsed = std::chrono::steady_clock::now() - t0;
    return out;
  }
  PeelContext ctx;
  ctx.init(g, props, options);
  out.ridge_used = ctx.ridge_used;
  for (double e : out.levels) {
    if (ctx.alive_positions.size() <= 1) break;
    std::vector<std::uint8_t> before = ctx.alive;
    ctx.exhaust(e, nullptr);
    for (std::size_t p = 0; p < before.size(); ++p)
      if (before[p] && !ctx.alive[p]) out.alpha[p] = 1.0 - e;
  }
  out.innermost = ctx.alive_ids();
  out.elapsed = std::chrono::steady_clock::now() - t0;
  return out;
}

KCoreResult k_core(const SnapshotGraph& g, bool count_parallel) {
  const std::size_t n = g.node_count();
  KCoreResult res;
  res.node_ids = g.nodes();
  res.coreness.assign(n, 0);
  if (n == 0) return res;

  std::vector<std::vector<std::uint32_t>> adj(n);
  for (const Edge& e : g.edges()) {
    if (e.src == e.dst) continue;  // a node is not its own neighbor
    const std::uint32_t a = *g.position_of(e.src);
    const std::uint32_t b = *g.position_of(e.dst);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (!count_parallel) {
    for (auto& v : adj) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }

  std::vector<std::uint32_t> deg(n);
  std::uint32_t max_deg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    deg[i] = static_cast<std::uint32_t>(adj[i].size());
    max_deg = std::max(max_deg, deg[i]);
  }

  // Bucket sort by degree, then peel in nondecreasing order.
  std::vector<std::uint32_t> bin(max_deg + 2, 0), vert(n), pos(n);
  for (std::size_t i = 0; i < n; ++i) ++bin[deg[i]];
  std::uint32_t start = 0;
  for (std::uint32_t d = 0; d <= max_deg; ++d) {
    const std::uint32_t num = bin[d];
    bin[d] = start;
    start += num;
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    pos[i] = bin[deg[i]];
    vert[pos[i]] = i;
    ++bin[deg[i]];
  }
  for (std::uint32_t d = max_deg + 1; d >= 1; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t v = vert[i];
    for (std::uint32_t u : adj[v]) {
      if (deg[u] > deg[v]) {
        const std::uint32_t du = deg[u], pu = pos[u];
        const std::uint32_t pw = bin[du], w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) res.coreness[i] = deg[i];
  return res;
}

}  // namespace innercore
