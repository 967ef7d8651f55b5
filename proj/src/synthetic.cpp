#include "innercore/synthetic.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "innercore/errors.hpp"

namespace innercore {

namespace {

// Hand-rolled variates on top of mt19937_64 so a seed reproduces the same
// edge multiset on any platform.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  double uniform01() {  // [0, 1)
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
  }

  double normal() {  // Box-Muller
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Fenwick tree over positive node weights for O(log n) weighted sampling.
class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : n_(n), tree_(n + 1, 0.0) {}

  void add(std::size_t i, double delta) {
    for (++i; i <= n_; i += i & (~i + 1)) tree_[i] += delta;
  }

  double prefix(std::size_t i) const {  // sum over [0, i)
    double s = 0.0;
    for (; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }

  // Smallest index with cumulative weight > r.
  std::size_t find(double r) const {
    std::size_t idx = 0;
    std::size_t mask = 1;
    while (mask * 2 <= n_) mask *= 2;
    for (; mask > 0; mask /= 2) {
      const std::size_t next = idx + mask;
      if (next <= n_ && tree_[next] <= r) {
        idx = next;
        r -= tree_[next];
      }
    }
    return idx;  // 0-based node index
  }

 private:
  std::size_t n_;
  std::vector<double> tree_;
};

}  // namespace

SnapshotGraph generate(const SyntheticSpec& spec) {
  if (spec.nodes < 2) throw InputError("generate: need at least 2 nodes");
  if (spec.edges < spec.nodes - 1)
    throw InputError("generate: need at least nodes-1 edges for the growth backbone");

  Rng rng(spec.seed);
  const std::size_t n = spec.nodes;
  std::vector<std::uint64_t> degree(n, 0);
  Fenwick weights(n);
  auto node_weight = [&](std::size_t i) {
    return std::pow(static_cast<double>(degree[i] + 1), spec.attachment_exponent);
  };
  for (std::size_t i = 0; i < n; ++i) weights.add(i, 1.0);
  auto bump = [&](std::size_t i) {
    const double old_w = node_weight(i);
    ++degree[i];
    weights.add(i, node_weight(i) - old_w);
  };
  auto draw_weight = [&] {
    return std::exp(spec.weight_log_mean + spec.weight_log_sigma * rng.normal());
  };
  const std::int64_t day_start = static_cast<std::int64_t>(spec.day.days) * 86400;

  std::vector<Edge> edges;
  edges.reserve(spec.edges);
  std::uint64_t budget = spec.edges;

  // growth phase: each new node attaches to a preferentially chosen earlier one
  for (std::size_t i = 1; i < n && budget > 0; ++i, --budget) {
    const double total = weights.prefix(i);
    const std::size_t target = weights.find(rng.uniform01() * total);
    const bool outward = rng.uniform01() < 0.5;
    const NodeId a = static_cast<NodeId>(i), b = static_cast<NodeId>(target);
    edges.push_back({outward ? a : b, outward ? b : a, draw_weight(),
                     day_start + static_cast<std::int64_t>(edges.size() % 86400)});
    bump(i);
    bump(target);
  }

  // densification: both endpoints preferential, parallels allowed, no self-loops
  while (budget > 0) {
    const double total = weights.prefix(n);
    const std::size_t src = weights.find(rng.uniform01() * total);
    std::size_t dst = src;
    while (dst == src) dst = weights.find(rng.uniform01() * total);
    edges.push_back({static_cast<NodeId>(src), static_cast<NodeId>(dst), draw_weight(),
                     day_start + static_cast<std::int64_t>(edges.size() % 86400)});
    bump(src);
    bump(dst);
    --budget;
  }

  return SnapshotGraph(spec.day, std::move(edges));
}

}  // namespace innercore
