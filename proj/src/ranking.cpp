#include "innercore/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "innercore/errors.hpp"

namespace innercore {

std::string_view role_key_name(RoleKey key) {
  if (key < kRoleCount) return role_name(static_cast<CenterRole>(key));
  if (key == kRoleC5Merged) return "C5";
  throw InvariantViolation("role_key_name: bad role key");
}

NfIafTable nf_iaf(const std::vector<MotifCounts>& days, const NfIafOptions& options) {
  if (days.empty()) throw InputError("nf_iaf: day window is empty");
  for (std::size_t i = 1; i < days.size(); ++i)
    if (!(days[i - 1].day < days[i].day))
      throw InputError("nf_iaf: days must be strictly increasing");

  NfIafTable table;
  table.days.reserve(days.size());
  for (const auto& d : days) table.days.push_back(d.day);
  const double t_count = static_cast<double>(days.size());

  // per day: counts pooled by role key
  using Bucket = std::unordered_map<NodeId, std::uint64_t>;
  std::vector<std::array<Bucket, kRoleKeyCount>> pooled(days.size());
  for (std::size_t di = 0; di < days.size(); ++di) {
    for (std::size_t r = 0; r < kRoleCount; ++r) {
      RoleKey key = static_cast<RoleKey>(r);
      if (options.combine_m5 &&
          (key == role_key(CenterRole::C5a) || key == role_key(CenterRole::C5b)))
        key = kRoleC5Merged;
      for (const auto& [node, c] : days[di].counts[r])
        if (c > 0) pooled[di][key][node] += c;
    }
  }

  // document frequency: days a (role, node) is active on
  for (std::size_t di = 0; di < days.size(); ++di)
    for (RoleKey key = 0; key < kRoleKeyCount; ++key)
      for (const auto& [node, c] : pooled[di][key])
        ++table.df_[(static_cast<std::uint64_t>(key) << 32) | node];

  for (std::size_t di = 0; di < days.size(); ++di) {
    for (RoleKey key = 0; key < kRoleKeyCount; ++key) {
      const Bucket& bucket = pooled[di][key];
      std::uint64_t total = 0;
      for (const auto& [node, c] : bucket) total += c;
      if (total == 0) continue;
      for (const auto& [node, c] : bucket) {
        NfIafEntry e;
        e.role = key;
        e.day = days[di].day;
        e.node = node;
        e.count = c;
        e.nf = static_cast<double>(c) / static_cast<double>(total);
        e.iaf = std::log10(t_count / static_cast<double>(table.df(key, node)));
        e.nf_iaf = e.nf * e.iaf;
        table.entries.push_back(e);
      }
    }
  }
  std::sort(table.entries.begin(), table.entries.end(),
            [](const NfIafEntry& a, const NfIafEntry& b) {
              if (a.role != b.role) return a.role < b.role;
              if (a.day != b.day) return a.day < b.day;
              return a.node < b.node;
            });
  return table;
}

PercentileTable percentile_ranks(const NfIafTable& table) {
  if (table.entries.empty()) throw InputError("percentile_ranks: table is empty");
  std::array<std::vector<double>, kRoleKeyCount> scores;
  for (const auto& e : table.entries) scores[e.role].push_back(e.nf_iaf);
  for (auto& v : scores) std::sort(v.begin(), v.end());

  PercentileTable out;
  out.percentile.reserve(table.entries.size());
  for (const auto& e : table.entries) {
    const auto& pop = scores[e.role];
    const auto lo = std::lower_bound(pop.begin(), pop.end(), e.nf_iaf);
    const auto hi = std::upper_bound(pop.begin(), pop.end(), e.nf_iaf);
    const double below = static_cast<double>(lo - pop.begin());
    const double equal = static_cast<double>(hi - lo);
    out.percentile.push_back(100.0 * (below + 0.5 * equal) /
                             static_cast<double>(pop.size()));
  }
  return out;
}

LabelPartition partition_by_label(const NfIafTable& table, const LabelSet& labels,
                                  const AddressBook& book) {
  LabelPartition part;
  std::array<std::set<NodeId>, kRoleKeyCount> uniq;
  std::array<std::set<NodeId>, kRoleKeyCount> labeled;
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    const auto& e = table.entries[i];
    const bool has_label = labels.lookup(book.raw(e.node)).has_value();
    uniq[e.role].insert(e.node);
    if (has_label) {
      labeled[e.role].insert(e.node);
      part.labeled_entries.push_back(i);
    } else {
      part.unlabeled_entries.push_back(i);
    }
  }
  for (RoleKey key = 0; key < kRoleKeyCount; ++key) {
    if (uniq[key].empty()) continue;
    part.summary.push_back({key, uniq[key].size(), labeled[key].size()});
  }
  return part;
}

}  // namespace innercore
