#pragma once

#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "innercore/address.hpp"
#include "innercore/date.hpp"
#include "innercore/motif.hpp"

namespace innercore {

// Role keys extend CenterRole with the merged C5 population used when C5a/C5b
// are pooled into a single transitive-triad population.
using RoleKey = std::uint8_t;
inline constexpr RoleKey kRoleC5Merged = 6;
inline constexpr std::size_t kRoleKeyCount = 7;

std::string_view role_key_name(RoleKey key);
inline RoleKey role_key(CenterRole r) { return static_cast<RoleKey>(r); }

struct NfIafOptions {
  bool combine_m5 = false;  // pool C5a and C5b counts under one key
};

struct NfIafEntry {
  RoleKey role;
  Date day;
  NodeId node;
  std::uint64_t count;  // > 0; zero-count cells are absent
  double nf;            // count / day total for the role
  double iaf;           // log10(|T| / document frequency)
  double nf_iaf;
};

struct NfIafTable {
  std::vector<Date> days;           // the window T, ascending
  std::vector<NfIafEntry> entries;  // sorted by (role, day, node)

  std::uint32_t df(RoleKey role, NodeId node) const {
    auto it = df_.find((static_cast<std::uint64_t>(role) << 32) | node);
    return it == df_.end() ? 0 : it->second;
  }

  std::unordered_map<std::uint64_t, std::uint32_t> df_;  // (role,node) -> active days
};

// Frequency-weighted rarity score per (role, day, node). A day-role with zero
// total produces no entries (never a division by zero).
NfIafTable nf_iaf(const std::vector<MotifCounts>& days, const NfIafOptions& options = {});

struct PercentileTable {
  std::vector<double> percentile;  // aligned with NfIafTable::entries
};

// Midrank percentile of each entry's score within its role population (all
// present (day, node) scores of that role): 100 * (below + 0.5*equal) / N.
PercentileTable percentile_ranks(const NfIafTable& table);

struct RoleLabelSummary {
  RoleKey role;
  std::uint64_t unique_addresses = 0;
  std::uint64_t labeled_addresses = 0;
};

struct LabelPartition {
  std::vector<std::size_t> labeled_entries;    // indices into table.entries
  std::vector<std::size_t> unlabeled_entries;
  std::vector<RoleLabelSummary> summary;       // ascending role, roles present only
};

// Splits center addresses by label presence (e.g. known exchanges vs the rest).
LabelPartition partition_by_label(const NfIafTable& table, const LabelSet& labels,
                                  const AddressBook& book);

}  // namespace innercore
