#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "innercore/errors.hpp"

namespace innercore {

using NodeId = std::uint32_t;

inline bool is_hex_payload(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isxdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Lowercases the string; pure-hex payloads gain a 0x prefix so the same
// address always interns to the same id regardless of input casing/prefix.
inline std::string normalize_address(std::string_view raw) {
  std::string s(raw);
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s.size() >= 2 && s[0] == '0' && s[1] == 'x') return s;
  if (is_hex_payload(s)) return "0x" + s;
  return s;
}

// Bidirectional address <-> dense id interning. Ids are assigned in first-seen order.
class AddressBook {
 public:
  NodeId intern(std::string_view raw) {
    std::string key = normalize_address(raw);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    const NodeId id = static_cast<NodeId>(raws_.size());
    index_.emplace(key, id);
    raws_.push_back(std::move(key));
    return id;
  }

  std::optional<NodeId> find(std::string_view raw) const {
    auto it = index_.find(normalize_address(raw));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& raw(NodeId id) const {
    if (id >= raws_.size()) throw InvariantViolation("AddressBook: unknown node id");
    return raws_[id];
  }

  std::size_t size() const { return raws_.size(); }

 private:
  std::vector<std::string> raws_;
  std::unordered_map<std::string, NodeId> index_;
};

// Address -> label map (e.g. known exchange wallets). Later rows overwrite earlier ones.
class LabelSet {
 public:
  void add(std::string_view address, std::string label) {
    labels_[normalize_address(address)] = std::move(label);
  }

  std::optional<std::string_view> lookup(std::string_view address) const {
    auto it = labels_.find(normalize_address(address));
    if (it == labels_.end()) return std::nullopt;
    return std::string_view(it->second);
  }

  std::size_t size() const { return labels_.size(); }

 private:
  std::unordered_map<std::string, std::string> labels_;
};

}  // namespace innercore
