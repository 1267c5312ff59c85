#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace concord {

/// Bidirectional feature-name <-> dense-id map. Ids are assigned in sorted
/// name order so index construction is independent of data order.
class FeatureIndex {
 public:
  FeatureIndex() = default;

  /// Builds from a set of names (sorted internally; duplicates collapse).
  static FeatureIndex from_names(std::vector<std::string> names);

  std::optional<std::uint32_t> id_of(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }
  const std::string& name_of(std::uint32_t id) const { return names_[id]; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

}  // namespace concord
