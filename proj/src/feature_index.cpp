#include "concord/feature_index.hpp"

#include <algorithm>

namespace concord {

FeatureIndex FeatureIndex::from_names(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  FeatureIndex idx;
  idx.names_ = std::move(names);
  idx.ids_.reserve(idx.names_.size());
  for (std::uint32_t i = 0; i < idx.names_.size(); ++i)
    idx.ids_.emplace(idx.names_[i], i);
  return idx;
}

}  // namespace concord
