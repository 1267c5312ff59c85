#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "concord/corpus.hpp"
#include "concord/lexicon.hpp"

namespace concord {

/// Sparse indicator features, namespaced by family (lex:, disc:, syn:,
/// conv:, sent:). All weights are 1.0; binned numerics are one-hot with the
/// bin identity encoded in the name.
struct FeatureVector {
  std::map<std::string, double> entries;

  void add(std::string name) { entries.emplace(std::move(name), 1.0); }
  bool contains(const std::string& name) const {
    return entries.count(name) > 0;
  }
  std::size_t size() const { return entries.size(); }
};

enum class FeatureFamily : std::uint8_t {
  Lexical,
  Discourse,
  Syntactic,
  Conversation,
  Sentiment
};

std::string_view to_string(FeatureFamily f);
std::optional<FeatureFamily> family_from_string(std::string_view s);

/// Which feature families to emit, plus the resource files they need.
struct FeatureGroupConfig {
  std::set<FeatureFamily> enabled = {
      FeatureFamily::Lexical, FeatureFamily::Discourse,
      FeatureFamily::Syntactic, FeatureFamily::Conversation,
      FeatureFamily::Sentiment};

  std::string hedge_path;       // one entry per line, '#' comments
  std::string negator_path;
  std::string connective_path;
  std::string lexicon_path;     // required when Sentiment is enabled

  // Sentiment words within this many tokens of a connective conjoin with it.
  std::size_t connective_window = 3;

  bool enabled_family(FeatureFamily f) const { return enabled.count(f) > 0; }
};

/// Loaded resource word lists (lowercased, possibly multiword) and the
/// sentiment lexicon. Built once, shared read-only by extraction.
struct FeatureResources {
  std::vector<std::vector<std::string>> hedges;
  std::vector<std::vector<std::string>> negators;
  std::vector<std::vector<std::string>> connectives;
  Lexicon lexicon;

  /// Loads whatever paths the config names; missing required files throw
  /// ConfigError. Sentiment enabled without a lexicon path is an error.
  static FeatureResources load(const FeatureGroupConfig& config);
};

/// Standardization statistics for one numeric feature.
struct BinSpec {
  double mean = 0.0;
  double stdev = 1.0;  // > 0; degenerate features are dropped from the table
};

/// z = (value - mean)/stdev binned at edges
/// (-inf,-1.5], (-1.5,-0.5], (-0.5,0.5], (0.5,1.5], (1.5,inf) -> 1..5.
/// Throws InputError on non-finite values.
int standardize_and_bin(double value, const BinSpec& spec);

/// Per-numeric-feature bin specs and the document-frequency table backing
/// TFIDF similarity. Estimated on training data and frozen.
struct FeatureStats {
  std::map<std::string, BinSpec> bins;
  std::unordered_map<std::string, double> idf;
  std::uint64_t document_count = 0;

  std::optional<BinSpec> bin_for(const std::string& stat) const {
    auto it = bins.find(stat);
    if (it == bins.end()) return std::nullopt;
    return it->second;
  }
  double idf_of(const std::string& term) const;
};

/// Turn-local view used during extraction: the owning turn and the turn it
/// replies to (the target), when one exists.
struct UnitContext {
  const Turn* turn = nullptr;
  const Turn* target = nullptr;
};

/// Emits the enabled families' features for one unit. Pure given immutable
/// config/resources/stats; identical inputs give identical output.
FeatureVector extract_features(const TextUnit& unit, const UnitContext& ctx,
                               const FeatureGroupConfig& config,
                               const FeatureResources& resources,
                               const FeatureStats& stats);

/// Estimates bin statistics and the idf table from training units.
/// `units` pairs each unit with its context so conversation statistics see
/// the same values extraction will.
FeatureStats fit_feature_stats(
    const std::vector<std::pair<const TextUnit*, UnitContext>>& units,
    const FeatureGroupConfig& config, const FeatureResources& resources);

/// TFIDF cosine over lowercased token forms. Symmetric, 1.0 for identical
/// non-empty term multisets, 0.0 for disjoint vocabularies, always in [0,1].
double tfidf_similarity(const std::vector<std::string>& a_terms,
                        const std::vector<std::string>& b_terms,
                        const FeatureStats& stats);

/// Observation component of a feature name, used for lexicon/constraint
/// matching: the substring after "family:template=", or after "family:" for
/// relation-form names. Bin-valued features ("_bin=") have no observation
/// and return nullopt.
std::optional<std::string> feature_observation_key(const std::string& name);

}  // namespace concord
