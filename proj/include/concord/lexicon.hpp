#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace concord {

/// The four text-unit kinds that can carry a polarity score.
enum class UnitType : std::uint8_t {
  Unigram,
  Bigram,
  DepRelation,
  SentimentDepRelation
};

std::string_view to_string(UnitType t);
std::optional<UnitType> unit_type_from_string(std::string_view s);

enum class Polarity : std::int8_t { Negative = -1, Positive = 1 };

struct LexiconEntry {
  UnitType type = UnitType::Unigram;
  std::string surface;
  double score = 0.0;  // in [-1, 1], sign matches the set
};

/// Positive set M_p and negative set M_n of scored text units.
/// Invariant: the sets are disjoint on (type, surface).
class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::vector<LexiconEntry> entries);

  const std::vector<LexiconEntry>& positive() const { return positive_; }
  const std::vector<LexiconEntry>& negative() const { return negative_; }
  std::size_t size() const { return positive_.size() + negative_.size(); }
  bool empty() const { return positive_.empty() && negative_.empty(); }

  /// Polarity of a lowercased unigram surface, if present.
  std::optional<Polarity> unigram_polarity(const std::string& word) const;

  /// Polarity of a lowercased "w1 w2" bigram surface, if present.
  std::optional<Polarity> bigram_polarity(const std::string& surface) const;

  /// Canonical match key -> polarity, for constraint binding. Keys use the
  /// same normalization feature extraction applies (lowercase, bigram spaces
  /// to underscores, "rel(head,dep)" with no space, SentiWord placeholders
  /// preserved).
  const std::unordered_map<std::string, Polarity>& match_keys() const {
    return match_keys_;
  }

 private:
  void index_entry(const LexiconEntry& e);

  std::vector<LexiconEntry> positive_;
  std::vector<LexiconEntry> negative_;
  std::unordered_map<std::string, Polarity> unigrams_;
  std::unordered_map<std::string, Polarity> bigrams_;
  std::unordered_map<std::string, Polarity> match_keys_;
};

/// Canonical match key for a lexicon entry; see Lexicon::match_keys.
std::string canonical_match_key(UnitType type, const std::string& surface);

/// Reads the TSV lexicon format: unit_type <TAB> surface <TAB> score.
/// '#' lines are comments. Scores must lie in [-1, 1] and be nonzero; the
/// sign selects the set. Throws ConfigError on unreadable or invalid input.
Lexicon load_lexicon(const std::string& path);
Lexicon read_lexicon(std::istream& in, const std::string& origin);

/// Writes entries sorted by |score| descending; header records the
/// construction parameters when provided.
void write_lexicon(const Lexicon& lex, std::ostream& out,
                   const std::vector<std::string>& header_lines = {});
void save_lexicon(const Lexicon& lex, const std::string& path,
                  const std::vector<std::string>& header_lines = {});

}  // namespace concord
