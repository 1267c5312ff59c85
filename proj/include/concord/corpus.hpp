#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "concord/labels.hpp"

namespace concord {

struct Token {
  std::string form;  // non-empty
  std::string pos;
};

/// Typed dependency arc between two tokens of the owning unit.
/// head_index != dependent_index; both index into the unit's token list.
struct DependencyArc {
  std::string relation;
  std::size_t head_index = 0;
  std::size_t dependent_index = 0;
};

enum class AnnPolarity : std::uint8_t { Agree, Disagree };

struct AnnotatedSpan {
  std::string annotator;
  AnnPolarity polarity = AnnPolarity::Agree;
  std::size_t start = 0;  // character offsets into the unit text
  std::size_t end = 0;
};

struct TurnLevelLabel {
  std::string annotator;
  AnnPolarity polarity = AnnPolarity::Agree;
};

/// Raw annotation state attached to a unit by the source corpus.
struct AnnotationDetail {
  std::vector<AnnotatedSpan> spans;
  std::vector<TurnLevelLabel> turn_labels;
  std::vector<double> iac_scores;
};

/// A sentence or quote-delimited segment; the atomic prediction target.
struct TextUnit {
  std::string text;
  std::vector<Token> tokens;
  std::vector<DependencyArc> arcs;
  std::vector<std::pair<std::size_t, std::size_t>> quote_spans;  // char ranges
  std::optional<OrdinalLabel> gold_label;
  std::optional<AnnotationDetail> annotation;
};

struct Turn {
  std::string id;
  std::string speaker;
  std::optional<std::string> reply_to;  // id of an earlier turn
  std::vector<TextUnit> units;          // non-empty
};

struct Discussion {
  std::string id;
  std::vector<Turn> turns;
};

// ---------------------------------------------------------------------------
// Parsing and serialization (JSONL, one discussion per line)

/// Parses the line-delimited corpus format. Unknown optional fields are
/// ignored. Throws ParseError (with the line number) on malformed records
/// and StructureError on dangling reply_to or index violations.
std::vector<Discussion> parse_corpus(std::istream& in);

std::vector<Discussion> load_corpus(const std::string& path);

/// One discussion per line; inverse of parse_corpus on the retained fields.
void serialize_corpus(const std::vector<Discussion>& corpus, std::ostream& out);

void save_corpus(const std::vector<Discussion>& corpus,
                 const std::string& path);

// ---------------------------------------------------------------------------
// Label adapters

/// Annotation-to-ordinal mapping for span/turn style annotations:
/// agreement spans from >= 2 distinct annotators give PP, from exactly one
/// (or inherited from a turn-level label) give P; symmetric for NN/N; units
/// carrying both positive and negative evidence are neutral.
OrdinalLabel map_aawd_labels(const TextUnit& unit);

/// Mean-score binning: [-5,-3] -> NN, (-3,-1] -> N, [1,3) -> P, [3,5] -> PP,
/// all others -> O. Throws DataError outside [-5,5].
OrdinalLabel map_iac_score(double mean_score);

/// Where a resolved label came from; soft scoring needs to distinguish
/// turn-inherited labels.
enum class LabelSource : std::uint8_t {
  Explicit,       // gold label stored on the unit
  Span,           // sentence-level annotation spans
  TurnInherited,  // only turn-level annotation
  Score,          // numeric score binning
  Unlabeled
};

struct ResolvedLabel {
  OrdinalLabel label = OrdinalLabel::O;
  LabelSource source = LabelSource::Unlabeled;
};

/// Resolves the gold label for a unit: explicit label first, then span/turn
/// annotations, then score binning. Units with no annotation state resolve
/// to (O, Unlabeled).
ResolvedLabel resolve_label(const TextUnit& unit);

// ---------------------------------------------------------------------------
// Corpus filters

std::size_t distinct_participants(const Discussion& d);

/// Keeps discussions with at least min_participants distinct speakers,
/// preserving order.
std::vector<Discussion> filter_discussions(const std::vector<Discussion>& c,
                                           std::size_t min_participants = 5);

}  // namespace concord
