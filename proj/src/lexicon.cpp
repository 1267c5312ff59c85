#include "concord/lexicon.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "concord/errors.hpp"
#include "concord/text.hpp"

namespace concord {

std::string_view to_string(UnitType t) {
  switch (t) {
    case UnitType::Unigram: return "uni";
    case UnitType::Bigram: return "bi";
    case UnitType::DepRelation: return "dep";
    case UnitType::SentimentDepRelation: return "sentdep";
  }
  return "?";
}

std::optional<UnitType> unit_type_from_string(std::string_view s) {
  if (s == "uni") return UnitType::Unigram;
  if (s == "bi") return UnitType::Bigram;
  if (s == "dep") return UnitType::DepRelation;
  if (s == "sentdep") return UnitType::SentimentDepRelation;
  return std::nullopt;
}

namespace {

// Lowercases while leaving the polarity placeholders intact.
std::string lower_keep_placeholders(const std::string& s) {
  std::string out = text::lower(s);
  auto restore = [&](const std::string& needle) {
    std::string lowered = text::lower(needle);
    std::size_t pos = 0;
    while ((pos = out.find(lowered, pos)) != std::string::npos) {
      out.replace(pos, needle.size(), needle);
      pos += needle.size();
    }
  };
  restore("SentiWord_pos");
  restore("SentiWord_neg");
  return out;
}

}  // namespace

std::string canonical_match_key(UnitType type, const std::string& surface) {
  switch (type) {
    case UnitType::Unigram:
      return text::lower(surface);
    case UnitType::Bigram: {
      std::string key = text::lower(surface);
      std::replace(key.begin(), key.end(), ' ', '_');
      return key;
    }
    case UnitType::DepRelation:
    case UnitType::SentimentDepRelation: {
      // "rel(head, dep)" -> "rel(head,dep)", forms lowercased.
      std::string key = lower_keep_placeholders(surface);
      std::string out;
      out.reserve(key.size());
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i] == ' ' && i > 0 && key[i - 1] == ',') continue;
        out += key[i];
      }
      return out;
    }
  }
  return surface;
}

Lexicon::Lexicon(std::vector<LexiconEntry> entries) {
  for (auto& e : entries) {
    if (!(std::abs(e.score) <= 1.0) || e.score == 0.0 ||
        !std::isfinite(e.score))
      throw ConfigError("lexicon entry '" + e.surface +
                        "' has score outside (0, 1] in magnitude");
    index_entry(e);
    (e.score > 0 ? positive_ : negative_).push_back(std::move(e));
  }
}

void Lexicon::index_entry(const LexiconEntry& e) {
  const Polarity p = e.score > 0 ? Polarity::Positive : Polarity::Negative;
  const std::string key = canonical_match_key(e.type, e.surface);
  auto [it, inserted] = match_keys_.emplace(key, p);
  if (!inserted && it->second != p)
    throw ConfigError("lexicon entry '" + e.surface +
                      "' appears with both polarities");
  if (e.type == UnitType::Unigram) unigrams_.emplace(text::lower(e.surface), p);
  if (e.type == UnitType::Bigram) bigrams_.emplace(text::lower(e.surface), p);
}

std::optional<Polarity> Lexicon::unigram_polarity(
    const std::string& word) const {
  auto it = unigrams_.find(word);
  if (it == unigrams_.end()) return std::nullopt;
  return it->second;
}

std::optional<Polarity> Lexicon::bigram_polarity(
    const std::string& surface) const {
  auto it = bigrams_.find(surface);
  if (it == bigrams_.end()) return std::nullopt;
  return it->second;
}

Lexicon read_lexicon(std::istream& in, const std::string& origin) {
  std::vector<LexiconEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string type_s, surface, score_s;
    if (!std::getline(ss, type_s, '\t') || !std::getline(ss, surface, '\t') ||
        !std::getline(ss, score_s, '\t'))
      throw ConfigError(origin + ":" + std::to_string(line_no) +
                        ": expected unit_type<TAB>surface<TAB>score");
    const auto type = unit_type_from_string(type_s);
    if (!type)
      throw ConfigError(origin + ":" + std::to_string(line_no) +
                        ": unknown unit type '" + type_s + "'");
    double score = 0.0;
    try {
      score = std::stod(score_s);
    } catch (const std::exception&) {
      throw ConfigError(origin + ":" + std::to_string(line_no) +
                        ": bad score '" + score_s + "'");
    }
    entries.push_back({*type, surface, score});
  }
  return Lexicon(std::move(entries));
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read lexicon file: " + path);
  return read_lexicon(in, path);
}

void write_lexicon(const Lexicon& lex, std::ostream& out,
                   const std::vector<std::string>& header_lines) {
  for (const auto& h : header_lines) out << "# " << h << '\n';
  std::vector<const LexiconEntry*> all;
  for (const auto& e : lex.positive()) all.push_back(&e);
  for (const auto& e : lex.negative()) all.push_back(&e);
  std::sort(all.begin(), all.end(),
            [](const LexiconEntry* a, const LexiconEntry* b) {
              const double ma = std::abs(a->score), mb = std::abs(b->score);
              if (ma != mb) return ma > mb;
              if (a->surface != b->surface) return a->surface < b->surface;
              return a->type < b->type;
            });
  out.precision(17);
  for (const auto* e : all)
    out << to_string(e->type) << '\t' << e->surface << '\t' << e->score
        << '\n';
}

void save_lexicon(const Lexicon& lex, const std::string& path,
                  const std::vector<std::string>& header_lines) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write lexicon file: " + path);
  write_lexicon(lex, out, header_lines);
}

}  // namespace concord
