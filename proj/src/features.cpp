#include "concord/features.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "concord/errors.hpp"
#include "concord/text.hpp"

namespace concord {

std::string_view to_string(FeatureFamily f) {
  switch (f) {
    case FeatureFamily::Lexical: return "lexical";
    case FeatureFamily::Discourse: return "discourse";
    case FeatureFamily::Syntactic: return "syntactic";
    case FeatureFamily::Conversation: return "conversation";
    case FeatureFamily::Sentiment: return "sentiment";
  }
  return "?";
}

std::optional<FeatureFamily> family_from_string(std::string_view s) {
  if (s == "lexical" || s == "lex") return FeatureFamily::Lexical;
  if (s == "discourse" || s == "disc") return FeatureFamily::Discourse;
  if (s == "syntactic" || s == "syn") return FeatureFamily::Syntactic;
  if (s == "conversation" || s == "conv") return FeatureFamily::Conversation;
  if (s == "sentiment" || s == "sent") return FeatureFamily::Sentiment;
  return std::nullopt;
}

namespace {

std::vector<std::vector<std::string>> load_wordlist(const std::string& path,
                                                    const char* what) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError(std::string("cannot read ") + what + " list: " + path);
  std::vector<std::vector<std::string>> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto words = text::split_words(text::lower(line));
    if (!words.empty()) entries.push_back(std::move(words));
  }
  return entries;
}

std::vector<std::string> lowercased_forms(const TextUnit& unit) {
  std::vector<std::string> out;
  out.reserve(unit.tokens.size());
  for (const auto& t : unit.tokens) out.push_back(text::lower(t.form));
  return out;
}

/// Positions where `phrase` occurs as consecutive tokens.
std::vector<std::size_t> phrase_occurrences(
    const std::vector<std::string>& forms,
    const std::vector<std::string>& phrase) {
  std::vector<std::size_t> hits;
  if (phrase.empty() || phrase.size() > forms.size()) return hits;
  for (std::size_t i = 0; i + phrase.size() <= forms.size(); ++i) {
    bool match = true;
    for (std::size_t k = 0; k < phrase.size(); ++k)
      if (forms[i + k] != phrase[k]) { match = false; break; }
    if (match) hits.push_back(i);
  }
  return hits;
}

/// Character spans of each token located greedily in the unit text; tokens
/// the text does not contain verbatim get no span.
std::vector<std::optional<std::pair<std::size_t, std::size_t>>> token_spans(
    const TextUnit& unit) {
  const auto starts = text::utf8_char_starts(unit.text);
  auto byte_to_char = [&](std::size_t byte) {
    auto it = std::upper_bound(starts.begin(), starts.end(), byte);
    return static_cast<std::size_t>(it - starts.begin()) - 1;
  };
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> spans;
  spans.reserve(unit.tokens.size());
  std::size_t search_from = 0;
  for (const auto& tok : unit.tokens) {
    const std::size_t pos = unit.text.find(tok.form, search_from);
    if (pos == std::string::npos) {
      spans.push_back(std::nullopt);
      continue;
    }
    const std::size_t c0 = byte_to_char(pos);
    const std::size_t c1 = byte_to_char(pos + tok.form.size() - 1) + 1;
    spans.emplace_back(std::make_pair(c0, c1));
    search_from = pos + tok.form.size();
  }
  return spans;
}

bool overlaps_quote(const std::pair<std::size_t, std::size_t>& span,
                    const TextUnit& unit) {
  for (const auto& q : unit.quote_spans)
    if (span.first < q.second && q.first < span.second) return true;
  return false;
}

std::string relation_feature(const std::string& rel, const std::string& head,
                             const std::string& dep) {
  return rel + "(" + head + "," + dep + ")";
}

std::string placeholder(Polarity p) {
  return p == Polarity::Positive ? "SentiWord_pos" : "SentiWord_neg";
}

void add_binned(FeatureVector& fv, const std::string& stat, double value,
                const FeatureStats& stats) {
  const auto spec = stats.bin_for(stat);
  if (!spec) return;  // degenerate or unfitted: no bin feature
  const int bin = standardize_and_bin(value, *spec);
  fv.add(stat + "_bin=" + std::to_string(bin));
}

std::string target_combined_text(const Turn& target) {
  std::string out;
  for (std::size_t i = 0; i < target.units.size(); ++i) {
    if (i) out += ' ';
    out += target.units[i].text;
  }
  return out;
}

std::vector<std::string> target_terms(const Turn& target) {
  std::vector<std::string> terms;
  for (const auto& u : target.units)
    for (const auto& t : u.tokens) terms.push_back(text::lower(t.form));
  return terms;
}

/// Character length of quoted material that also appears in the target text.
double quote_overlap_length(const TextUnit& unit, const Turn& target) {
  if (unit.quote_spans.empty()) return 0.0;
  const std::string target_text = target_combined_text(target);
  double total = 0.0;
  for (const auto& q : unit.quote_spans) {
    const std::string quoted = text::utf8_substr(unit.text, q.first, q.second);
    if (!quoted.empty() && target_text.find(quoted) != std::string::npos)
      total += static_cast<double>(q.second - q.first);
  }
  return total;
}

std::vector<std::string> unquoted_terms(const TextUnit& unit) {
  const auto spans = token_spans(unit);
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < unit.tokens.size(); ++i) {
    if (spans[i] && overlaps_quote(*spans[i], unit)) continue;
    terms.push_back(text::lower(unit.tokens[i].form));
  }
  return terms;
}

struct NumericValues {
  // stat name -> value; only stats whose family is enabled appear.
  std::vector<std::pair<std::string, double>> values;
};

NumericValues numeric_values(const TextUnit& unit, const UnitContext& ctx,
                             const FeatureGroupConfig& config,
                             const FeatureResources& res,
                             const FeatureStats* stats_for_tfidf) {
  NumericValues out;
  const auto forms = lowercased_forms(unit);
  if (config.enabled_family(FeatureFamily::Lexical)) {
    out.values.emplace_back("lex:num_words",
                            static_cast<double>(unit.tokens.size()));
    std::size_t caps = 0;
    for (const auto& t : unit.tokens)
      if (text::is_all_caps(t.form)) ++caps;
    out.values.emplace_back("lex:num_allcaps", static_cast<double>(caps));
  }
  if (config.enabled_family(FeatureFamily::Discourse)) {
    std::size_t negators = 0;
    for (const auto& entry : res.negators)
      negators += phrase_occurrences(forms, entry).size();
    out.values.emplace_back("disc:num_negators",
                            static_cast<double>(negators));
  }
  if (config.enabled_family(FeatureFamily::Conversation) && ctx.target) {
    out.values.emplace_back("conv:quote_overlap",
                            quote_overlap_length(unit, *ctx.target));
    if (stats_for_tfidf) {
      const double sim = tfidf_similarity(
          unquoted_terms(unit), target_terms(*ctx.target), *stats_for_tfidf);
      out.values.emplace_back("conv:tfidf", sim);
    }
  }
  return out;
}

}  // namespace

FeatureResources FeatureResources::load(const FeatureGroupConfig& config) {
  FeatureResources res;
  if (!config.hedge_path.empty())
    res.hedges = load_wordlist(config.hedge_path, "hedge");
  if (!config.negator_path.empty())
    res.negators = load_wordlist(config.negator_path, "negator");
  if (!config.connective_path.empty())
    res.connectives = load_wordlist(config.connective_path, "connective");
  if (config.enabled_family(FeatureFamily::Sentiment)) {
    if (config.lexicon_path.empty())
      throw ConfigError("sentiment features require a lexicon path");
    res.lexicon = load_lexicon(config.lexicon_path);
  } else if (!config.lexicon_path.empty()) {
    res.lexicon = load_lexicon(config.lexicon_path);
  }
  return res;
}

int standardize_and_bin(double value, const BinSpec& spec) {
  if (!std::isfinite(value))
    throw InputError("cannot bin non-finite value");
  if (!(spec.stdev > 0.0))
    throw InputError("bin spec with non-positive stdev");
  const double z = (value - spec.mean) / spec.stdev;
  if (z <= -1.5) return 1;
  if (z <= -0.5) return 2;
  if (z <= 0.5) return 3;
  if (z <= 1.5) return 4;
  return 5;
}

double FeatureStats::idf_of(const std::string& term) const {
  auto it = idf.find(term);
  if (it != idf.end()) return it->second;
  if (document_count == 0) return 1.0;
  return std::log(static_cast<double>(document_count + 1));
}

double tfidf_similarity(const std::vector<std::string>& a_terms,
                        const std::vector<std::string>& b_terms,
                        const FeatureStats& stats) {
  if (a_terms.empty() || b_terms.empty()) return 0.0;
  std::map<std::string, double> a_tf, b_tf;
  for (const auto& t : a_terms) a_tf[t] += 1.0;
  for (const auto& t : b_terms) b_tf[t] += 1.0;
  if (a_tf == b_tf) return 1.0;  // identical term multisets

  double dot = 0.0, a_norm2 = 0.0, b_norm2 = 0.0;
  for (const auto& [term, tf] : a_tf) {
    const double w = tf * stats.idf_of(term);
    a_norm2 += w * w;
    auto it = b_tf.find(term);
    if (it != b_tf.end()) dot += w * (it->second * stats.idf_of(term));
  }
  for (const auto& [term, tf] : b_tf) {
    const double w = tf * stats.idf_of(term);
    b_norm2 += w * w;
  }
  if (a_norm2 <= 0.0 || b_norm2 <= 0.0) return 0.0;
  const double sim = dot / (std::sqrt(a_norm2) * std::sqrt(b_norm2));
  return std::min(1.0, std::max(0.0, sim));
}

FeatureVector extract_features(const TextUnit& unit, const UnitContext& ctx,
                               const FeatureGroupConfig& config,
                               const FeatureResources& res,
                               const FeatureStats& stats) {
  FeatureVector fv;
  const auto forms = lowercased_forms(unit);

  if (config.enabled_family(FeatureFamily::Lexical)) {
    for (const auto& f : forms) fv.add("lex:uni=" + f);
    for (std::size_t i = 0; i + 1 < forms.size(); ++i)
      fv.add("lex:bi=" + forms[i] + "_" + forms[i + 1]);
  }

  if (config.enabled_family(FeatureFamily::Discourse)) {
    if (!forms.empty()) fv.add("disc:init_uni=" + forms[0]);
    if (forms.size() >= 2) fv.add("disc:init_bi=" + forms[0] + "_" + forms[1]);
    if (forms.size() >= 3)
      fv.add("disc:init_tri=" + forms[0] + "_" + forms[1] + "_" + forms[2]);
    // Runs of >= 2 identical punctuation characters.
    const std::string& txt = unit.text;
    for (std::size_t i = 0; i + 1 < txt.size();) {
      if (text::is_ascii_punct(txt[i]) && txt[i + 1] == txt[i]) {
        fv.add(std::string("disc:reppunct=") + txt[i]);
        std::size_t j = i;
        while (j < txt.size() && txt[j] == txt[i]) ++j;
        i = j;
      } else {
        ++i;
      }
    }
    for (const auto& entry : res.hedges)
      if (!phrase_occurrences(forms, entry).empty())
        fv.add("disc:hedge=" + text::join(entry, "_"));
  }

  if (config.enabled_family(FeatureFamily::Syntactic)) {
    for (std::size_t i = 0; i < unit.tokens.size(); ++i)
      fv.add("syn:tokpos=" + forms[i] + "/" + unit.tokens[i].pos);
    for (const auto& arc : unit.arcs) {
      const std::string& h = forms[arc.head_index];
      const std::string& d = forms[arc.dependent_index];
      const std::string& hpos = unit.tokens[arc.head_index].pos;
      const std::string& dpos = unit.tokens[arc.dependent_index].pos;
      fv.add("syn:" + relation_feature(arc.relation, h, d));
      fv.add("syn:" + relation_feature(arc.relation, hpos, d));
      fv.add("syn:" + relation_feature(arc.relation, h, dpos));
    }
  }

  if (config.enabled_family(FeatureFamily::Sentiment) &&
      !res.lexicon.empty()) {
    for (const auto& f : forms)
      if (res.lexicon.unigram_polarity(f)) fv.add("sent:word=" + f);

    for (const auto& conn : res.connectives) {
      for (std::size_t at : phrase_occurrences(forms, conn)) {
        const std::size_t lo =
            at > config.connective_window ? at - config.connective_window : 0;
        const std::size_t hi = std::min(
            forms.size(), at + conn.size() + config.connective_window);
        for (std::size_t k = lo; k < hi; ++k) {
          if (k >= at && k < at + conn.size()) continue;
          if (res.lexicon.unigram_polarity(forms[k]))
            fv.add("sent:conn=" + text::join(conn, "_") + "_" + forms[k]);
        }
      }
    }

    for (const auto& arc : unit.arcs) {
      const auto hp = res.lexicon.unigram_polarity(forms[arc.head_index]);
      const auto dp = res.lexicon.unigram_polarity(forms[arc.dependent_index]);
      if (!hp && !dp) continue;
      const std::string h = hp ? placeholder(*hp) : forms[arc.head_index];
      const std::string d = dp ? placeholder(*dp) : forms[arc.dependent_index];
      fv.add("sent:" + relation_feature(arc.relation, h, d));
    }
  }

  // Binned numeric features last; shares the value computation with fitting.
  for (const auto& [stat, value] :
       numeric_values(unit, ctx, config, res, &stats).values)
    add_binned(fv, stat, value, stats);

  return fv;
}

FeatureStats fit_feature_stats(
    const std::vector<std::pair<const TextUnit*, UnitContext>>& units,
    const FeatureGroupConfig& config, const FeatureResources& res) {
  FeatureStats stats;

  // Pass 1: document frequencies over training units.
  std::unordered_map<std::string, std::uint64_t> df;
  for (const auto& [unit, ctx] : units) {
    std::set<std::string> seen;
    for (const auto& t : unit->tokens) seen.insert(text::lower(t.form));
    for (const auto& term : seen) ++df[term];
  }
  stats.document_count = units.size();
  const double n_docs = static_cast<double>(stats.document_count);
  for (const auto& [term, count] : df)
    stats.idf[term] = std::log((n_docs + 1.0) / static_cast<double>(count));

  // Pass 2: numeric feature values, using the frozen idf for the similarity.
  std::map<std::string, std::vector<double>> samples;
  for (const auto& [unit, ctx] : units)
    for (const auto& [stat, value] :
         numeric_values(*unit, ctx, config, res, &stats).values)
      samples[stat].push_back(value);

  for (const auto& [stat, values] : samples) {
    if (values.empty()) continue;
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    const double stdev = std::sqrt(var);
    if (stdev > 1e-12) stats.bins[stat] = BinSpec{mean, stdev};
  }
  return stats;
}

std::optional<std::string> feature_observation_key(const std::string& name) {
  if (name.find("_bin=") != std::string::npos) return std::nullopt;
  const std::size_t colon = name.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const std::size_t eq = name.find('=', colon + 1);
  if (eq != std::string::npos) return name.substr(eq + 1);
  return name.substr(colon + 1);  // relation-form feature
}

}  // namespace concord
