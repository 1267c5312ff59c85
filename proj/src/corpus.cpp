#include "concord/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "concord/errors.hpp"
#include "concord/text.hpp"

namespace concord {
namespace {

using nlohmann::json;

AnnPolarity parse_polarity(const json& j, std::size_t line_no) {
  const std::string s = j.get<std::string>();
  if (s == "agree") return AnnPolarity::Agree;
  if (s == "disagree") return AnnPolarity::Disagree;
  throw ParseError(line_no, "unknown polarity '" + s + "'");
}

std::string polarity_string(AnnPolarity p) {
  return p == AnnPolarity::Agree ? "agree" : "disagree";
}

TextUnit parse_unit(const json& j, std::size_t line_no) {
  TextUnit u;
  u.text = j.at("text").get<std::string>();
  const std::size_t n_chars = text::utf8_length(u.text);

  if (j.contains("tokens")) {
    for (const auto& jt : j.at("tokens")) {
      Token t;
      t.form = jt.at("form").get<std::string>();
      if (t.form.empty()) throw ParseError(line_no, "empty token form");
      if (jt.contains("pos")) t.pos = jt.at("pos").get<std::string>();
      u.tokens.push_back(std::move(t));
    }
  }
  if (j.contains("deps")) {
    for (const auto& jd : j.at("deps")) {
      DependencyArc a;
      a.relation = jd.at("rel").get<std::string>();
      a.head_index = jd.at("head").get<std::size_t>();
      a.dependent_index = jd.at("dep").get<std::size_t>();
      if (a.head_index >= u.tokens.size() ||
          a.dependent_index >= u.tokens.size())
        throw StructureError("dependency index out of range (line " +
                             std::to_string(line_no) + ")");
      if (a.head_index == a.dependent_index)
        throw StructureError("dependency arc with head == dependent (line " +
                             std::to_string(line_no) + ")");
      u.arcs.push_back(std::move(a));
    }
  }
  if (j.contains("quotes")) {
    for (const auto& jq : j.at("quotes")) {
      const std::size_t s = jq.at(0).get<std::size_t>();
      const std::size_t e = jq.at(1).get<std::size_t>();
      if (s > e || e > n_chars)
        throw StructureError("quote span out of text bounds (line " +
                             std::to_string(line_no) + ")");
      u.quote_spans.emplace_back(s, e);
    }
  }
  if (j.contains("label")) {
    const std::string ls = j.at("label").get<std::string>();
    const auto l = label_from_string(ls);
    if (!l) throw ParseError(line_no, "unknown label '" + ls + "'");
    u.gold_label = *l;
  }
  if (j.contains("ann")) {
    AnnotationDetail ann;
    const auto& ja = j.at("ann");
    if (ja.contains("spans")) {
      for (const auto& js : ja.at("spans")) {
        AnnotatedSpan sp;
        sp.annotator = js.at("annotator").get<std::string>();
        sp.polarity = parse_polarity(js.at("polarity"), line_no);
        sp.start = js.at("start").get<std::size_t>();
        sp.end = js.at("end").get<std::size_t>();
        ann.spans.push_back(std::move(sp));
      }
    }
    if (ja.contains("turn_labels")) {
      for (const auto& jl : ja.at("turn_labels")) {
        TurnLevelLabel tl;
        tl.annotator = jl.at("annotator").get<std::string>();
        tl.polarity = parse_polarity(jl.at("polarity"), line_no);
        ann.turn_labels.push_back(std::move(tl));
      }
    }
    if (ja.contains("iac_scores"))
      ann.iac_scores = ja.at("iac_scores").get<std::vector<double>>();
    u.annotation = std::move(ann);
  }
  return u;
}

Discussion parse_discussion(const json& j, std::size_t line_no) {
  Discussion d;
  d.id = j.at("id").get<std::string>();
  std::unordered_set<std::string> seen_turn_ids;
  for (const auto& jt : j.at("turns")) {
    Turn t;
    t.id = jt.at("id").get<std::string>();
    t.speaker = jt.at("speaker").get<std::string>();
    if (!seen_turn_ids.insert(t.id).second)
      throw StructureError("duplicate turn id '" + t.id + "' (line " +
                           std::to_string(line_no) + ")");
    if (jt.contains("reply_to")) {
      const std::string target = jt.at("reply_to").get<std::string>();
      // Earlier-turn references only; this also keeps the reply graph acyclic.
      bool found = false;
      for (const auto& prev : d.turns)
        if (prev.id == target) { found = true; break; }
      if (!found)
        throw StructureError("turn '" + t.id + "' replies to unknown turn '" +
                             target + "' (line " + std::to_string(line_no) +
                             ")");
      t.reply_to = target;
    }
    const auto& junits = jt.at("units");
    if (junits.empty())
      throw ParseError(line_no, "turn '" + t.id + "' has no units");
    for (const auto& ju : junits) t.units.push_back(parse_unit(ju, line_no));
    d.turns.push_back(std::move(t));
  }
  return d;
}

json unit_to_json(const TextUnit& u) {
  json j;
  j["text"] = u.text;
  json toks = json::array();
  for (const auto& t : u.tokens) toks.push_back({{"form", t.form}, {"pos", t.pos}});
  j["tokens"] = std::move(toks);
  json deps = json::array();
  for (const auto& a : u.arcs)
    deps.push_back({{"rel", a.relation},
                    {"head", a.head_index},
                    {"dep", a.dependent_index}});
  j["deps"] = std::move(deps);
  json quotes = json::array();
  for (const auto& q : u.quote_spans) quotes.push_back({q.first, q.second});
  j["quotes"] = std::move(quotes);
  if (u.gold_label) j["label"] = std::string(to_string(*u.gold_label));
  if (u.annotation) {
    json ja;
    json spans = json::array();
    for (const auto& sp : u.annotation->spans)
      spans.push_back({{"annotator", sp.annotator},
                       {"polarity", polarity_string(sp.polarity)},
                       {"start", sp.start},
                       {"end", sp.end}});
    ja["spans"] = std::move(spans);
    json tls = json::array();
    for (const auto& tl : u.annotation->turn_labels)
      tls.push_back({{"annotator", tl.annotator},
                     {"polarity", polarity_string(tl.polarity)}});
    ja["turn_labels"] = std::move(tls);
    ja["iac_scores"] = u.annotation->iac_scores;
    j["ann"] = std::move(ja);
  }
  return j;
}

}  // namespace

std::vector<Discussion> parse_corpus(std::istream& in) {
  std::vector<Discussion> corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(line_no, e.what());
    }
    try {
      corpus.push_back(parse_discussion(j, line_no));
    } catch (const json::exception& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return corpus;
}

std::vector<Discussion> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read corpus file: " + path);
  return parse_corpus(in);
}

void serialize_corpus(const std::vector<Discussion>& corpus,
                      std::ostream& out) {
  for (const auto& d : corpus) {
    json j;
    j["id"] = d.id;
    json turns = json::array();
    for (const auto& t : d.turns) {
      json jt;
      jt["id"] = t.id;
      jt["speaker"] = t.speaker;
      if (t.reply_to) jt["reply_to"] = *t.reply_to;
      json units = json::array();
      for (const auto& u : t.units) units.push_back(unit_to_json(u));
      jt["units"] = std::move(units);
      turns.push_back(std::move(jt));
    }
    j["turns"] = std::move(turns);
    out << j.dump() << '\n';
  }
}

void save_corpus(const std::vector<Discussion>& corpus,
                 const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write corpus file: " + path);
  serialize_corpus(corpus, out);
}

OrdinalLabel map_aawd_labels(const TextUnit& unit) {
  if (!unit.annotation) return OrdinalLabel::O;
  const auto& ann = *unit.annotation;

  std::set<std::string> agree_span_annotators, disagree_span_annotators;
  for (const auto& sp : ann.spans) {
    if (sp.end <= sp.start) continue;  // any (non-empty) overlap counts
    (sp.polarity == AnnPolarity::Agree ? agree_span_annotators
                                       : disagree_span_annotators)
        .insert(sp.annotator);
  }
  bool turn_agree = false, turn_disagree = false;
  for (const auto& tl : ann.turn_labels)
    (tl.polarity == AnnPolarity::Agree ? turn_agree : turn_disagree) = true;

  const bool has_pos = !agree_span_annotators.empty() || turn_agree;
  const bool has_neg = !disagree_span_annotators.empty() || turn_disagree;
  if (has_pos && has_neg) return OrdinalLabel::O;

  if (agree_span_annotators.size() >= 2) return OrdinalLabel::PP;
  if (agree_span_annotators.size() == 1) return OrdinalLabel::P;
  if (turn_agree) return OrdinalLabel::P;
  if (disagree_span_annotators.size() >= 2) return OrdinalLabel::NN;
  if (disagree_span_annotators.size() == 1) return OrdinalLabel::N;
  if (turn_disagree) return OrdinalLabel::N;
  return OrdinalLabel::O;
}

OrdinalLabel map_iac_score(double mean_score) {
  if (!(mean_score >= -5.0 && mean_score <= 5.0))
    throw DataError("segment score outside [-5, 5]: " +
                    std::to_string(mean_score));
  if (mean_score <= -3.0) return OrdinalLabel::NN;
  if (mean_score <= -1.0) return OrdinalLabel::N;
  if (mean_score >= 3.0) return OrdinalLabel::PP;
  if (mean_score >= 1.0) return OrdinalLabel::P;
  return OrdinalLabel::O;
}

ResolvedLabel resolve_label(const TextUnit& unit) {
  if (unit.gold_label) return {*unit.gold_label, LabelSource::Explicit};
  if (unit.annotation) {
    const auto& ann = *unit.annotation;
    if (!ann.spans.empty() || !ann.turn_labels.empty()) {
      const OrdinalLabel l = map_aawd_labels(unit);
      const bool any_span = !ann.spans.empty();
      return {l, any_span ? LabelSource::Span : LabelSource::TurnInherited};
    }
    if (!ann.iac_scores.empty()) {
      double sum = 0.0;
      for (double s : ann.iac_scores) sum += s;
      return {map_iac_score(sum / static_cast<double>(ann.iac_scores.size())),
              LabelSource::Score};
    }
    // Annotated corpus, nothing marked on this unit: sentence-level neutral.
    return {OrdinalLabel::O, LabelSource::Span};
  }
  return {OrdinalLabel::O, LabelSource::Unlabeled};
}

std::size_t distinct_participants(const Discussion& d) {
  std::set<std::string> speakers;
  for (const auto& t : d.turns) speakers.insert(t.speaker);
  return speakers.size();
}

std::vector<Discussion> filter_discussions(const std::vector<Discussion>& c,
                                           std::size_t min_participants) {
  std::vector<Discussion> out;
  for (const auto& d : c)
    if (distinct_participants(d) >= min_participants) out.push_back(d);
  return out;
}

}  // namespace concord
