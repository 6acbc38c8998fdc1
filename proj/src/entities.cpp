#include "entities.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "strutil.hpp"

namespace vcmeta {

namespace {

bool is_noun_tag(const std::string& pos) {
  return pos == "NOUN" || pos == "PROPN";
}

void collect_compound_children(const ParsedDocument& doc, const DocIndex& index,
                               int token, std::vector<int>& out) {
  for (int c : index.children(token)) {
    if (doc.tokens[c].dep == "compound") {
      out.push_back(c);
      collect_compound_children(doc, index, c, out);
    }
  }
}

// First accepted sublist plus its joined name, or nullopt.
std::optional<std::pair<std::string, std::vector<int>>> try_compound(
    const ParsedDocument& doc, const Lexicon& lex,
    const std::vector<int>& list) {
  if (list.size() < 2) return std::nullopt;
  bool has_noun = std::any_of(list.begin(), list.end(), [&](int t) {
    return is_noun_tag(doc.tokens[t].pos);
  });
  if (!has_noun) return std::nullopt;

  static const char* joiners[] = {"_", "-", ""};
  for (const char* joiner : joiners) {
    std::string form;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i > 0) form += joiner;
      form += to_lower(doc.tokens[list[i]].text);
    }
    if (lex.is_word(form, PosClass::Noun))
      return std::make_pair(lex.lemma(form, PosClass::Noun), list);
  }

  std::vector<int> without_first(list.begin() + 1, list.end());
  if (auto found = try_compound(doc, lex, without_first)) return found;
  std::vector<int> without_last(list.begin(), list.end() - 1);
  return try_compound(doc, lex, without_last);
}

}  // namespace

std::vector<NounMention> detect_compound_nouns(const ParsedDocument& doc,
                                               const DocIndex& index,
                                               const Lexicon& lex) {
  std::vector<NounMention> out;
  for (int i = 0; i < static_cast<int>(doc.tokens.size()); ++i) {
    if (doc.tokens[i].dep == "compound") continue;
    std::vector<int> candidate;
    collect_compound_children(doc, index, i, candidate);
    if (candidate.empty()) continue;
    candidate.push_back(i);
    std::sort(candidate.begin(), candidate.end());

    if (auto found = try_compound(doc, lex, candidate)) {
      out.push_back({std::move(found->first), std::move(found->second),
                     doc.tokens[i].sentence_id});
    }
  }
  return out;
}

std::vector<NounMention> detect_simple_nouns(
    const ParsedDocument& doc, const Lexicon& lex,
    const std::unordered_set<int>& exclude) {
  std::vector<NounMention> out;
  for (int i = 0; i < static_cast<int>(doc.tokens.size()); ++i) {
    const Token& t = doc.tokens[i];
    if (exclude.count(i) || !is_noun_tag(t.pos)) continue;
    if (!lex.is_word(t.text, PosClass::Noun)) continue;
    out.push_back({lex.lemma(t.text, PosClass::Noun), {i}, t.sentence_id});
  }
  return out;
}

std::vector<NounMention> detect_noun_mentions(const ParsedDocument& doc,
                                              const DocIndex& index,
                                              const Lexicon& lex) {
  std::vector<NounMention> mentions = detect_compound_nouns(doc, index, lex);
  std::unordered_set<int> exclude;
  for (const NounMention& m : mentions)
    exclude.insert(m.token_indices.begin(), m.token_indices.end());
  for (NounMention& m : detect_simple_nouns(doc, lex, exclude))
    mentions.push_back(std::move(m));
  std::sort(mentions.begin(), mentions.end(),
            [](const NounMention& a, const NounMention& b) {
              return a.token_indices.front() < b.token_indices.front();
            });
  return mentions;
}

std::map<int, std::size_t> resolve_pronouns(
    const ParsedDocument& doc, const std::vector<NounMention>& mentions) {
  std::map<int, std::size_t> out;
  for (int p = 0; p < static_cast<int>(doc.tokens.size()); ++p) {
    if (doc.tokens[p].pos != "PRON") continue;

    std::optional<std::size_t> best;
    for (const auto& cluster : doc.coref_clusters) {
      bool covers_pronoun = std::any_of(
          cluster.begin(), cluster.end(),
          [&](const MentionSpan& s) { return s.first <= p && p <= s.last; });
      if (!covers_pronoun) continue;

      for (const MentionSpan& span : cluster) {
        for (std::size_t mi = 0; mi < mentions.size(); ++mi) {
          bool overlaps = std::any_of(
              mentions[mi].token_indices.begin(),
              mentions[mi].token_indices.end(),
              [&](int t) { return span.first <= t && t <= span.last; });
          if (!overlaps) continue;
          if (!best || mentions[mi].token_indices.front() <
                           mentions[*best].token_indices.front()) {
            best = mi;
          }
        }
      }
    }
    if (best) out[p] = *best;
  }
  return out;
}

std::vector<Entity> extract_video_entities(const ParsedDocument& doc,
                                           const Lexicon& lex) {
  DocIndex index(doc);
  std::vector<Entity> out;
  std::unordered_set<std::string> seen;
  for (const NounMention& m : detect_noun_mentions(doc, index, lex)) {
    if (seen.insert(m.name).second) out.push_back({m.name, std::nullopt});
  }
  return out;
}

std::vector<Entity> extract_event_entities(const ParsedDocument& doc,
                                           const Lexicon& lex) {
  DocIndex index(doc);
  std::vector<NounMention> mentions = detect_noun_mentions(doc, index, lex);

  // (document position, name, sentence) for every noun occurrence,
  // including pronouns standing in for one
  std::vector<std::tuple<int, const std::string*, int>> occurrences;
  for (const NounMention& m : mentions)
    occurrences.emplace_back(m.token_indices.front(), &m.name, m.sentence_id);
  for (const auto& [pronoun, mi] : resolve_pronouns(doc, mentions)) {
    occurrences.emplace_back(pronoun, &mentions[mi].name,
                             doc.tokens[pronoun].sentence_id);
  }
  std::sort(occurrences.begin(), occurrences.end(),
            [](const auto& a, const auto& b) {
              return std::get<0>(a) < std::get<0>(b);
            });

  std::vector<Entity> out;
  std::set<std::tuple<std::string, double, double>> seen;
  for (const auto& [position, name, sid] : occurrences) {
    if (sid < 0 || sid >= static_cast<int>(doc.sentence_segments.size()))
      continue;
    const TemporalSegment& seg = doc.sentence_segments[sid];
    if (seen.emplace(*name, seg.start, seg.end).second)
      out.push_back({*name, seg});
  }
  return out;
}

}  // namespace vcmeta
