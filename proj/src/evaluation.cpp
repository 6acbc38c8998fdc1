#include "evaluation.hpp"

#include <set>

namespace vcmeta {

namespace {

// Verifies segment presence against the requested level and applies the
// strict tIoU test when one is requested.
bool segments_match(const std::optional<TemporalSegment>& pred,
                    const std::optional<TemporalSegment>& gold,
                    std::optional<double> threshold, const char* what) {
  if (threshold) {
    if (!pred || !gold) {
      throw LevelMismatchError(std::string(what) +
                               ": event-level match requires segments on both items");
    }
    return tiou(*pred, *gold) > *threshold;
  }
  if (pred || gold) {
    throw LevelMismatchError(std::string(what) +
                             ": video-level match requires segment-less items");
  }
  return true;
}

std::vector<std::string> verb_candidates(const Relation& r) {
  std::vector<std::string> out;
  out.reserve(r.modifiers.size() + 1);
  out.push_back(r.verb);
  for (const std::string& m : r.modifiers) out.push_back(r.verb + "_" + m);
  return out;
}

bool any_synonym_pair(const std::vector<std::string>& pred,
                      const std::vector<std::string>& gold, const Lexicon& lex,
                      PosClass pos) {
  for (const std::string& p : pred) {
    for (const std::string& g : gold) {
      if (lex.are_synonyms(p, g, pos)) return true;
    }
  }
  return false;
}

}  // namespace

bool match_entity(const Entity& pred, const Entity& gold, const Lexicon& lex,
                  std::optional<double> threshold) {
  if (!lex.are_synonyms(pred.name, gold.name, PosClass::Noun)) return false;
  return segments_match(pred.segment, gold.segment, threshold, "match_entity");
}

bool match_property(const PropertyPair& pred, const PropertyPair& gold,
                    const Lexicon& lex) {
  return lex.are_synonyms(pred.entity, gold.entity, PosClass::Noun) &&
         lex.are_synonyms(pred.property, gold.property, PosClass::Adjective);
}

bool match_relation(const Relation& pred, const Relation& gold,
                    const Lexicon& lex, std::optional<double> threshold) {
  if (!any_synonym_pair(pred.subjects, gold.subjects, lex, PosClass::Noun))
    return false;
  if (!any_synonym_pair(pred.objects, gold.objects, lex, PosClass::Noun))
    return false;
  if (!any_synonym_pair(verb_candidates(pred), verb_candidates(gold), lex,
                        PosClass::Verb))
    return false;
  return segments_match(pred.segment, gold.segment, threshold, "match_relation");
}

FrequencyIndex build_frequency_index(const PerVideo<Entity>& corpus) {
  FrequencyIndex index;
  for (const auto& [video_id, entities] : corpus) {
    std::set<std::string> names;
    for (const Entity& e : entities) names.insert(e.name);
    for (const std::string& name : names) ++index.counts[name];
  }
  return index;
}

PerVideo<Entity> filter_gold_by_frequency(const PerVideo<Entity>& gold,
                                          const FrequencyIndex& index,
                                          long long f) {
  PerVideo<Entity> out;
  for (const auto& [video_id, entities] : gold) {
    std::vector<Entity>& kept = out[video_id];
    for (const Entity& e : entities) {
      auto it = index.counts.find(e.name);
      long long count = it != index.counts.end() ? it->second : 0;
      if (count > f) kept.push_back(e);
    }
  }
  return out;
}

}  // namespace vcmeta
