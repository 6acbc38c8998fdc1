#include "relations.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "entities.hpp"
#include "strutil.hpp"

namespace vcmeta {

namespace {

bool has_passive_child(const ParsedDocument& doc, const DocIndex& index,
                       int token) {
  for (int c : index.children(token)) {
    const std::string& dep = doc.tokens[c].dep;
    if (dep == "nsubjpass" || dep == "auxpass" || dep == "agent") return true;
  }
  return false;
}

bool entity_or_pron(const ParsedDocument& doc,
                    const std::unordered_set<int>& entity_tokens, int token) {
  return entity_tokens.count(token) || doc.tokens[token].pos == "PRON";
}

bool subject_token(const ParsedDocument& doc,
                   const std::unordered_set<int>& entity_tokens, int token) {
  const std::string& dep = doc.tokens[token].dep;
  return (dep == "nsubj" || dep == "nsubjpass") &&
         entity_or_pron(doc, entity_tokens, token);
}

// A token the object-of-preposition descent may pass through; it becomes a
// modifier of the relation.
bool path_token(const ParsedDocument& doc, const Lexicon& lex, int token) {
  const std::string& dep = doc.tokens[token].dep;
  const std::string& pos = doc.tokens[token].pos;
  bool shape_ok = (dep == "prep" && pos == "ADP") ||
                  (dep == "prt" && pos == "ADP") ||
                  (dep == "advmod" && pos == "ADV") ||
                  (dep == "conj" && pos == "ADV") ||
                  (dep == "conj" && pos == "ADP");
  if (!shape_ok) return false;
  if (pos == "ADP") return lex.is_preposition(doc.tokens[token].text);
  return lex.is_word(doc.tokens[token].text, PosClass::Adverb);
}

// Splits a modifier path on coordinating conjunctions: the finding without
// the conj token, and the finding without the conj token's parent.
void split_on_conj(const ParsedDocument& doc, int object,
                   std::vector<int> path, std::size_t scan_from,
                   std::vector<ObjectFinding>& out) {
  std::size_t pos = scan_from;
  while (pos < path.size() && doc.tokens[path[pos]].dep != "conj") ++pos;
  if (pos == path.size()) {
    out.push_back({object, std::move(path)});
    return;
  }

  int conj = path[pos];
  std::vector<int> without_conj = path;
  without_conj.erase(without_conj.begin() + static_cast<long>(pos));
  split_on_conj(doc, object, std::move(without_conj), pos, out);

  int parent = doc.tokens[conj].head;
  auto pit = std::find(path.begin(), path.end(), parent);
  if (pit != path.end()) {
    std::vector<int> without_parent = path;
    without_parent.erase(without_parent.begin() + (pit - path.begin()));
    split_on_conj(doc, object, std::move(without_parent), pos, out);
  } else {
    split_on_conj(doc, object, std::move(path), pos + 1, out);
  }
}

void find_objects_of_prepositions(const ParsedDocument& doc,
                                  const DocIndex& index,
                                  const std::unordered_set<int>& entity_tokens,
                                  const Lexicon& lex, int token,
                                  std::vector<int>& path,
                                  std::vector<ObjectFinding>& out) {
  for (int c : index.children(token)) {
    if (!path.empty() && doc.tokens[c].dep == "pobj" &&
        entity_or_pron(doc, entity_tokens, c)) {
      split_on_conj(doc, c, path, 0, out);
    } else if (path_token(doc, lex, c)) {
      path.push_back(c);
      find_objects_of_prepositions(doc, index, entity_tokens, lex, c, path, out);
      path.pop_back();
    }
  }
}

}  // namespace

std::vector<int> find_verbs(const ParsedDocument& doc, const DocIndex& index,
                            const Lexicon& lex) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(doc.tokens.size()); ++i) {
    const Token& t = doc.tokens[i];
    if (t.pos != "VERB" && t.pos != "AUX") continue;
    if (has_passive_child(doc, index, i)) continue;
    if (!lex.is_word(t.text, PosClass::Verb)) continue;
    out.push_back(i);
  }
  return out;
}

std::optional<int> find_subject(int verb, const ParsedDocument& doc,
                                const DocIndex& index,
                                const std::unordered_set<int>& entity_tokens) {
  // (1) nominal subject
  for (int c : index.children(verb)) {
    if (doc.tokens[c].dep == "nsubj" && entity_or_pron(doc, entity_tokens, c))
      return c;
  }

  // (2) participle modifying an entity or pronoun
  int parent = doc.tokens[verb].head;
  if (doc.tokens[verb].dep == "acl" && parent != verb &&
      entity_or_pron(doc, entity_tokens, parent)) {
    return parent;
  }

  // (3) walk the ancestors; nsubjpass counts here because the subject of a
  // passive verb can act for a non-passive verb later in the sentence
  int t = parent;
  int hops = static_cast<int>(doc.tokens.size());
  while (hops-- > 0) {
    if (subject_token(doc, entity_tokens, t)) return t;
    for (int c : index.children(t)) {
      if (subject_token(doc, entity_tokens, c)) return c;
    }
    int next = doc.tokens[t].head;
    if (next == t) return std::nullopt;
    t = next;
  }
  return std::nullopt;
}

std::vector<ObjectFinding> find_objects(
    int verb, const ParsedDocument& doc, const DocIndex& index,
    const std::unordered_set<int>& entity_tokens, const Lexicon& lex) {
  std::vector<ObjectFinding> out;

  // (1) direct objects
  for (int c : index.children(verb)) {
    if (doc.tokens[c].dep == "dobj" && entity_or_pron(doc, entity_tokens, c))
      out.push_back({c, {}});
  }

  // (2) objects of prepositions
  std::vector<int> path;
  find_objects_of_prepositions(doc, index, entity_tokens, lex, verb, path, out);

  // (3) leaf modifiers of the verb, appended to every finding
  for (int c : index.children(verb)) {
    const Token& t = doc.tokens[c];
    bool leaf_shape = (t.dep == "prt" || t.dep == "prep") && t.pos == "ADP";
    if (!leaf_shape || !index.children(c).empty()) continue;
    if (!lex.is_preposition(t.text)) continue;
    for (ObjectFinding& f : out) f.modifiers.push_back(c);
  }

  for (ObjectFinding& f : out)
    std::sort(f.modifiers.begin(), f.modifiers.end());
  return out;
}

std::vector<int> expand_conjuncts(int token, const ParsedDocument& doc,
                                  const DocIndex& index,
                                  const std::unordered_set<int>& entity_tokens) {
  std::vector<int> out{token};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int c : index.children(out[i])) {
      if (doc.tokens[c].dep == "conj" && entity_or_pron(doc, entity_tokens, c))
        out.push_back(c);
    }
  }
  return out;
}

std::vector<Relation> extract_relations(const ParsedDocument& doc,
                                        const Lexicon& lex,
                                        RelationLevel level) {
  DocIndex index(doc);
  std::vector<NounMention> mentions = detect_noun_mentions(doc, index, lex);
  std::map<int, std::size_t> pronoun_map = resolve_pronouns(doc, mentions);

  std::unordered_set<int> entity_tokens;
  std::map<int, std::size_t> mention_of;  // entity token -> mention index
  for (std::size_t mi = 0; mi < mentions.size(); ++mi) {
    for (int t : mentions[mi].token_indices) {
      entity_tokens.insert(t);
      mention_of[t] = mi;
    }
  }

  // Entity tokens map to their mention's name; pronouns resolve through the
  // coreference map or are dropped.
  auto resolve_names = [&](const std::vector<int>& tokens) {
    std::vector<std::string> names;
    for (int t : tokens) {
      if (auto it = mention_of.find(t); it != mention_of.end()) {
        names.push_back(mentions[it->second].name);
      } else if (auto pit = pronoun_map.find(t); pit != pronoun_map.end()) {
        names.push_back(mentions[pit->second].name);
      }
    }
    return names;
  };

  std::vector<Relation> out;
  std::set<std::tuple<std::vector<std::string>, std::string,
                      std::vector<std::string>, std::vector<std::string>>>
      seen;

  for (int verb : find_verbs(doc, index, lex)) {
    std::optional<int> subject = find_subject(verb, doc, index, entity_tokens);
    if (!subject) continue;
    std::vector<ObjectFinding> findings =
        find_objects(verb, doc, index, entity_tokens, lex);
    if (findings.empty()) continue;

    std::vector<std::string> subjects =
        resolve_names(expand_conjuncts(*subject, doc, index, entity_tokens));
    if (subjects.empty()) continue;

    for (const ObjectFinding& finding : findings) {
      std::vector<std::string> objects = resolve_names(
          expand_conjuncts(finding.object, doc, index, entity_tokens));
      if (objects.empty()) continue;

      Relation r;
      r.subjects = subjects;
      r.verb = lex.lemma(doc.tokens[verb].text, PosClass::Verb);
      for (int m : finding.modifiers)
        r.modifiers.push_back(to_lower(doc.tokens[m].text));
      r.objects = std::move(objects);

      if (level == RelationLevel::Event) {
        int sid = doc.tokens[verb].sentence_id;
        if (sid < 0 || sid >= static_cast<int>(doc.sentence_segments.size()))
          continue;
        r.segment = doc.sentence_segments[sid];
      } else {
        if (!seen.emplace(r.subjects, r.verb, r.modifiers, r.objects).second)
          continue;
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace vcmeta
