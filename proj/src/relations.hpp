#ifndef VCMETA_RELATIONS_HPP
#define VCMETA_RELATIONS_HPP

#include <optional>
#include <unordered_set>
#include <vector>

#include "document_index.hpp"
#include "lexicon.hpp"
#include "types.hpp"

namespace vcmeta {

/// An object token together with the modifier tokens (particles,
/// prepositions, adverbs) connecting it to its verb, in sentence order.
struct ObjectFinding {
  int object = 0;
  std::vector<int> modifiers;
};

enum class RelationLevel { Video, Event };

/// Non-passive verbs: tokens tagged VERB or AUX without a child labeled
/// nsubjpass, auxpass, or agent, whose form or lemma is a lexicon verb.
std::vector<int> find_verbs(const ParsedDocument& doc, const DocIndex& index,
                            const Lexicon& lex);

/// Subject of a verb: an nsubj child that is an entity token or pronoun;
/// else, for an acl-attached participle, its entity/pronoun parent; else the
/// first nsubj/nsubjpass entity-or-pronoun found walking up the ancestors,
/// checking each ancestor and its children. Empty when the root is
/// exhausted.
std::optional<int> find_subject(int verb, const ParsedDocument& doc,
                                const DocIndex& index,
                                const std::unordered_set<int>& entity_tokens);

/// Objects of a verb with their modifiers: direct objects (dobj children
/// that are entity/pronoun) come with no modifiers; objects of prepositions
/// are reached by descending through tokens whose (dep, tag) is one of
/// (prep, ADP), (prt, ADP), (advmod, ADV), (conj, ADV), (conj, ADP) — ADP
/// path tokens must be listed prepositions, ADV path tokens lexicon adverbs
/// — ending at a pobj entity/pronoun; the path tokens become modifiers. A
/// conj token on the path splits the finding in two: one without the conj
/// token and one without its parent. Childless prt/prep ADP children of the
/// verb are appended to every finding's modifiers.
std::vector<ObjectFinding> find_objects(
    int verb, const ParsedDocument& doc, const DocIndex& index,
    const std::unordered_set<int>& entity_tokens, const Lexicon& lex);

/// The token plus every entity-or-pronoun child labeled conj, recursively.
std::vector<int> expand_conjuncts(int token, const ParsedDocument& doc,
                                  const DocIndex& index,
                                  const std::unordered_set<int>& entity_tokens);

/// Full relation extraction: candidate verbs, subjects, objects and
/// modifiers, conjunct expansion, pronoun resolution (unresolved pronouns
/// are dropped from subject/object lists), and assembly. Relations left
/// without a subject or an object are discarded. Names and verbs are
/// emitted as lemmas. Event level attaches the verb's sentence segment;
/// video level deduplicates complete tuples.
std::vector<Relation> extract_relations(const ParsedDocument& doc,
                                        const Lexicon& lex,
                                        RelationLevel level);

}  // namespace vcmeta

#endif  // VCMETA_RELATIONS_HPP
