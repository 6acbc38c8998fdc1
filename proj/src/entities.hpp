#ifndef VCMETA_ENTITIES_HPP
#define VCMETA_ENTITIES_HPP

#include <map>
#include <unordered_set>
#include <vector>

#include "document_index.hpp"
#include "lexicon.hpp"
#include "types.hpp"

namespace vcmeta {

/// A noun occurrence in the document: its lemma-form name (possibly a
/// compound), the tokens that form it, and the sentence they live in.
struct NounMention {
  std::string name;
  std::vector<int> token_indices;  // ascending
  int sentence_id = 0;
};

/// Finds compound nouns. For every token that is not itself labeled
/// `compound` but has `compound`-labeled children, the candidate token list
/// (the token plus its recursively collected compound children, in sentence
/// order) is joined with "_", "-", and "" in turn; the first join the
/// lexicon accepts as a noun wins. On failure the search recurses on the
/// sublists dropping the first and then the last token, while at least two
/// tokens and one NOUN/PROPN remain.
std::vector<NounMention> detect_compound_nouns(const ParsedDocument& doc,
                                               const DocIndex& index,
                                               const Lexicon& lex);

/// One mention per non-excluded NOUN/PROPN token whose form or lemma the
/// lexicon lists as a noun; the name is the lemma.
std::vector<NounMention> detect_simple_nouns(
    const ParsedDocument& doc, const Lexicon& lex,
    const std::unordered_set<int>& exclude);

/// Compound detection followed by simple-noun detection with compound
/// members excluded, merged in document order.
std::vector<NounMention> detect_noun_mentions(const ParsedDocument& doc,
                                              const DocIndex& index,
                                              const Lexicon& lex);

/// Maps each PRON token to the mention it corefers with, when some cluster
/// contains both a span covering the pronoun and a span overlapping the
/// mention's tokens. Several candidates resolve to the earliest mention.
/// Values index into `mentions`.
std::map<int, std::size_t> resolve_pronouns(
    const ParsedDocument& doc, const std::vector<NounMention>& mentions);

/// All detected noun names, lemma-deduplicated, without segments.
std::vector<Entity> extract_video_entities(const ParsedDocument& doc,
                                           const Lexicon& lex);

/// One entity per (name, sentence) pairing from noun mentions and resolved
/// pronouns, carrying that sentence's segment; identical (name, segment)
/// pairs collapse.
std::vector<Entity> extract_event_entities(const ParsedDocument& doc,
                                           const Lexicon& lex);

}  // namespace vcmeta

#endif  // VCMETA_ENTITIES_HPP
