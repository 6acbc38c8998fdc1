#ifndef VCMETA_PROPERTIES_HPP
#define VCMETA_PROPERTIES_HPP

#include <vector>

#include "lexicon.hpp"
#include "types.hpp"

namespace vcmeta {

/// Harvests (entity, property) pairs: for every detected noun mention, each
/// `amod`-labeled child of any of its tokens whose form or lemma is a
/// lexicon adjective yields a pair. The property token's POS tag is not
/// filtered. Video level only; output is lemma-deduplicated.
std::vector<PropertyPair> extract_properties(const ParsedDocument& doc,
                                             const Lexicon& lex);

}  // namespace vcmeta

#endif  // VCMETA_PROPERTIES_HPP
