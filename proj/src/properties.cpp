#include "properties.hpp"

#include <set>

#include "document_index.hpp"
#include "entities.hpp"

namespace vcmeta {

std::vector<PropertyPair> extract_properties(const ParsedDocument& doc,
                                             const Lexicon& lex) {
  DocIndex index(doc);
  std::vector<PropertyPair> out;
  std::set<std::pair<std::string, std::string>> seen;

  for (const NounMention& m : detect_noun_mentions(doc, index, lex)) {
    for (int t : m.token_indices) {
      for (int c : index.children(t)) {
        if (doc.tokens[c].dep != "amod") continue;
        if (!lex.is_word(doc.tokens[c].text, PosClass::Adjective)) continue;
        std::string property = lex.lemma(doc.tokens[c].text, PosClass::Adjective);
        if (seen.emplace(m.name, property).second)
          out.push_back({m.name, std::move(property)});
      }
    }
  }
  return out;
}

}  // namespace vcmeta
