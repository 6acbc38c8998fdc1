#ifndef VCMETA_TESTS_FIXTURES_HPP
#define VCMETA_TESTS_FIXTURES_HPP

#include <string>

#include "doc_builder.hpp"
#include "lexicon.hpp"
#include "types.hpp"

namespace vcmeta::testing {

inline const Lexicon& repo_lexicon() {
  static Lexicon lex =
      Lexicon::load(std::string(VCMETA_SOURCE_DIR) + "/data/lexicon.txt");
  return lex;
}

// "A man is standing in front of a fridge. He opens it and takes out a red
// glass." with coreference clusters man<-He and fridge<-it.
inline ParsedDocument fridge_document() {
  DocBuilder b;
  b.sentence({0.0, 12.0},
             {{"A", "DET", "det", 1},
              {"man", "NOUN", "nsubj", 3},
              {"is", "AUX", "aux", 3},
              {"standing", "VERB", "ROOT", 3},
              {"in", "ADP", "prep", 3},
              {"front", "NOUN", "pobj", 4},
              {"of", "ADP", "prep", 5},
              {"a", "DET", "det", 8},
              {"fridge", "NOUN", "pobj", 6},
              {".", "PUNCT", "punct", 3}});
  b.sentence({10.0, 25.0},
             {{"He", "PRON", "nsubj", 1},
              {"opens", "VERB", "ROOT", 1},
              {"it", "PRON", "dobj", 1},
              {"and", "CCONJ", "cc", 1},
              {"takes", "VERB", "conj", 1},
              {"out", "ADP", "prt", 4},
              {"a", "DET", "det", 8},
              {"red", "ADJ", "amod", 8},
              {"glass", "NOUN", "dobj", 4},
              {".", "PUNCT", "punct", 1}});
  b.cluster({{1, 1}, {10, 10}});  // man <- He
  b.cluster({{8, 8}, {12, 12}});  // fridge <- it
  return b.build();
}

// "The girl catches up with the other kids."
inline ParsedDocument girl_catches_document() {
  DocBuilder b;
  b.sentence({3.0, 9.0},
             {{"The", "DET", "det", 1},
              {"girl", "NOUN", "nsubj", 2},
              {"catches", "VERB", "ROOT", 2},
              {"up", "ADP", "prt", 2},
              {"with", "ADP", "prep", 2},
              {"the", "DET", "det", 7},
              {"other", "ADJ", "amod", 7},
              {"kids", "NOUN", "pobj", 4},
              {".", "PUNCT", "punct", 2}});
  return b.build();
}

// "A boy and a girl are seen playing football."
inline ParsedDocument boy_girl_football_document() {
  DocBuilder b;
  b.sentence({0.0, 18.0},
             {{"A", "DET", "det", 1},
              {"boy", "NOUN", "nsubjpass", 6},
              {"and", "CCONJ", "cc", 1},
              {"a", "DET", "det", 4},
              {"girl", "NOUN", "conj", 1},
              {"are", "AUX", "auxpass", 6},
              {"seen", "VERB", "ROOT", 6},
              {"playing", "VERB", "xcomp", 6},
              {"football", "NOUN", "dobj", 7},
              {".", "PUNCT", "punct", 6}});
  return b.build();
}

// "A child is seen riding a skateboard." with riding attached to child
// as a clausal modifier.
inline ParsedDocument child_skateboard_document() {
  DocBuilder b;
  b.sentence({2.0, 8.0},
             {{"A", "DET", "det", 1},
              {"child", "NOUN", "nsubjpass", 3},
              {"is", "AUX", "auxpass", 3},
              {"seen", "VERB", "ROOT", 3},
              {"riding", "VERB", "acl", 1},
              {"a", "DET", "det", 6},
              {"skateboard", "NOUN", "dobj", 4},
              {".", "PUNCT", "punct", 3}});
  return b.build();
}

}  // namespace vcmeta::testing

#endif  // VCMETA_TESTS_FIXTURES_HPP
