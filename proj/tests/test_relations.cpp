#include <doctest.h>

#include <algorithm>
#include <set>

#include "entities.hpp"
#include "fixtures.hpp"
#include "relations.hpp"

using namespace vcmeta;
using namespace vcmeta::testing;

namespace {

struct Prepared {
  ParsedDocument doc;
  DocIndex index;
  std::unordered_set<int> entity_tokens;

  explicit Prepared(ParsedDocument d) : doc(std::move(d)), index(doc) {
    for (const NounMention& m :
         detect_noun_mentions(doc, index, repo_lexicon())) {
      entity_tokens.insert(m.token_indices.begin(), m.token_indices.end());
    }
  }
};

int token_of(const ParsedDocument& doc, const std::string& text) {
  for (const Token& t : doc.tokens) {
    if (t.text == text) return t.index;
  }
  REQUIRE(false);
  return -1;
}

bool has_relation(const std::vector<Relation>& relations, const Relation& want) {
  return std::find(relations.begin(), relations.end(), want) != relations.end();
}

}  // namespace

TEST_CASE("find_verbs keeps active lexicon verbs only") {
  Prepared p(girl_catches_document());
  auto verbs = find_verbs(p.doc, p.index, repo_lexicon());
  CHECK(verbs == std::vector<int>{token_of(p.doc, "catches")});
}

TEST_CASE("find_verbs excludes passives via nsubjpass and auxpass children") {
  Prepared p(child_skateboard_document());
  auto verbs = find_verbs(p.doc, p.index, repo_lexicon());
  // "seen" has both an nsubjpass and an auxpass child; "is" and "riding" stay
  CHECK(std::find(verbs.begin(), verbs.end(), token_of(p.doc, "seen")) ==
        verbs.end());
  CHECK(std::find(verbs.begin(), verbs.end(), token_of(p.doc, "riding")) !=
        verbs.end());
}

TEST_CASE("find_verbs excludes verbs with an agent child and non-lexicon verbs") {
  DocBuilder b;
  b.sentence({0.0, 5.0},
             {{"chased", "VERB", "ROOT", 0},
              {"by", "ADP", "agent", 0},
              {"dogs", "NOUN", "pobj", 1},
              {"qzqzes", "VERB", "conj", 0}});
  Prepared p(b.build());
  CHECK(find_verbs(p.doc, p.index, repo_lexicon()).empty());
}

TEST_CASE("find_subject returns the nominal subject child") {
  Prepared p(girl_catches_document());
  auto subject = find_subject(token_of(p.doc, "catches"), p.doc, p.index,
                              p.entity_tokens);
  REQUIRE(subject.has_value());
  CHECK(*subject == token_of(p.doc, "girl"));
}

TEST_CASE("find_subject returns the entity parent of an acl participle") {
  Prepared p(child_skateboard_document());
  auto subject = find_subject(token_of(p.doc, "riding"), p.doc, p.index,
                              p.entity_tokens);
  REQUIRE(subject.has_value());
  CHECK(*subject == token_of(p.doc, "child"));
}

TEST_CASE("find_subject walks ancestors and accepts nsubjpass there") {
  Prepared p(boy_girl_football_document());
  auto subject = find_subject(token_of(p.doc, "playing"), p.doc, p.index,
                              p.entity_tokens);
  REQUIRE(subject.has_value());
  CHECK(*subject == token_of(p.doc, "boy"));
}

TEST_CASE("find_subject gives up at the root of a subject-less fragment") {
  DocBuilder b;
  b.sentence({0.0, 2.0},
             {{"Running", "VERB", "ROOT", 0},
              {"fast", "ADV", "advmod", 0},
              {".", "PUNCT", "punct", 0}});
  Prepared p(b.build());
  CHECK(!find_subject(0, p.doc, p.index, p.entity_tokens).has_value());
}

TEST_CASE("find_objects: direct object with no modifiers") {
  Prepared p(boy_girl_football_document());
  auto findings = find_objects(token_of(p.doc, "playing"), p.doc, p.index,
                               p.entity_tokens, repo_lexicon());
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].object == token_of(p.doc, "football"));
  CHECK(findings[0].modifiers.empty());
}

TEST_CASE("find_objects: preposition path plus leaf particle") {
  Prepared p(girl_catches_document());
  auto findings = find_objects(token_of(p.doc, "catches"), p.doc, p.index,
                               p.entity_tokens, repo_lexicon());
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].object == token_of(p.doc, "kids"));
  CHECK(findings[0].modifiers ==
        std::vector<int>{token_of(p.doc, "up"), token_of(p.doc, "with")});
}

TEST_CASE("find_objects: adverb path tokens must be lexicon adverbs") {
  DocBuilder b;
  b.sentence({0.0, 5.0},
             {{"A", "DET", "det", 1},
              {"man", "NOUN", "nsubj", 2},
              {"climbs", "VERB", "ROOT", 2},
              {"up", "ADV", "advmod", 2},
              {"the", "DET", "det", 5},
              {"hill", "NOUN", "pobj", 3},
              {".", "PUNCT", "punct", 2}});
  Prepared p(b.build());
  auto findings =
      find_objects(2, p.doc, p.index, p.entity_tokens, repo_lexicon());
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].object == 5);
  CHECK(findings[0].modifiers == std::vector<int>{3});
}

TEST_CASE("find_objects: verbs without reachable objects yield nothing") {
  DocBuilder b;
  b.sentence({0.0, 5.0},
             {{"A", "DET", "det", 1},
              {"man", "NOUN", "nsubj", 2},
              {"waves", "VERB", "ROOT", 2},
              {".", "PUNCT", "punct", 2}});
  Prepared p(b.build());
  CHECK(find_objects(2, p.doc, p.index, p.entity_tokens, repo_lexicon()).empty());
}

TEST_CASE("a conj modifier on the path splits the finding in two") {
  // "The cat runs in and out the house." with out conj-attached to in
  DocBuilder b;
  b.sentence({0.0, 5.0},
             {{"The", "DET", "det", 1},
              {"cat", "NOUN", "nsubj", 2},
              {"runs", "VERB", "ROOT", 2},
              {"in", "ADP", "prep", 2},
              {"and", "CCONJ", "cc", 3},
              {"out", "ADP", "conj", 3},
              {"the", "DET", "det", 7},
              {"house", "NOUN", "pobj", 5},
              {".", "PUNCT", "punct", 2}});
  Prepared p(b.build());
  auto findings =
      find_objects(2, p.doc, p.index, p.entity_tokens, repo_lexicon());
  REQUIRE(findings.size() == 2);
  CHECK(findings[0].object == 7);
  CHECK(findings[1].object == 7);
  CHECK(findings[0].modifiers == std::vector<int>{3});  // without the conj
  CHECK(findings[1].modifiers == std::vector<int>{5});  // without its parent

  auto relations = extract_relations(p.doc, repo_lexicon(), RelationLevel::Video);
  CHECK(has_relation(relations, {{"cat"}, "run", {"in"}, {"house"}, {}}));
  CHECK(has_relation(relations, {{"cat"}, "run", {"out"}, {"house"}, {}}));
  CHECK(relations.size() == 2);
}

TEST_CASE("expand_conjuncts collects chained entity conjuncts") {
  Prepared p(boy_girl_football_document());
  auto boys = expand_conjuncts(token_of(p.doc, "boy"), p.doc, p.index,
                               p.entity_tokens);
  CHECK(boys == std::vector<int>{token_of(p.doc, "boy"), token_of(p.doc, "girl")});

  auto lone = expand_conjuncts(token_of(p.doc, "football"), p.doc, p.index,
                               p.entity_tokens);
  CHECK(lone == std::vector<int>{token_of(p.doc, "football")});
}

TEST_CASE("expand_conjuncts walks a three-link chain") {
  DocBuilder b;
  b.sentence({0.0, 5.0},
             {{"man", "NOUN", "nsubj", 3},
              {"woman", "NOUN", "conj", 0},
              {"child", "NOUN", "conj", 1},
              {"wave", "VERB", "ROOT", 3}});
  Prepared p(b.build());

  // oracle: exhaustive traversal over conj edges from the seed
  std::set<int> expected{0};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Token& t : p.doc.tokens) {
      if (t.dep == "conj" && expected.count(t.head) && !expected.count(t.index) &&
          p.entity_tokens.count(t.index)) {
        expected.insert(t.index);
        grew = true;
      }
    }
  }
  auto chain = expand_conjuncts(0, p.doc, p.index, p.entity_tokens);
  CHECK(std::set<int>(chain.begin(), chain.end()) == expected);
  CHECK(chain == std::vector<int>{0, 1, 2});
}

TEST_CASE("girl catches up with the other kids") {
  auto relations = extract_relations(girl_catches_document(), repo_lexicon(),
                                     RelationLevel::Video);
  REQUIRE(relations.size() == 1);
  CHECK(relations[0] == Relation{{"girl"}, "catch", {"up", "with"}, {"kid"}, {}});
}

TEST_CASE("a boy and a girl are seen playing football") {
  auto relations = extract_relations(boy_girl_football_document(), repo_lexicon(),
                                     RelationLevel::Video);
  REQUIRE(relations.size() == 1);
  CHECK(relations[0] ==
        Relation{{"boy", "girl"}, "play", {}, {"football"}, {}});
}

TEST_CASE("passive verb is excluded but its subject serves the participle") {
  auto relations = extract_relations(child_skateboard_document(), repo_lexicon(),
                                     RelationLevel::Video);
  REQUIRE(relations.size() == 1);
  CHECK(relations[0] == Relation{{"child"}, "ride", {}, {"skateboard"}, {}});
}

TEST_CASE("fridge text relations with pronoun resolution") {
  auto relations =
      extract_relations(fridge_document(), repo_lexicon(), RelationLevel::Video);
  CHECK(has_relation(relations, {{"man"}, "stand", {"in"}, {"front"}, {}}));
  CHECK(has_relation(relations, {{"man"}, "open", {}, {"fridge"}, {}}));
  CHECK(has_relation(relations, {{"man"}, "take", {"out"}, {"glass"}, {}}));
  CHECK(relations.size() == 3);
}

TEST_CASE("unresolved subject pronoun drops the relation") {
  DocBuilder b;
  b.sentence({0.0, 5.0},
             {{"He", "PRON", "nsubj", 1},
              {"opens", "VERB", "ROOT", 1},
              {"the", "DET", "det", 3},
              {"door", "NOUN", "dobj", 1},
              {".", "PUNCT", "punct", 1}});
  CHECK(extract_relations(b.build(), repo_lexicon(), RelationLevel::Video).empty());
}

TEST_CASE("event relations carry the verb sentence segment") {
  auto relations =
      extract_relations(fridge_document(), repo_lexicon(), RelationLevel::Event);
  REQUIRE(relations.size() == 3);
  for (const Relation& r : relations) {
    REQUIRE(r.segment.has_value());
    if (r.verb == "stand") {
      CHECK(*r.segment == TemporalSegment{0.0, 12.0});
    } else {
      CHECK(*r.segment == TemporalSegment{10.0, 25.0});
    }
  }
}

TEST_CASE("video level deduplicates identical lemma tuples") {
  DocBuilder b;
  b.sentence({0.0, 4.0},
             {{"A", "DET", "det", 1},
              {"man", "NOUN", "nsubj", 2},
              {"opens", "VERB", "ROOT", 2},
              {"a", "DET", "det", 4},
              {"door", "NOUN", "dobj", 2},
              {".", "PUNCT", "punct", 2}});
  b.sentence({4.0, 8.0},
             {{"The", "DET", "det", 1},
              {"men", "NOUN", "nsubj", 2},
              {"open", "VERB", "ROOT", 2},
              {"doors", "NOUN", "dobj", 2},
              {".", "PUNCT", "punct", 2}});
  ParsedDocument doc = b.build();
  auto video = extract_relations(doc, repo_lexicon(), RelationLevel::Video);
  REQUIRE(video.size() == 1);
  CHECK(video[0] == Relation{{"man"}, "open", {}, {"door"}, {}});

  auto event = extract_relations(doc, repo_lexicon(), RelationLevel::Event);
  CHECK(event.size() == 2);  // distinct segments, kept per event
}

TEST_CASE("relation invariants over the fixture documents") {
  const Lexicon& lex = repo_lexicon();
  for (const ParsedDocument& doc :
       {fridge_document(), girl_catches_document(), boy_girl_football_document(),
        child_skateboard_document()}) {
    for (RelationLevel level : {RelationLevel::Video, RelationLevel::Event}) {
      for (const Relation& r : extract_relations(doc, lex, level)) {
        CHECK(!r.subjects.empty());
        CHECK(!r.objects.empty());
        CHECK(!r.verb.empty());
        for (const std::string& s : r.subjects)
          CHECK(lex.is_word(s, PosClass::Noun));
        for (const std::string& o : r.objects)
          CHECK(lex.is_word(o, PosClass::Noun));
        for (const std::string& m : r.modifiers)
          CHECK((lex.is_preposition(m) || lex.is_word(m, PosClass::Adverb)));
        CHECK((level == RelationLevel::Event) == r.segment.has_value());
      }
    }
  }
}
