#include <doctest.h>

#include <sstream>

#include "errors.hpp"
#include "fixtures.hpp"
#include "lexicon.hpp"

using namespace vcmeta;
using vcmeta::testing::repo_lexicon;

namespace {

Lexicon from_string(const std::string& text) {
  std::istringstream in(text);
  return Lexicon::parse(in, "<memory>");
}

}  // namespace

TEST_CASE("minimal file with one noun") {
  Lexicon lex = from_string("W\tnoun\tman\n");
  CHECK(lex.entry_count(PosClass::Noun) == 1);
  CHECK(lex.is_word("man", PosClass::Noun));
  CHECK(!lex.is_word("man", PosClass::Verb));
}

TEST_CASE("exception entries override lemmatization") {
  Lexicon lex = from_string(
      "W\tnoun\tman\n"
      "L\tnoun\tmen\tmen_wrong\n"
      "W\tnoun\tmen_wrong\n"
      "X\tmen\tman\n");
  CHECK(lex.lemma("men", PosClass::Noun) == "man");
}

TEST_CASE("lemma map targeting an absent lemma is an invariant error") {
  CHECK_THROWS_AS(from_string("L\tnoun\tmen\tman\n"), InvariantError);
}

TEST_CASE("malformed lines carry the line number") {
  try {
    from_string("W\tnoun\tman\nW\tnoun\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
  CHECK_THROWS_AS(from_string("Q\tnoun\tman\n"), ParseError);
  CHECK_THROWS_AS(from_string("W\tpronoun\tman\n"), ParseError);
}

TEST_CASE("comments, blank lines, and CRLF are tolerated") {
  Lexicon lex = from_string("# comment\n\nW\tnoun\tman\r\n");
  CHECK(lex.is_word("man", PosClass::Noun));
}

TEST_CASE("loading a missing file fails") {
  CHECK_THROWS_AS(Lexicon::load("/nonexistent/lexicon.txt"), ParseError);
}

TEST_CASE("repo lexicon: words and lemmas") {
  const Lexicon& lex = repo_lexicon();
  CHECK(lex.is_word("men", PosClass::Noun));
  CHECK(lex.is_word("living_room", PosClass::Noun));
  CHECK(!lex.is_word("qzqzqz", PosClass::Noun));

  CHECK(lex.lemma("men", PosClass::Noun) == "man");
  CHECK(lex.lemma("man", PosClass::Noun) == "man");
  CHECK(lex.lemma("catches", PosClass::Verb) == "catch");
  CHECK(lex.lemma("Takes", PosClass::Verb) == "take");
  CHECK(lex.lemma("unknownword", PosClass::Noun) == "unknownword");
}

TEST_CASE("repo lexicon: synonyms") {
  const Lexicon& lex = repo_lexicon();
  CHECK(lex.are_synonyms("person", "person", PosClass::Noun));
  CHECK(lex.are_synonyms("person", "individual", PosClass::Noun));
  CHECK(lex.are_synonyms("stand_up", "get_up", PosClass::Verb));
  CHECK(lex.are_synonyms("go_in", "enter", PosClass::Verb));
  CHECK(!lex.are_synonyms("person", "individual", PosClass::Verb));
  CHECK(!lex.are_synonyms("man", "woman", PosClass::Noun));
}

TEST_CASE("repo lexicon: prepositions are case-insensitive") {
  const Lexicon& lex = repo_lexicon();
  CHECK(lex.is_preposition("with"));
  CHECK(lex.is_preposition("To"));
  CHECK(lex.is_preposition("up"));
  CHECK(!lex.is_preposition("banana"));
  CHECK(lex.preposition_count() >= 60);
}

TEST_CASE("synonymy is symmetric and reflexive across fixture pairs") {
  const Lexicon& lex = repo_lexicon();
  const char* words[] = {"person", "individual", "man",   "kid",
                         "child",  "enter",      "go_in", "red"};
  PosClass classes[] = {PosClass::Noun, PosClass::Verb, PosClass::Adjective};
  for (PosClass pos : classes) {
    for (const char* a : words) {
      CHECK(lex.are_synonyms(a, a, pos));
      for (const char* b : words) {
        CHECK(lex.are_synonyms(a, b, pos) == lex.are_synonyms(b, a, pos));
      }
    }
  }
}

TEST_CASE("lemma is idempotent over the whole fixture vocabulary") {
  Lexicon lex = from_string(
      "W\tnoun\tman\nW\tnoun\tpan\nW\tverb\tbe\n"
      "L\tnoun\tpans\tpan\nL\tverb\tis\tbe\nX\tmen\tman\n");
  const char* forms[] = {"man", "men", "pans", "pan", "is", "be", "other"};
  for (PosClass pos : {PosClass::Noun, PosClass::Verb}) {
    for (const char* f : forms) {
      std::string once = lex.lemma(f, pos);
      CHECK(lex.lemma(once, pos) == once);
    }
  }
}

TEST_CASE("is_word holds for every entry lemma") {
  Lexicon lex = from_string(
      "W\tnoun\tman\nW\tnoun\tliving_room\nW\tverb\tcatch\n"
      "L\tverb\tcatches\tcatch\n");
  CHECK(lex.is_word("man", PosClass::Noun));
  CHECK(lex.is_word("living_room", PosClass::Noun));
  CHECK(lex.is_word("catch", PosClass::Verb));
  CHECK(lex.is_word("catches", PosClass::Verb));
  CHECK(lex.contains_lemma("catch", PosClass::Verb));
  CHECK(!lex.contains_lemma("catches", PosClass::Verb));
}
