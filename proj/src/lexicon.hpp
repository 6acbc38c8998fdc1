#ifndef VCMETA_LEXICON_HPP
#define VCMETA_LEXICON_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace vcmeta {

enum class PosClass { Noun = 0, Verb = 1, Adjective = 2, Adverb = 3 };

std::optional<PosClass> pos_class_from_string(std::string_view s);
const char* to_string(PosClass pos);

/// Offline WordNet-role lookups: POS-classed word membership, lemmatization
/// with a hard-coded exception map, synonym sets, and a preposition list.
/// Loaded from a line-oriented, tab-separated data file with record kinds
///
///   W <pos> <lemma>              word entry
///   L <pos> <surface> <lemma>    lemmatization entry
///   X <surface> <lemma>          exception, overrides L entries
///   S <pos> <synset-id> <lemma>  synonym-set membership
///   P <form>                     preposition
///
/// where <pos> is one of noun, verb, adjective, adverb. Lines starting with
/// '#' and blank lines are skipped. All stored forms are lowercase; every
/// lookup lowercases its input. Immutable after load.
class Lexicon {
 public:
  static Lexicon load(const std::string& path);
  static Lexicon parse(std::istream& in, const std::string& origin);

  /// True iff the lowercased form or its lemma is a word of the class.
  bool is_word(std::string_view form, PosClass pos) const;

  /// Exception entry first, then the (form, pos) lemmatization entry, then
  /// the lowercased form itself.
  std::string lemma(std::string_view form, PosClass pos) const;

  /// True iff equal after lowercasing or sharing a synset id for the class.
  bool are_synonyms(std::string_view a, std::string_view b, PosClass pos) const;

  bool is_preposition(std::string_view form) const;

  /// Membership of the exact lemma, without the lemma fallback of is_word.
  bool contains_lemma(std::string_view lemma_form, PosClass pos) const;

  std::size_t entry_count(PosClass pos) const;
  std::size_t preposition_count() const { return prepositions_.size(); }

 private:
  static std::size_t slot(PosClass pos) { return static_cast<std::size_t>(pos); }

  std::array<std::unordered_set<std::string>, 4> entries_;
  std::array<std::unordered_map<std::string, std::string>, 4> lemma_map_;
  std::unordered_map<std::string, std::string> exceptions_;
  std::array<std::unordered_map<std::string, std::vector<std::string>>, 4> synsets_;
  std::unordered_set<std::string> prepositions_;
};

}  // namespace vcmeta

#endif  // VCMETA_LEXICON_HPP
