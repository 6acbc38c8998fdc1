#include "lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "strutil.hpp"

namespace vcmeta {

std::optional<PosClass> pos_class_from_string(std::string_view s) {
  if (s == "noun") return PosClass::Noun;
  if (s == "verb") return PosClass::Verb;
  if (s == "adjective") return PosClass::Adjective;
  if (s == "adverb") return PosClass::Adverb;
  return std::nullopt;
}

const char* to_string(PosClass pos) {
  switch (pos) {
    case PosClass::Noun: return "noun";
    case PosClass::Verb: return "verb";
    case PosClass::Adjective: return "adjective";
    case PosClass::Adverb: return "adverb";
  }
  return "?";
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    if (tab == std::string::npos) {
      fields.emplace_back(line.substr(pos));
      return fields;
    }
    fields.emplace_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

[[noreturn]] void fail(const std::string& origin, int line_no,
                       const std::string& what) {
  throw ParseError(origin + ":" + std::to_string(line_no) + ": " + what);
}

PosClass parse_pos(const std::string& origin, int line_no,
                   const std::string& field) {
  auto pos = pos_class_from_string(field);
  if (!pos) fail(origin, line_no, "unknown pos class '" + field + "'");
  return *pos;
}

}  // namespace

Lexicon Lexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open lexicon file '" + path + "'");
  return parse(in, path);
}

Lexicon Lexicon::parse(std::istream& in, const std::string& origin) {
  Lexicon lex;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::vector<std::string> f = split_tabs(line);
    for (std::string& field : f) field = to_lower(trim(field));
    if (f[0].size() != 1) fail(origin, line_no, "unknown record kind");

    switch (f[0][0]) {
      case 'w': {
        if (f.size() != 3 || f[2].empty())
          fail(origin, line_no, "expected: W <pos> <lemma>");
        lex.entries_[slot(parse_pos(origin, line_no, f[1]))].insert(f[2]);
        break;
      }
      case 'l': {
        if (f.size() != 4 || f[2].empty() || f[3].empty())
          fail(origin, line_no, "expected: L <pos> <surface> <lemma>");
        lex.lemma_map_[slot(parse_pos(origin, line_no, f[1]))][f[2]] = f[3];
        break;
      }
      case 'x': {
        if (f.size() != 3 || f[1].empty() || f[2].empty())
          fail(origin, line_no, "expected: X <surface> <lemma>");
        lex.exceptions_[f[1]] = f[2];
        break;
      }
      case 's': {
        if (f.size() != 4 || f[2].empty() || f[3].empty())
          fail(origin, line_no, "expected: S <pos> <synset-id> <lemma>");
        auto& ids = lex.synsets_[slot(parse_pos(origin, line_no, f[1]))][f[3]];
        if (std::find(ids.begin(), ids.end(), f[2]) == ids.end())
          ids.push_back(f[2]);
        break;
      }
      case 'p': {
        if (f.size() != 2 || f[1].empty())
          fail(origin, line_no, "expected: P <form>");
        lex.prepositions_.insert(f[1]);
        break;
      }
      default:
        fail(origin, line_no, "unknown record kind '" + f[0] + "'");
    }
  }

  // Every lemmatization target must itself be a word of that class.
  for (std::size_t s = 0; s < 4; ++s) {
    for (const auto& [surface, target] : lex.lemma_map_[s]) {
      if (!lex.entries_[s].count(target)) {
        throw InvariantError(origin + ": lemma entry '" + surface + "' -> '" +
                             target + "' targets an unknown " +
                             to_string(static_cast<PosClass>(s)));
      }
    }
  }
  return lex;
}

bool Lexicon::is_word(std::string_view form, PosClass pos) const {
  const auto& words = entries_[slot(pos)];
  std::string lower = to_lower(form);
  if (words.count(lower)) return true;
  return words.count(lemma(lower, pos)) != 0;
}

std::string Lexicon::lemma(std::string_view form, PosClass pos) const {
  std::string lower = to_lower(form);
  if (auto it = exceptions_.find(lower); it != exceptions_.end())
    return it->second;
  const auto& map = lemma_map_[slot(pos)];
  if (auto it = map.find(lower); it != map.end()) return it->second;
  return lower;
}

bool Lexicon::are_synonyms(std::string_view a, std::string_view b,
                           PosClass pos) const {
  std::string la = to_lower(a);
  std::string lb = to_lower(b);
  if (la == lb) return true;
  const auto& sets = synsets_[slot(pos)];
  auto ia = sets.find(la);
  auto ib = sets.find(lb);
  if (ia == sets.end() || ib == sets.end()) return false;
  for (const std::string& id : ia->second) {
    if (std::find(ib->second.begin(), ib->second.end(), id) != ib->second.end())
      return true;
  }
  return false;
}

bool Lexicon::is_preposition(std::string_view form) const {
  return prepositions_.count(to_lower(form)) != 0;
}

bool Lexicon::contains_lemma(std::string_view lemma_form, PosClass pos) const {
  return entries_[slot(pos)].count(to_lower(lemma_form)) != 0;
}

std::size_t Lexicon::entry_count(PosClass pos) const {
  return entries_[slot(pos)].size();
}

}  // namespace vcmeta
