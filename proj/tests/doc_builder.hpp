#ifndef VCMETA_TESTS_DOC_BUILDER_HPP
#define VCMETA_TESTS_DOC_BUILDER_HPP

#include <string>
#include <utility>
#include <vector>

#include "types.hpp"

namespace vcmeta::testing {

// Sentence-local token spec; heads are sentence-local and the root points
// at itself. The builder converts them to document-global indices.
struct Tok {
  std::string text;
  std::string pos;
  std::string dep;
  int head;
};

class DocBuilder {
 public:
  DocBuilder& sentence(TemporalSegment segment, std::vector<Tok> tokens) {
    int offset = static_cast<int>(doc_.tokens.size());
    int sid = static_cast<int>(doc_.sentence_segments.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      Token t;
      t.index = offset + static_cast<int>(i);
      t.text = std::move(tokens[i].text);
      t.pos = std::move(tokens[i].pos);
      t.dep = std::move(tokens[i].dep);
      t.head = offset + tokens[i].head;
      t.sentence_id = sid;
      doc_.tokens.push_back(std::move(t));
    }
    doc_.sentence_segments.push_back(segment);
    last_offset_ = offset;
    return *this;
  }

  // Spans are document-global [first, last] pairs.
  DocBuilder& cluster(std::vector<std::pair<int, int>> spans) {
    std::vector<MentionSpan> mentions;
    for (auto [first, last] : spans) mentions.push_back({first, last});
    doc_.coref_clusters.push_back(std::move(mentions));
    return *this;
  }

  // Document-global index of token `local` in the last added sentence.
  int last(int local) const { return last_offset_ + local; }

  ParsedDocument build() const { return doc_; }

 private:
  ParsedDocument doc_;
  int last_offset_ = 0;
};

}  // namespace vcmeta::testing

#endif  // VCMETA_TESTS_DOC_BUILDER_HPP
