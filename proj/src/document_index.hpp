#ifndef VCMETA_DOCUMENT_INDEX_HPP
#define VCMETA_DOCUMENT_INDEX_HPP

#include <vector>

#include "types.hpp"

namespace vcmeta {

/// Child lists of the dependency tree, built once per document. Children
/// are stored in token order; a root is not its own child.
class DocIndex {
 public:
  explicit DocIndex(const ParsedDocument& doc)
      : children_(doc.tokens.size()) {
    for (int i = 0; i < static_cast<int>(doc.tokens.size()); ++i) {
      int h = doc.tokens[i].head;
      if (h != i && h >= 0 && h < static_cast<int>(children_.size()))
        children_[h].push_back(i);
    }
  }

  const std::vector<int>& children(int token) const { return children_[token]; }

 private:
  std::vector<std::vector<int>> children_;
};

}  // namespace vcmeta

#endif  // VCMETA_DOCUMENT_INDEX_HPP
