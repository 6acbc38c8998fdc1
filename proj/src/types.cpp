#include "types.hpp"

#include <algorithm>

namespace vcmeta {

double tiou(const TemporalSegment& a, const TemporalSegment& b) {
  double inter = std::max(0.0, std::min(a.end, b.end) - std::max(a.start, b.start));
  double uni = a.length() + b.length() - inter;
  if (uni <= 0.0) return a == b ? 1.0 : 0.0;
  return inter / uni;
}

const char* to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::DanglingHead: return "DanglingHead";
    case IssueKind::Cycle: return "CycleError";
    case IssueKind::MultipleRoots: return "MultipleRoots";
    case IssueKind::BadSentenceId: return "BadSentenceId";
    case IssueKind::MissingSegment: return "MissingSegment";
    case IssueKind::BadSegment: return "BadSegment";
    case IssueKind::BadMention: return "BadMention";
  }
  return "Unknown";
}

namespace {

void check_sentence_ids(const ParsedDocument& doc,
                        std::vector<ValidationIssue>& issues) {
  int prev = -1;
  for (int i = 0; i < static_cast<int>(doc.tokens.size()); ++i) {
    int sid = doc.tokens[i].sentence_id;
    if (sid < 0 || sid < prev || sid > prev + 1) {
      issues.push_back({IssueKind::BadSentenceId, i,
                        "sentence ids must be contiguous from 0 in token order"});
    }
    prev = std::max(prev, sid);
  }
}

void check_heads(const ParsedDocument& doc,
                 std::vector<ValidationIssue>& issues) {
  const int n = static_cast<int>(doc.tokens.size());
  for (int i = 0; i < n; ++i) {
    int h = doc.tokens[i].head;
    if (h < 0 || h >= n) {
      issues.push_back({IssueKind::DanglingHead, i, "head index out of range"});
    } else if (doc.tokens[h].sentence_id != doc.tokens[i].sentence_id) {
      issues.push_back({IssueKind::DanglingHead, i, "head in another sentence"});
    }
  }
}

void check_roots(const ParsedDocument& doc,
                 std::vector<ValidationIssue>& issues) {
  std::vector<int> first_root(doc.sentence_count(), -1);
  for (int i = 0; i < static_cast<int>(doc.tokens.size()); ++i) {
    const Token& t = doc.tokens[i];
    if (t.head != i) continue;
    int sid = t.sentence_id;
    if (sid < 0 || sid >= static_cast<int>(first_root.size())) continue;
    if (first_root[sid] < 0) {
      first_root[sid] = i;
    } else {
      issues.push_back({IssueKind::MultipleRoots, i,
                        "sentence already rooted at token " +
                            std::to_string(first_root[sid])});
    }
  }
}

void check_cycles(const ParsedDocument& doc,
                  std::vector<ValidationIssue>& issues) {
  enum Color : unsigned char { White, Gray, Black };
  const int n = static_cast<int>(doc.tokens.size());
  std::vector<Color> color(n, White);
  std::vector<int> chain;
  for (int i = 0; i < n; ++i) {
    if (color[i] != White) continue;
    chain.clear();
    int j = i;
    while (true) {
      if (color[j] == Gray) {
        issues.push_back({IssueKind::Cycle, j, "head links form a cycle"});
        break;
      }
      if (color[j] == Black) break;
      color[j] = Gray;
      chain.push_back(j);
      int h = doc.tokens[j].head;
      if (h < 0 || h >= n || h == j) break;  // dangling reported elsewhere
      j = h;
    }
    for (int t : chain) color[t] = Black;
  }
}

void check_segments(const ParsedDocument& doc,
                    std::vector<ValidationIssue>& issues) {
  int sentences = doc.sentence_count();
  for (int sid = 0; sid < sentences; ++sid) {
    if (sid >= static_cast<int>(doc.sentence_segments.size())) {
      issues.push_back({IssueKind::MissingSegment, sid,
                        "sentence has no segment entry"});
    } else if (!doc.sentence_segments[sid].valid()) {
      issues.push_back({IssueKind::BadSegment, sid,
                        "segment must be finite with 0 <= start <= end"});
    }
  }
}

void check_mentions(const ParsedDocument& doc,
                    std::vector<ValidationIssue>& issues) {
  const int n = static_cast<int>(doc.tokens.size());
  for (const auto& cluster : doc.coref_clusters) {
    for (const MentionSpan& span : cluster) {
      if (span.first < 0 || span.last >= n || span.first > span.last) {
        issues.push_back({IssueKind::BadMention, span.first,
                          "mention span out of range"});
        continue;
      }
      int sid = doc.tokens[span.first].sentence_id;
      for (int t = span.first + 1; t <= span.last; ++t) {
        if (doc.tokens[t].sentence_id != sid) {
          issues.push_back({IssueKind::BadMention, span.first,
                            "mention crosses a sentence boundary"});
          break;
        }
      }
    }
  }
}

}  // namespace

std::vector<ValidationIssue> validate_document(const ParsedDocument& doc) {
  std::vector<ValidationIssue> issues;
  check_sentence_ids(doc, issues);
  check_heads(doc, issues);
  check_roots(doc, issues);
  check_cycles(doc, issues);
  check_segments(doc, issues);
  check_mentions(doc, issues);
  return issues;
}

}  // namespace vcmeta
