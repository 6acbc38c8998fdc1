#ifndef VCMETA_TYPES_HPP
#define VCMETA_TYPES_HPP

#include <cmath>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"

namespace vcmeta {

/// Time interval in seconds. A valid segment is finite, starts at or after
/// zero, and has start <= end. Zero-length segments are allowed.
struct TemporalSegment {
  double start = 0.0;
  double end = 0.0;

  double length() const { return end - start; }
  bool valid() const {
    return std::isfinite(start) && std::isfinite(end) && start >= 0.0 &&
           start <= end;
  }

  friend bool operator==(const TemporalSegment& a, const TemporalSegment& b) {
    return a.start == b.start && a.end == b.end;
  }
  friend bool operator<(const TemporalSegment& a, const TemporalSegment& b) {
    return std::tie(a.start, a.end) < std::tie(b.start, b.end);
  }
};

/// Temporal intersection over union of two segments. Two identical
/// zero-length segments yield 1.0; any other pairing with an empty union
/// yields 0.0, keeping the result a true length ratio.
double tiou(const TemporalSegment& a, const TemporalSegment& b);

/// One unit of captioning output: a segment, the sentence describing it,
/// and an optional model confidence.
struct CaptionedEvent {
  TemporalSegment segment;
  std::string sentence;
  std::optional<double> confidence;
};

/// A parsed token. `index` and `head` are document-global; the root of a
/// sentence points at itself (head == index). `lemma` is the parser's lemma
/// hint and is carried through but not consulted by the extractors, which
/// use the lexicon's lemmatizer instead.
struct Token {
  int index = 0;
  std::string text;
  std::string lemma;
  std::string pos;   // Universal Dependencies tag, e.g. NOUN, VERB, ADP
  std::string dep;   // ClearNLP dependency label, e.g. nsubj, dobj, pobj
  int head = 0;
  int sentence_id = 0;
};

/// Contiguous token-index span [first, last], both inclusive.
struct MentionSpan {
  int first = 0;
  int last = 0;
};

/// The linguistic substrate for extraction: tokens with their dependency
/// tree, one segment per sentence, and coreference clusters whose mentions
/// are token spans. Immutable once validated.
struct ParsedDocument {
  std::vector<Token> tokens;
  std::vector<TemporalSegment> sentence_segments;  // indexed by sentence_id
  std::vector<std::vector<MentionSpan>> coref_clusters;

  int sentence_count() const {
    return tokens.empty() ? 0 : tokens.back().sentence_id + 1;
  }
};

enum class IssueKind {
  DanglingHead,    // head outside the token's sentence or out of range
  Cycle,           // head links form a cycle
  MultipleRoots,   // more than one self-headed token in a sentence
  BadSentenceId,   // sentence ids not contiguous from 0 in reading order
  MissingSegment,  // sentence without a segment entry
  BadSegment,      // segment violates the TemporalSegment invariants
  BadMention,      // mention span out of range or crossing a sentence
};

const char* to_string(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  int index;  // offending token index, sentence id, or mention start
  std::string detail;
};

/// Checks every ParsedDocument invariant and returns the complete list of
/// violations; an empty result means the document is well-formed.
std::vector<ValidationIssue> validate_document(const ParsedDocument& doc);

struct ValidationError : Error {
  ValidationError(std::string message, std::vector<ValidationIssue> found)
      : Error(std::move(message)), issues(std::move(found)) {}
  std::vector<ValidationIssue> issues;
};

/// An extracted entity. Event-level entities carry the segment of the
/// sentence naming them; video-level entities carry none.
struct Entity {
  std::string name;
  std::optional<TemporalSegment> segment;

  friend bool operator==(const Entity& a, const Entity& b) {
    return a.name == b.name && a.segment == b.segment;
  }
  friend bool operator<(const Entity& a, const Entity& b) {
    return std::tie(a.name, a.segment) < std::tie(b.name, b.segment);
  }
};

struct PropertyPair {
  std::string entity;
  std::string property;

  friend bool operator==(const PropertyPair& a, const PropertyPair& b) {
    return a.entity == b.entity && a.property == b.property;
  }
  friend bool operator<(const PropertyPair& a, const PropertyPair& b) {
    return std::tie(a.entity, a.property) < std::tie(b.entity, b.property);
  }
};

/// The 4-tuple (subjects, verb, modifiers, objects), all in lemma form,
/// plus a segment at event level.
struct Relation {
  std::vector<std::string> subjects;
  std::string verb;
  std::vector<std::string> modifiers;
  std::vector<std::string> objects;
  std::optional<TemporalSegment> segment;

  friend bool operator==(const Relation& a, const Relation& b) {
    return std::tie(a.subjects, a.verb, a.modifiers, a.objects, a.segment) ==
           std::tie(b.subjects, b.verb, b.modifiers, b.objects, b.segment);
  }
  friend bool operator<(const Relation& a, const Relation& b) {
    return std::tie(a.subjects, a.verb, a.modifiers, a.objects, a.segment) <
           std::tie(b.subjects, b.verb, b.modifiers, b.objects, b.segment);
  }
};

}  // namespace vcmeta

#endif  // VCMETA_TYPES_HPP
