#ifndef VCMETA_IO_JSON_HPP
#define VCMETA_IO_JSON_HPP

#include <map>
#include <string>
#include <vector>

#include "evaluation.hpp"
#include "types.hpp"

namespace vcmeta {

/// One video's captioned events as read from a captions file.
struct VideoRecord {
  std::string video_id;
  double duration = 0.0;
  std::vector<CaptionedEvent> events;
};

/// All extraction results for one video.
struct VideoMetadata {
  std::vector<Entity> video_entities;
  std::vector<Entity> event_entities;
  std::vector<PropertyPair> properties;
  std::vector<Relation> video_relations;
  std::vector<Relation> event_relations;
};

using MetadataFile = std::map<std::string, VideoMetadata>;

/// Captions JSON: an object keyed by video id, each value carrying
/// "duration", parallel "timestamps" ([start, end] pairs) and "sentences"
/// arrays, and an optional parallel "confidences" array. Sentences are
/// trimmed on load. Segments reaching more than 0.5 s outside
/// [0, duration] are reported via `warnings`, not rejected.
std::vector<VideoRecord> load_captions(const std::string& path,
                                       std::vector<std::string>* warnings = nullptr);
void write_captions(const std::string& path,
                    const std::vector<VideoRecord>& records);

/// Parsed-document JSON: an object keyed by video id with "tokens" (objects
/// with index/text/lemma/pos/dep/head/sentence_id), "sentence_segments"
/// ([start, end] per sentence), and "clusters" (lists of [first, last]
/// token spans). Every document is validated; any violation raises
/// ValidationError.
std::map<std::string, ParsedDocument> load_parsed(const std::string& path);
void write_parsed(const std::string& path,
                  const std::map<std::string, ParsedDocument>& docs);

/// Metadata JSON: an object keyed by video id with the five sections
/// video_entities, event_entities, properties, video_relations,
/// event_relations — always present, possibly empty. Keys are sorted,
/// items are sorted, and segment values use fixed 6-decimal formatting, so
/// re-serialization is byte-identical.
void write_metadata(const std::string& path, const MetadataFile& metadata);
MetadataFile load_metadata(const std::string& path);

void write_freq_index(const std::string& path, const FrequencyIndex& index);
FrequencyIndex load_freq_index(const std::string& path);

/// Plain-text report: one `key value` metric per line.
std::string format_report(const EvalReport& report, const std::string& type);
void write_report(const std::string& path, const EvalReport& report,
                  const std::string& type);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace vcmeta

#endif  // VCMETA_IO_JSON_HPP
