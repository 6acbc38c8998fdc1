#include "pipeline.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "entities.hpp"
#include "events.hpp"
#include "properties.hpp"
#include "relations.hpp"

namespace vcmeta {

namespace {

VideoMetadata extract_one(const VideoRecord& record, const ParsedDocument& doc,
                          const Lexicon& lex, const ExtractOptions& options,
                          std::vector<std::string>& warnings) {
  std::vector<CaptionedEvent> events = record.events;
  switch (options.mode) {
    case ExtractOptions::Select::TopK:
      events = select_top_k(events, options.k);
      break;
    case ExtractOptions::Select::DistinctK:
      events = select_distinct_k(events, options.k);
      break;
    case ExtractOptions::Select::None:
      break;
  }

  ProcessedVideo pv = process_video(record.video_id, events);
  if (doc.sentence_count() != static_cast<int>(pv.ordered_events.size())) {
    throw SentenceCountMismatchError(
        "video '" + record.video_id + "': parsed document has " +
        std::to_string(doc.sentence_count()) + " sentences but " +
        std::to_string(pv.ordered_events.size()) + " events were selected");
  }
  for (std::size_t i = 0; i < pv.sentence_segments.size(); ++i) {
    const TemporalSegment& parsed_seg = doc.sentence_segments[i];
    const TemporalSegment& caption_seg = pv.sentence_segments[i];
    if (std::fabs(parsed_seg.start - caption_seg.start) > 1e-6 ||
        std::fabs(parsed_seg.end - caption_seg.end) > 1e-6) {
      warnings.push_back("video '" + record.video_id + "': sentence " +
                         std::to_string(i) +
                         " segment differs between parsed and caption files; "
                         "using the parsed one");
      break;
    }
  }

  VideoMetadata md;
  md.video_entities = extract_video_entities(doc, lex);
  md.event_entities = extract_event_entities(doc, lex);
  md.properties = extract_properties(doc, lex);
  md.video_relations = extract_relations(doc, lex, RelationLevel::Video);
  md.event_relations = extract_relations(doc, lex, RelationLevel::Event);
  return md;
}

}  // namespace

MetadataFile run_extraction(const std::vector<VideoRecord>& captions,
                            const std::map<std::string, ParsedDocument>& parsed,
                            const Lexicon& lex, const ExtractOptions& options,
                            std::vector<std::string>* warnings) {
  if (options.mode != ExtractOptions::Select::None && options.k < 1)
    throw ArgumentError("extraction: selection requires k >= 1");

  struct Slot {
    const VideoRecord* record = nullptr;
    const ParsedDocument* doc = nullptr;
    VideoMetadata metadata;
    std::vector<std::string> warnings;
  };
  std::vector<Slot> slots(captions.size());
  for (std::size_t i = 0; i < captions.size(); ++i) {
    slots[i].record = &captions[i];
    auto it = parsed.find(captions[i].video_id);
    if (it == parsed.end()) {
      throw ArgumentError("extraction: no parsed document for video '" +
                          captions[i].video_id + "'");
    }
    slots[i].doc = &it->second;
  }

  int workers = std::max(1, options.workers);
  if (workers == 1 || slots.size() <= 1) {
    for (Slot& slot : slots)
      slot.metadata = extract_one(*slot.record, *slot.doc, lex, options,
                                  slot.warnings);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= slots.size()) return;
        try {
          slots[i].metadata = extract_one(*slots[i].record, *slots[i].doc, lex,
                                          options, slots[i].warnings);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work);
    for (std::thread& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  MetadataFile out;
  for (Slot& slot : slots) {
    if (warnings) {
      warnings->insert(warnings->end(), slot.warnings.begin(),
                       slot.warnings.end());
    }
    out.emplace(slot.record->video_id, std::move(slot.metadata));
  }
  return out;
}

std::optional<EvalType> eval_type_from_string(const std::string& s) {
  if (s == "video-entities") return EvalType::VideoEntities;
  if (s == "event-entities") return EvalType::EventEntities;
  if (s == "properties") return EvalType::Properties;
  if (s == "video-relations") return EvalType::VideoRelations;
  if (s == "event-relations") return EvalType::EventRelations;
  return std::nullopt;
}

const char* to_string(EvalType type) {
  switch (type) {
    case EvalType::VideoEntities: return "video-entities";
    case EvalType::EventEntities: return "event-entities";
    case EvalType::Properties: return "properties";
    case EvalType::VideoRelations: return "video-relations";
    case EvalType::EventRelations: return "event-relations";
  }
  return "?";
}

namespace {

PerVideo<Entity> video_entity_sets(const MetadataFile& file) {
  PerVideo<Entity> out;
  for (const auto& [id, md] : file) out[id] = md.video_entities;
  return out;
}

PerVideo<Entity> event_entity_sets(const MetadataFile& file) {
  PerVideo<Entity> out;
  for (const auto& [id, md] : file) out[id] = md.event_entities;
  return out;
}

PerVideo<PropertyPair> property_sets(const MetadataFile& file) {
  PerVideo<PropertyPair> out;
  for (const auto& [id, md] : file) out[id] = md.properties;
  return out;
}

PerVideo<Relation> relation_sets(const MetadataFile& file, bool event) {
  PerVideo<Relation> out;
  for (const auto& [id, md] : file)
    out[id] = event ? md.event_relations : md.video_relations;
  return out;
}

}  // namespace

EvalReport run_evaluation(const MetadataFile& gold, const MetadataFile& pred,
                          const Lexicon& lex, EvalType type,
                          const std::optional<FrequencyIndex>& freq_index,
                          long long freq_threshold) {
  if (freq_index && type != EvalType::VideoEntities) {
    throw ArgumentError(
        "evaluation: the frequency filter applies to video-entities only");
  }

  switch (type) {
    case EvalType::VideoEntities: {
      PerVideo<Entity> golds = video_entity_sets(gold);
      if (freq_index)
        golds = filter_gold_by_frequency(golds, *freq_index, freq_threshold);
      return evaluate_video_level(
          video_entity_sets(pred), golds,
          [&](const Entity& p, const Entity& g) {
            return match_entity(p, g, lex);
          });
    }
    case EvalType::EventEntities:
      return evaluate_event_level(
          event_entity_sets(pred), event_entity_sets(gold),
          [&](const Entity& p, const Entity& g, double threshold) {
            return match_entity(p, g, lex, threshold);
          },
          kEventTiouThresholds);
    case EvalType::Properties:
      return evaluate_video_level(
          property_sets(pred), property_sets(gold),
          [&](const PropertyPair& p, const PropertyPair& g) {
            return match_property(p, g, lex);
          });
    case EvalType::VideoRelations:
      return evaluate_video_level(
          relation_sets(pred, false), relation_sets(gold, false),
          [&](const Relation& p, const Relation& g) {
            return match_relation(p, g, lex);
          });
    case EvalType::EventRelations:
      return evaluate_event_level(
          relation_sets(pred, true), relation_sets(gold, true),
          [&](const Relation& p, const Relation& g, double threshold) {
            return match_relation(p, g, lex, threshold);
          },
          kEventTiouThresholds);
  }
  throw ArgumentError("evaluation: unknown type");
}

}  // namespace vcmeta
