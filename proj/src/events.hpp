#ifndef VCMETA_EVENTS_HPP
#define VCMETA_EVENTS_HPP

#include <string>
#include <vector>

#include "types.hpp"

namespace vcmeta {

/// How many captioned events to forward to extraction: the top-k by
/// confidence, or the top-k after collapsing duplicate captions.
struct EventSelection {
  enum class Mode { TopK, DistinctK };
  Mode mode = Mode::TopK;
  int k = 1;
};

/// One video's events ordered by start time, their concatenated text, and
/// the segment of each sentence ordinal.
struct ProcessedVideo {
  std::string video_id;
  std::vector<CaptionedEvent> ordered_events;
  std::string full_text;
  std::vector<TemporalSegment> sentence_segments;
};

/// The k highest-confidence events, kept in original relative order. All
/// events pass through when there are at most k. Throws
/// MissingConfidenceError if truncation is needed and a confidence is absent.
std::vector<CaptionedEvent> select_top_k(const std::vector<CaptionedEvent>& events,
                                         int k);

/// Collapses events with the exact same caption (compared after trimming),
/// keeping the higher-confidence instance, then applies select_top_k.
/// Confidence ties resolve to the earlier start time, then input order.
std::vector<CaptionedEvent> select_distinct_k(
    const std::vector<CaptionedEvent>& events, int k);

/// Stably sorts events by start time and concatenates their sentences with
/// a single space. Throws EmptyInputError when no events are given.
ProcessedVideo process_video(const std::string& video_id,
                             const std::vector<CaptionedEvent>& events);

}  // namespace vcmeta

#endif  // VCMETA_EVENTS_HPP
