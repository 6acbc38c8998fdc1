#include "events.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "strutil.hpp"

namespace vcmeta {

namespace {

double confidence_or_lowest(const CaptionedEvent& e) {
  return e.confidence.value_or(-std::numeric_limits<double>::infinity());
}

}  // namespace

std::vector<CaptionedEvent> select_top_k(const std::vector<CaptionedEvent>& events,
                                         int k) {
  if (k < 1) throw ArgumentError("select_top_k: k must be >= 1");
  if (static_cast<int>(events.size()) <= k) return events;

  for (std::size_t i = 0; i < events.size(); ++i) {
    if (!events[i].confidence) {
      throw MissingConfidenceError(
          "select_top_k: event " + std::to_string(i) +
          " has no confidence but truncation to k=" + std::to_string(k) +
          " is required");
    }
  }

  std::vector<std::size_t> order(events.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    double ca = *events[a].confidence;
    double cb = *events[b].confidence;
    if (ca != cb) return ca > cb;
    return a < b;
  });
  order.resize(static_cast<std::size_t>(k));
  std::sort(order.begin(), order.end());

  std::vector<CaptionedEvent> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(events[i]);
  return out;
}

std::vector<CaptionedEvent> select_distinct_k(
    const std::vector<CaptionedEvent>& events, int k) {
  if (k < 1) throw ArgumentError("select_distinct_k: k must be >= 1");

  // caption -> index of the instance kept so far
  std::unordered_map<std::string, std::size_t> kept;
  for (std::size_t i = 0; i < events.size(); ++i) {
    std::string key(trim(events[i].sentence));
    auto [it, inserted] = kept.emplace(std::move(key), i);
    if (inserted) continue;
    const CaptionedEvent& held = events[it->second];
    const CaptionedEvent& cand = events[i];
    double ch = confidence_or_lowest(held);
    double cc = confidence_or_lowest(cand);
    if (cc > ch ||
        (cc == ch && cand.segment.start < held.segment.start)) {
      it->second = i;  // equal confidence and start keeps the earlier index
    }
  }

  std::vector<std::size_t> survivors;
  survivors.reserve(kept.size());
  for (const auto& [sentence, index] : kept) survivors.push_back(index);
  std::sort(survivors.begin(), survivors.end());

  std::vector<CaptionedEvent> distinct;
  distinct.reserve(survivors.size());
  for (std::size_t i : survivors) distinct.push_back(events[i]);
  return select_top_k(distinct, k);
}

ProcessedVideo process_video(const std::string& video_id,
                             const std::vector<CaptionedEvent>& events) {
  if (events.empty())
    throw EmptyInputError("process_video: no events for video '" + video_id + "'");

  ProcessedVideo out;
  out.video_id = video_id;
  out.ordered_events = events;
  std::stable_sort(out.ordered_events.begin(), out.ordered_events.end(),
                   [](const CaptionedEvent& a, const CaptionedEvent& b) {
                     return a.segment.start < b.segment.start;
                   });

  out.sentence_segments.reserve(out.ordered_events.size());
  for (std::size_t i = 0; i < out.ordered_events.size(); ++i) {
    const CaptionedEvent& e = out.ordered_events[i];
    if (i > 0) out.full_text += ' ';
    out.full_text += e.sentence;
    out.sentence_segments.push_back(e.segment);
  }
  return out;
}

}  // namespace vcmeta
