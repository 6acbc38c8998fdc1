#ifndef VCMETA_EVALUATION_HPP
#define VCMETA_EVALUATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexicon.hpp"
#include "types.hpp"

namespace vcmeta {

template <class T>
using PerVideo = std::map<std::string, std::vector<T>>;

/// TP_p counts predictions judged correct and drives precision; TP_g counts
/// gold items that were predicted and drives recall. With synonym-enriched
/// matching the two differ.
struct MatchCounts {
  long long tp_p = 0;
  long long tp_g = 0;
  long long n_pred = 0;
  long long n_gold = 0;
};

struct ThresholdResult {
  double threshold = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  MatchCounts counts;
};

struct EvalReport {
  std::vector<ThresholdResult> per_threshold;  // empty at video level
  double avg_precision = 0.0;
  double avg_recall = 0.0;
  double f1 = 0.0;
  MatchCounts counts;  // summed over videos, and over thresholds if any
  long long videos_evaluated = 0;
  long long ignored_pred_videos = 0;  // prediction videos absent from gold
};

/// tIoU thresholds used for event-level evaluation.
inline const std::vector<double> kEventTiouThresholds{0.3, 0.5, 0.7, 0.9};

inline double f1_score(double precision, double recall) {
  double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

/// Names synonym-match; with a threshold both items must carry segments and
/// overlap strictly above it. Throws LevelMismatchError when the segments
/// present do not fit the requested level.
bool match_entity(const Entity& pred, const Entity& gold, const Lexicon& lex,
                  std::optional<double> threshold = std::nullopt);

/// Both components synonym-match (entity as noun, property as adjective).
bool match_property(const PropertyPair& pred, const PropertyPair& gold,
                    const Lexicon& lex);

/// At least one subject predicts a gold subject, at least one object
/// predicts a gold object, and the verb — or the verb joined with any
/// single modifier by "_" — predicts the gold verb or any such join of it.
/// Event level additionally applies the strict tIoU test.
bool match_relation(const Relation& pred, const Relation& gold,
                    const Lexicon& lex,
                    std::optional<double> threshold = std::nullopt);

namespace detail {

template <class T, class Matcher>
MatchCounts count_micro(const PerVideo<T>& preds, const PerVideo<T>& golds,
                        Matcher&& match) {
  MatchCounts mc;
  for (const auto& [video_id, gold] : golds) {
    static const std::vector<T> none;
    auto it = preds.find(video_id);
    const std::vector<T>& pred = it != preds.end() ? it->second : none;
    for (const T& p : pred) {
      for (const T& g : gold) {
        if (match(p, g)) {
          ++mc.tp_p;
          break;
        }
      }
    }
    for (const T& g : gold) {
      for (const T& p : pred) {
        if (match(p, g)) {
          ++mc.tp_g;
          break;
        }
      }
    }
    mc.n_pred += static_cast<long long>(pred.size());
    mc.n_gold += static_cast<long long>(gold.size());
  }
  return mc;
}

template <class T>
long long count_ignored(const PerVideo<T>& preds, const PerVideo<T>& golds) {
  long long ignored = 0;
  for (const auto& [video_id, items] : preds) {
    if (!golds.count(video_id)) ++ignored;
  }
  return ignored;
}

inline double ratio(long long num, long long den) {
  return den > 0 ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
}

}  // namespace detail

/// Micro-averaged precision and recall over all gold videos: precision is
/// sum(TP_p)/sum(n_pred), recall sum(TP_g)/sum(n_gold), each 0 on an empty
/// denominator. Throws EmptyGoldError when golds has no videos.
template <class T, class Matcher>
EvalReport evaluate_video_level(const PerVideo<T>& preds,
                                const PerVideo<T>& golds, Matcher&& match) {
  if (golds.empty()) throw EmptyGoldError("evaluation: gold has no videos");
  EvalReport report;
  report.counts = detail::count_micro(preds, golds, match);
  report.videos_evaluated = static_cast<long long>(golds.size());
  report.ignored_pred_videos = detail::count_ignored(preds, golds);
  report.avg_precision = detail::ratio(report.counts.tp_p, report.counts.n_pred);
  report.avg_recall = detail::ratio(report.counts.tp_g, report.counts.n_gold);
  report.f1 = f1_score(report.avg_precision, report.avg_recall);
  return report;
}

/// Event-level evaluation: micro precision/recall per tIoU threshold, then
/// averaged across thresholds; F1 of the averages. The matcher is called as
/// match(pred, gold, threshold).
template <class T, class Matcher>
EvalReport evaluate_event_level(const PerVideo<T>& preds,
                                const PerVideo<T>& golds, Matcher&& match,
                                const std::vector<double>& thresholds) {
  if (golds.empty()) throw EmptyGoldError("evaluation: gold has no videos");
  if (thresholds.empty()) throw ArgumentError("evaluation: no tIoU thresholds");

  EvalReport report;
  report.videos_evaluated = static_cast<long long>(golds.size());
  report.ignored_pred_videos = detail::count_ignored(preds, golds);
  for (double threshold : thresholds) {
    MatchCounts mc = detail::count_micro(
        preds, golds,
        [&](const T& p, const T& g) { return match(p, g, threshold); });
    ThresholdResult row;
    row.threshold = threshold;
    row.precision = detail::ratio(mc.tp_p, mc.n_pred);
    row.recall = detail::ratio(mc.tp_g, mc.n_gold);
    row.counts = mc;
    report.counts.tp_p += mc.tp_p;
    report.counts.tp_g += mc.tp_g;
    report.counts.n_pred += mc.n_pred;
    report.counts.n_gold += mc.n_gold;
    report.avg_precision += row.precision;
    report.avg_recall += row.recall;
    report.per_threshold.push_back(row);
  }
  report.avg_precision /= static_cast<double>(thresholds.size());
  report.avg_recall /= static_cast<double>(thresholds.size());
  report.f1 = f1_score(report.avg_precision, report.avg_recall);
  return report;
}

/// Distinct-video occurrence counts of video-level entity lemmas.
struct FrequencyIndex {
  std::map<std::string, long long> counts;
};

FrequencyIndex build_frequency_index(const PerVideo<Entity>& corpus);

/// Keeps gold entities whose indexed frequency is strictly greater than f;
/// entities absent from the index count 0.
PerVideo<Entity> filter_gold_by_frequency(const PerVideo<Entity>& gold,
                                          const FrequencyIndex& index,
                                          long long f);

}  // namespace vcmeta

#endif  // VCMETA_EVALUATION_HPP
