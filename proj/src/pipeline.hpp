#ifndef VCMETA_PIPELINE_HPP
#define VCMETA_PIPELINE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evaluation.hpp"
#include "io_json.hpp"
#include "lexicon.hpp"

namespace vcmeta {

struct ExtractOptions {
  enum class Select { None, TopK, DistinctK };
  Select mode = Select::None;
  int k = 0;
  int workers = 1;
};

/// Runs the full per-video extraction over a corpus: event selection,
/// ordering, sentence-count cross-check against the parsed document, and
/// all five extractions. Videos are independent; with workers > 1 they are
/// fanned out to threads, and results are keyed by video id so output does
/// not depend on scheduling. The parsed document's sentence segments are
/// authoritative; disagreement with the caption-derived ones is reported
/// via `warnings`.
MetadataFile run_extraction(const std::vector<VideoRecord>& captions,
                            const std::map<std::string, ParsedDocument>& parsed,
                            const Lexicon& lex, const ExtractOptions& options,
                            std::vector<std::string>* warnings = nullptr);

enum class EvalType {
  VideoEntities,
  EventEntities,
  Properties,
  VideoRelations,
  EventRelations,
};

std::optional<EvalType> eval_type_from_string(const std::string& s);
const char* to_string(EvalType type);

/// Evaluates one metadata type of pred against gold. The frequency filter
/// applies to video-level entity gold only; supplying it for any other type
/// is an error.
EvalReport run_evaluation(const MetadataFile& gold, const MetadataFile& pred,
                          const Lexicon& lex, EvalType type,
                          const std::optional<FrequencyIndex>& freq_index =
                              std::nullopt,
                          long long freq_threshold = 0);

}  // namespace vcmeta

#endif  // VCMETA_PIPELINE_HPP
