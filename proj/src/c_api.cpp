#include "vcmeta.h"

#include <cstring>
#include <string>

#include "evaluation.hpp"
#include "events.hpp"
#include "io_json.hpp"
#include "lexicon.hpp"
#include "pipeline.hpp"

namespace {

thread_local std::string g_last_error;
thread_local std::string g_last_warnings;

void set_error(std::string message) { g_last_error = std::move(message); }

void set_warnings(const std::vector<std::string>& warnings) {
  g_last_warnings.clear();
  for (const std::string& w : warnings) {
    g_last_warnings += w;
    g_last_warnings += '\n';
  }
}

// Runs fn, translating exceptions into status codes and the thread-local
// error message.
template <class Fn>
vcm_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const vcmeta::ParseError& e) {
    set_error(e.what());
    return VCM_ERROR_PARSE;
  } catch (const vcmeta::LengthMismatchError& e) {
    set_error(e.what());
    return VCM_ERROR_PARSE;
  } catch (const vcmeta::BadSegmentError& e) {
    set_error(e.what());
    return VCM_ERROR_PARSE;
  } catch (const vcmeta::ValidationError& e) {
    set_error(e.what());
    return VCM_ERROR_VALIDATION;
  } catch (const vcmeta::SentenceCountMismatchError& e) {
    set_error(e.what());
    return VCM_ERROR_VALIDATION;
  } catch (const vcmeta::InvariantError& e) {
    set_error(e.what());
    return VCM_ERROR_VALIDATION;
  } catch (const vcmeta::MissingConfidenceError& e) {
    set_error(e.what());
    return VCM_ERROR_VALIDATION;
  } catch (const vcmeta::EmptyInputError& e) {
    set_error(e.what());
    return VCM_ERROR_VALIDATION;
  } catch (const vcmeta::EmptyGoldError& e) {
    set_error(e.what());
    return VCM_ERROR_VALIDATION;
  } catch (const vcmeta::LevelMismatchError& e) {
    set_error(e.what());
    return VCM_ERROR_VALIDATION;
  } catch (const vcmeta::ArgumentError& e) {
    set_error(e.what());
    return VCM_ERROR_ARGUMENT;
  } catch (const vcmeta::Error& e) {
    set_error(e.what());
    return VCM_ERROR_IO;
  } catch (const std::exception& e) {
    set_error(e.what());
    return VCM_ERROR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return VCM_ERROR_INTERNAL;
  }
}

vcm_status need(const void* p, const char* what) {
  if (p) return VCM_OK;
  g_last_error = std::string(what) + " must not be NULL";
  return VCM_ERROR_ARGUMENT;
}

const vcmeta::Lexicon* unwrap(const vcm_lexicon* lexicon) {
  return reinterpret_cast<const vcmeta::Lexicon*>(lexicon);
}

vcm_status parse_pos(const char* pos_class, vcmeta::PosClass& out) {
  if (!pos_class) return need(nullptr, "pos_class");
  auto pos = vcmeta::pos_class_from_string(pos_class);
  if (!pos) {
    g_last_error = std::string("unknown pos class '") + pos_class +
                   "' (expected noun, verb, adjective, or adverb)";
    return VCM_ERROR_ARGUMENT;
  }
  out = *pos;
  return VCM_OK;
}

int predicate(vcm_status status, bool value) {
  if (status != VCM_OK) return -1;
  return value ? 1 : 0;
}

}  // namespace

extern "C" {

const char* vcm_version(void) { return "0.1.0"; }

const char* vcm_last_error(void) { return g_last_error.c_str(); }

const char* vcm_last_warnings(void) { return g_last_warnings.c_str(); }

vcm_status vcm_lexicon_open(const char* path, vcm_lexicon** out_lexicon) {
  if (vcm_status s = need(path, "path"); s != VCM_OK) return s;
  if (vcm_status s = need(out_lexicon, "out_lexicon"); s != VCM_OK) return s;
  *out_lexicon = nullptr;
  return guarded([&] {
    auto* lex = new vcmeta::Lexicon(vcmeta::Lexicon::load(path));
    *out_lexicon = reinterpret_cast<vcm_lexicon*>(lex);
    return VCM_OK;
  });
}

void vcm_lexicon_close(vcm_lexicon* lexicon) {
  delete reinterpret_cast<vcmeta::Lexicon*>(lexicon);
}

int vcm_lexicon_is_word(const vcm_lexicon* lexicon, const char* form,
                        const char* pos_class) {
  g_last_error.clear();
  if (!lexicon || !form) return predicate(VCM_ERROR_ARGUMENT, false);
  vcmeta::PosClass pos;
  if (vcm_status s = parse_pos(pos_class, pos); s != VCM_OK)
    return predicate(s, false);
  return predicate(VCM_OK, unwrap(lexicon)->is_word(form, pos));
}

int vcm_lexicon_is_preposition(const vcm_lexicon* lexicon, const char* form) {
  g_last_error.clear();
  if (!lexicon || !form) return predicate(VCM_ERROR_ARGUMENT, false);
  return predicate(VCM_OK, unwrap(lexicon)->is_preposition(form));
}

int vcm_lexicon_are_synonyms(const vcm_lexicon* lexicon, const char* a,
                             const char* b, const char* pos_class) {
  g_last_error.clear();
  if (!lexicon || !a || !b) return predicate(VCM_ERROR_ARGUMENT, false);
  vcmeta::PosClass pos;
  if (vcm_status s = parse_pos(pos_class, pos); s != VCM_OK)
    return predicate(s, false);
  return predicate(VCM_OK, unwrap(lexicon)->are_synonyms(a, b, pos));
}

vcm_status vcm_lexicon_lemma(const vcm_lexicon* lexicon, const char* form,
                             const char* pos_class, char* buffer,
                             size_t buffer_size) {
  if (vcm_status s = need(lexicon, "lexicon"); s != VCM_OK) return s;
  if (vcm_status s = need(form, "form"); s != VCM_OK) return s;
  if (vcm_status s = need(buffer, "buffer"); s != VCM_OK) return s;
  vcmeta::PosClass pos;
  if (vcm_status s = parse_pos(pos_class, pos); s != VCM_OK) return s;
  return guarded([&] {
    std::string lemma = unwrap(lexicon)->lemma(form, pos);
    if (lemma.size() + 1 > buffer_size) {
      g_last_error = "buffer too small: need " +
                     std::to_string(lemma.size() + 1) + " bytes";
      return VCM_ERROR_ARGUMENT;
    }
    std::memcpy(buffer, lemma.c_str(), lemma.size() + 1);
    return VCM_OK;
  });
}

void vcm_extract_options_init(vcm_extract_options* options) {
  if (!options) return;
  options->selection = VCM_SELECT_NONE;
  options->k = 0;
  options->workers = 1;
}

vcm_status vcm_extract(const vcm_lexicon* lexicon, const char* captions_path,
                       const char* parsed_path,
                       const vcm_extract_options* options,
                       const char* out_path) {
  if (vcm_status s = need(lexicon, "lexicon"); s != VCM_OK) return s;
  if (vcm_status s = need(captions_path, "captions_path"); s != VCM_OK) return s;
  if (vcm_status s = need(parsed_path, "parsed_path"); s != VCM_OK) return s;
  if (vcm_status s = need(out_path, "out_path"); s != VCM_OK) return s;
  g_last_warnings.clear();

  vcmeta::ExtractOptions opts;
  if (options) {
    switch (options->selection) {
      case VCM_SELECT_NONE:
        opts.mode = vcmeta::ExtractOptions::Select::None;
        break;
      case VCM_SELECT_TOP_K:
        opts.mode = vcmeta::ExtractOptions::Select::TopK;
        break;
      case VCM_SELECT_DISTINCT_K:
        opts.mode = vcmeta::ExtractOptions::Select::DistinctK;
        break;
      default:
        g_last_error = "unknown selection mode";
        return VCM_ERROR_ARGUMENT;
    }
    opts.k = static_cast<int>(options->k);
    opts.workers = options->workers;
  }

  return guarded([&] {
    std::vector<std::string> warnings;
    auto captions = vcmeta::load_captions(captions_path, &warnings);
    auto parsed = vcmeta::load_parsed(parsed_path);
    auto metadata = vcmeta::run_extraction(captions, parsed, *unwrap(lexicon),
                                           opts, &warnings);
    vcmeta::write_metadata(out_path, metadata);
    set_warnings(warnings);
    return VCM_OK;
  });
}

vcm_status vcm_evaluate(const vcm_lexicon* lexicon, const char* eval_type,
                        const char* gold_path, const char* pred_path,
                        const char* freq_index_path, long freq_threshold,
                        const char* report_path, vcm_eval_summary* summary) {
  if (vcm_status s = need(lexicon, "lexicon"); s != VCM_OK) return s;
  if (vcm_status s = need(eval_type, "eval_type"); s != VCM_OK) return s;
  if (vcm_status s = need(gold_path, "gold_path"); s != VCM_OK) return s;
  if (vcm_status s = need(pred_path, "pred_path"); s != VCM_OK) return s;
  if (vcm_status s = need(report_path, "report_path"); s != VCM_OK) return s;

  auto type = vcmeta::eval_type_from_string(eval_type);
  if (!type) {
    g_last_error = std::string("unknown eval type '") + eval_type + "'";
    return VCM_ERROR_ARGUMENT;
  }

  return guarded([&] {
    auto gold = vcmeta::load_metadata(gold_path);
    auto pred = vcmeta::load_metadata(pred_path);
    std::optional<vcmeta::FrequencyIndex> index;
    if (freq_index_path) index = vcmeta::load_freq_index(freq_index_path);
    vcmeta::EvalReport report = vcmeta::run_evaluation(
        gold, pred, *unwrap(lexicon), *type, index, freq_threshold);
    vcmeta::write_report(report_path, report, eval_type);
    if (summary) {
      summary->precision = report.avg_precision;
      summary->recall = report.avg_recall;
      summary->f1 = report.f1;
      summary->tp_p = report.counts.tp_p;
      summary->tp_g = report.counts.tp_g;
      summary->n_pred = report.counts.n_pred;
      summary->n_gold = report.counts.n_gold;
      summary->videos_evaluated = report.videos_evaluated;
      summary->ignored_pred_videos = report.ignored_pred_videos;
    }
    return VCM_OK;
  });
}

vcm_status vcm_build_freq_index(const char* const* metadata_paths,
                                size_t path_count, const char* out_path) {
  if (vcm_status s = need(metadata_paths, "metadata_paths"); s != VCM_OK)
    return s;
  if (vcm_status s = need(out_path, "out_path"); s != VCM_OK) return s;
  if (path_count == 0) {
    g_last_error = "at least one metadata file is required";
    return VCM_ERROR_ARGUMENT;
  }

  return guarded([&] {
    vcmeta::PerVideo<vcmeta::Entity> corpus;
    for (size_t i = 0; i < path_count; ++i) {
      if (vcm_status s = need(metadata_paths[i], "metadata path"); s != VCM_OK)
        return s;
      for (auto& [video_id, md] : vcmeta::load_metadata(metadata_paths[i])) {
        auto& entities = corpus[video_id];
        entities.insert(entities.end(), md.video_entities.begin(),
                        md.video_entities.end());
      }
    }
    vcmeta::write_freq_index(out_path, vcmeta::build_frequency_index(corpus));
    return VCM_OK;
  });
}

vcm_status vcm_dedupe(const char* captions_path, long distinct_k,
                      const char* out_path) {
  if (vcm_status s = need(captions_path, "captions_path"); s != VCM_OK) return s;
  if (vcm_status s = need(out_path, "out_path"); s != VCM_OK) return s;
  g_last_warnings.clear();

  return guarded([&] {
    std::vector<std::string> warnings;
    auto records = vcmeta::load_captions(captions_path, &warnings);
    for (vcmeta::VideoRecord& rec : records)
      rec.events = vcmeta::select_distinct_k(rec.events,
                                             static_cast<int>(distinct_k));
    vcmeta::write_captions(out_path, records);
    set_warnings(warnings);
    return VCM_OK;
  });
}

}  // extern "C"
