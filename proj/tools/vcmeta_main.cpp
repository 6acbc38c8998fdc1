// Command-line front end for the vcmeta shared library.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vcmeta.h"

namespace {

int fail(vcm_status status) {
  std::fprintf(stderr, "vcmeta: error: %s\n", vcm_last_error());
  return static_cast<int>(status);
}

void print_warnings() {
  const char* warnings = vcm_last_warnings();
  if (warnings && *warnings)
    std::fprintf(stderr, "vcmeta: warning:\n%s", warnings);
}

struct LexiconHandle {
  vcm_lexicon* ptr = nullptr;
  ~LexiconHandle() { vcm_lexicon_close(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extracts entities, entity properties, and relations from "
               "captioned video events and evaluates them against gold "
               "standards"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("vcmeta ") + vcm_version());

  // extract
  std::string captions_path, parsed_path, lexicon_path, out_path;
  long top_k = 0, distinct_k = 0;
  int workers = 1;
  CLI::App* extract =
      app.add_subcommand("extract",
                         "Extract metadata from captioned events and their "
                         "parsed documents");
  extract->add_option("--captions", captions_path, "Captions JSON file")
      ->required();
  extract->add_option("--parsed", parsed_path, "Parsed-document JSON file")
      ->required();
  extract->add_option("--lexicon", lexicon_path, "Lexicon data file")
      ->required();
  CLI::Option* top_opt =
      extract->add_option("--top-k", top_k, "Keep the k highest-confidence events");
  CLI::Option* distinct_opt =
      extract->add_option("--distinct-k", distinct_k,
                          "Collapse duplicate captions, then keep the top k");
  top_opt->excludes(distinct_opt);
  extract->add_option("--jobs", workers, "Worker threads")->default_val(1);
  extract->add_option("--out", out_path, "Output metadata JSON file")->required();

  // evaluate
  std::string eval_type, gold_path, pred_path, freq_index_path, report_path;
  long freq_threshold = 0;
  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Evaluate predicted metadata against gold");
  evaluate
      ->add_option("--type", eval_type,
                   "One of: video-entities, event-entities, properties, "
                   "video-relations, event-relations")
      ->required()
      ->check(CLI::IsMember({"video-entities", "event-entities", "properties",
                             "video-relations", "event-relations"}));
  evaluate->add_option("--gold", gold_path, "Gold metadata JSON file")->required();
  evaluate->add_option("--pred", pred_path, "Predicted metadata JSON file")
      ->required();
  evaluate->add_option("--lexicon", lexicon_path, "Lexicon data file")->required();
  CLI::Option* fi_opt = evaluate->add_option(
      "--freq-index", freq_index_path,
      "Frequency index; filters video-entity gold by --freq-threshold");
  CLI::Option* ft_opt = evaluate->add_option(
      "--freq-threshold", freq_threshold,
      "Keep gold entities with frequency strictly above this value");
  fi_opt->needs(ft_opt);
  ft_opt->needs(fi_opt);
  evaluate->add_option("--report", report_path, "Output report file")->required();

  // freq-index
  std::vector<std::string> metadata_paths;
  CLI::App* freq_index = app.add_subcommand(
      "freq-index", "Count, per entity, the distinct videos containing it");
  freq_index
      ->add_option("--metadata", metadata_paths, "Metadata JSON files")
      ->required()
      ->expected(-1);
  freq_index->add_option("--out", out_path, "Output index JSON file")->required();

  // dedupe
  CLI::App* dedupe = app.add_subcommand(
      "dedupe", "Collapse duplicate captions and keep the top k per video");
  dedupe->add_option("--captions", captions_path, "Captions JSON file")
      ->required();
  dedupe->add_option("--distinct-k", distinct_k, "Events kept per video")
      ->required();
  dedupe->add_option("--out", out_path, "Output captions JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  if (extract->parsed()) {
    LexiconHandle lex;
    if (vcm_status s = vcm_lexicon_open(lexicon_path.c_str(), &lex.ptr))
      return fail(s);
    vcm_extract_options options;
    vcm_extract_options_init(&options);
    if (top_opt->count()) {
      options.selection = VCM_SELECT_TOP_K;
      options.k = top_k;
    } else if (distinct_opt->count()) {
      options.selection = VCM_SELECT_DISTINCT_K;
      options.k = distinct_k;
    }
    options.workers = workers;
    vcm_status s = vcm_extract(lex.ptr, captions_path.c_str(),
                               parsed_path.c_str(), &options, out_path.c_str());
    print_warnings();
    if (s) return fail(s);
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
  }

  if (evaluate->parsed()) {
    LexiconHandle lex;
    if (vcm_status s = vcm_lexicon_open(lexicon_path.c_str(), &lex.ptr))
      return fail(s);
    vcm_eval_summary summary;
    vcm_status s = vcm_evaluate(
        lex.ptr, eval_type.c_str(), gold_path.c_str(), pred_path.c_str(),
        fi_opt->count() ? freq_index_path.c_str() : nullptr, freq_threshold,
        report_path.c_str(), &summary);
    if (s) return fail(s);
    std::printf(
        "%s: precision=%.6f recall=%.6f f1=%.6f (videos=%lld, n_pred=%lld, "
        "n_gold=%lld)\n",
        eval_type.c_str(), summary.precision, summary.recall, summary.f1,
        summary.videos_evaluated, summary.n_pred, summary.n_gold);
    if (summary.ignored_pred_videos > 0) {
      std::fprintf(stderr,
                   "vcmeta: warning: %lld prediction video(s) absent from the "
                   "gold were ignored\n",
                   summary.ignored_pred_videos);
    }
    std::printf("wrote %s\n", report_path.c_str());
    return 0;
  }

  if (freq_index->parsed()) {
    std::vector<const char*> paths;
    paths.reserve(metadata_paths.size());
    for (const std::string& p : metadata_paths) paths.push_back(p.c_str());
    if (vcm_status s = vcm_build_freq_index(paths.data(), paths.size(),
                                            out_path.c_str()))
      return fail(s);
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
  }

  if (dedupe->parsed()) {
    vcm_status s =
        vcm_dedupe(captions_path.c_str(), distinct_k, out_path.c_str());
    print_warnings();
    if (s) return fail(s);
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
  }

  return 1;
}
