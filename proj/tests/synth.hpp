#ifndef VCMETA_TESTS_SYNTH_HPP
#define VCMETA_TESTS_SYNTH_HPP

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "doc_builder.hpp"
#include "io_json.hpp"
#include "lexicon.hpp"
#include "types.hpp"

namespace vcmeta::testing {

// Deterministic synthetic corpus: captions plus matching parsed documents
// built from a handful of sentence templates. All vocabulary must exist in
// the repo lexicon; vocabulary_known() lets tests assert that.

struct SynthCorpus {
  std::vector<VideoRecord> captions;
  std::map<std::string, ParsedDocument> parsed;
};

class SynthGenerator {
 public:
  explicit SynthGenerator(std::uint64_t seed) : rng_(seed) {}

  SynthCorpus corpus(int videos, int min_events, int max_events) {
    SynthCorpus out;
    for (int v = 0; v < videos; ++v) {
      char id[32];
      std::snprintf(id, sizeof(id), "v_%05d", v);
      make_video(id, min_events, max_events, out);
    }
    return out;
  }

  static const std::vector<std::string>& noun_pool() {
    static const std::vector<std::string> pool{
        "man",   "woman", "girl", "boy",   "dog",    "cat",  "ball",
        "game",  "room",  "field", "house", "water",  "chair", "table",
        "camera", "group", "hand", "tree",  "car",    "street"};
    return pool;
  }
  static const std::vector<std::string>& verb_pool() {
    // only verbs whose third-person form is lemma + "s"
    static const std::vector<std::string> pool{
        "play", "clean", "open", "hold", "throw", "pull", "turn", "show",
        "climb", "walk", "jump", "kick", "lift", "move", "follow"};
    return pool;
  }
  static const std::vector<std::string>& adjective_pool() {
    static const std::vector<std::string> pool{
        "red",  "blue",  "young", "little", "large", "small",
        "old",  "white", "black", "green",  "happy", "tall"};
    return pool;
  }
  static const std::vector<std::string>& preposition_pool() {
    static const std::vector<std::string> pool{"in", "on", "at", "near",
                                               "with"};
    return pool;
  }

  static bool vocabulary_known(const Lexicon& lex) {
    for (const auto& n : noun_pool()) {
      if (!lex.is_word(n, PosClass::Noun)) return false;
    }
    for (const auto& v : verb_pool()) {
      if (!lex.is_word(v, PosClass::Verb)) return false;
      if (lex.lemma(v + "s", PosClass::Verb) != v) return false;
    }
    for (const auto& a : adjective_pool()) {
      if (!lex.is_word(a, PosClass::Adjective)) return false;
    }
    for (const auto& p : preposition_pool()) {
      if (!lex.is_preposition(p)) return false;
    }
    return true;
  }

 private:
  struct PlannedEvent {
    TemporalSegment segment;
    double confidence = 0.0;
    int template_id = 0;
    std::string noun1, noun2, noun3, verb, adjective, preposition;
    bool pronoun_follower = false;  // second half of the pronoun pair
  };

  std::string pick(const std::vector<std::string>& pool) {
    std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
    return pool[d(rng_)];
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  void make_video(const std::string& id, int min_events, int max_events,
                  SynthCorpus& out) {
    int n = uniform_int(min_events, max_events);
    std::vector<PlannedEvent> plan;

    for (int i = 0; i < n; ++i) {
      PlannedEvent e;
      double start = uniform(0.0, 150.0);
      e.segment = {start, start + uniform(1.0, 30.0)};
      e.confidence = uniform(0.0, 1.0);
      // the first two events pin templates 1 and 2 so every video has at
      // least one relation and one property
      e.template_id = i == 0 ? 1 : i == 1 ? 2 : uniform_int(1, 5);
      e.noun1 = pick(noun_pool());
      e.noun2 = pick(noun_pool());
      e.noun3 = pick(noun_pool());
      e.verb = pick(verb_pool());
      e.adjective = pick(adjective_pool());
      e.preposition = pick(preposition_pool());
      plan.push_back(std::move(e));
    }

    // template 5 spans two consecutive events after sorting; plan it as a
    // pair with increasing start times so the pronoun follows its noun
    std::stable_sort(plan.begin(), plan.end(),
                     [](const PlannedEvent& a, const PlannedEvent& b) {
                       return a.segment.start < b.segment.start;
                     });
    for (std::size_t i = 0; i + 1 < plan.size(); ++i) {
      if (plan[i].template_id == 5) {
        plan[i].template_id = 1;
        plan[i + 1].pronoun_follower = true;
        plan[i + 1].template_id = 1;
        ++i;
      }
    }
    if (!plan.empty() && plan.back().template_id == 5) {
      plan.back().template_id = 1;
    }

    VideoRecord record;
    record.video_id = id;
    record.duration = 200.0;
    DocBuilder builder;
    int antecedent_token = -1;

    for (const PlannedEvent& e : plan) {
      std::string sentence;
      if (e.pronoun_follower && antecedent_token >= 0) {
        sentence = build_pronoun_sentence(builder, e, antecedent_token);
      } else {
        switch (e.template_id) {
          case 1: sentence = build_svo(builder, e, &antecedent_token); break;
          case 2: sentence = build_amod_pobj(builder, e); break;
          case 3: sentence = build_conj_subjects(builder, e); break;
          case 4: sentence = build_compound(builder, e); break;
          default: sentence = build_svo(builder, e, &antecedent_token); break;
        }
      }
      record.events.push_back({e.segment, sentence, e.confidence});
    }

    // captions are shuffled to exercise the start-time ordering
    std::shuffle(record.events.begin(), record.events.end(), rng_);

    out.parsed.emplace(id, builder.build());
    out.captions.push_back(std::move(record));
  }

  // "A <noun1> <verb>s the <noun2> ."
  std::string build_svo(DocBuilder& b, const PlannedEvent& e,
                        int* subject_token) {
    b.sentence(e.segment,
               {{"A", "DET", "det", 1},
                {e.noun1, "NOUN", "nsubj", 2},
                {e.verb + "s", "VERB", "ROOT", 2},
                {"the", "DET", "det", 4},
                {e.noun2, "NOUN", "dobj", 2},
                {".", "PUNCT", "punct", 2}});
    if (subject_token) *subject_token = b.last(1);
    return "A " + e.noun1 + " " + e.verb + "s the " + e.noun2 + ".";
  }

  // "The <adj> <noun1> <verb>s <prep> the <noun2> ."
  std::string build_amod_pobj(DocBuilder& b, const PlannedEvent& e) {
    b.sentence(e.segment,
               {{"The", "DET", "det", 2},
                {e.adjective, "ADJ", "amod", 2},
                {e.noun1, "NOUN", "nsubj", 3},
                {e.verb + "s", "VERB", "ROOT", 3},
                {e.preposition, "ADP", "prep", 3},
                {"the", "DET", "det", 6},
                {e.noun2, "NOUN", "pobj", 4},
                {".", "PUNCT", "punct", 3}});
    return "The " + e.adjective + " " + e.noun1 + " " + e.verb + "s " +
           e.preposition + " the " + e.noun2 + ".";
  }

  // "A <noun1> and a <noun2> <verb> the <noun3> ."
  std::string build_conj_subjects(DocBuilder& b, const PlannedEvent& e) {
    b.sentence(e.segment,
               {{"A", "DET", "det", 1},
                {e.noun1, "NOUN", "nsubj", 5},
                {"and", "CCONJ", "cc", 1},
                {"a", "DET", "det", 4},
                {e.noun2, "NOUN", "conj", 1},
                {e.verb, "VERB", "ROOT", 5},
                {"the", "DET", "det", 7},
                {e.noun3, "NOUN", "dobj", 5},
                {".", "PUNCT", "punct", 5}});
    return "A " + e.noun1 + " and a " + e.noun2 + " " + e.verb + " the " +
           e.noun3 + ".";
  }

  // "A <noun1> <verb>s the living room ."
  std::string build_compound(DocBuilder& b, const PlannedEvent& e) {
    b.sentence(e.segment,
               {{"A", "DET", "det", 1},
                {e.noun1, "NOUN", "nsubj", 2},
                {e.verb + "s", "VERB", "ROOT", 2},
                {"the", "DET", "det", 5},
                {"living", "NOUN", "compound", 5},
                {"room", "NOUN", "dobj", 2},
                {".", "PUNCT", "punct", 2}});
    return "A " + e.noun1 + " " + e.verb + "s the living room.";
  }

  // "He <verb>s the <noun3> ." with a cluster back to the antecedent
  std::string build_pronoun_sentence(DocBuilder& b, const PlannedEvent& e,
                                     int antecedent_token) {
    b.sentence(e.segment,
               {{"He", "PRON", "nsubj", 1},
                {e.verb + "s", "VERB", "ROOT", 1},
                {"the", "DET", "det", 3},
                {e.noun3, "NOUN", "dobj", 1},
                {".", "PUNCT", "punct", 1}});
    int pronoun = b.last(0);
    b.cluster({{antecedent_token, antecedent_token}, {pronoun, pronoun}});
    return "He " + e.verb + "s the " + e.noun3 + ".";
  }

  std::mt19937_64 rng_;
};

}  // namespace vcmeta::testing

#endif  // VCMETA_TESTS_SYNTH_HPP
