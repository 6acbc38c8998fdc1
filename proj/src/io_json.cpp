#include "io_json.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "strutil.hpp"

namespace vcmeta {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Deterministic emitter. nlohmann is used for parsing only; output files are
// produced here so that key order and number formatting are pinned:
// segments and metrics always print with 6 fractional digits.

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void append_json_string(std::string& out, std::string_view s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void append_segment(std::string& out, const TemporalSegment& seg) {
  out += '[';
  out += fixed6(seg.start);
  out += ',';
  out += fixed6(seg.end);
  out += ']';
}

void append_string_array(std::string& out, const std::vector<std::string>& items) {
  out += '[';
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ',';
    append_json_string(out, items[i]);
  }
  out += ']';
}

void append_relation(std::string& out, const Relation& r) {
  out += "{\"modifiers\":";
  append_string_array(out, r.modifiers);
  out += ",\"objects\":";
  append_string_array(out, r.objects);
  if (r.segment) {
    out += ",\"segment\":";
    append_segment(out, *r.segment);
  }
  out += ",\"subjects\":";
  append_string_array(out, r.subjects);
  out += ",\"verb\":";
  append_json_string(out, r.verb);
  out += '}';
}

template <class T, class Append>
void append_array(std::string& out, const std::vector<T>& items, Append&& one) {
  out += '[';
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ',';
    one(out, items[i]);
  }
  out += ']';
}

// ---------------------------------------------------------------------------
// Parse helpers.

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const json& need(const std::string& path, const json& obj, const char* key,
                 const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, where + ": missing key '" + key + "'");
  return *it;
}

double need_number(const std::string& path, const json& v,
                   const std::string& where) {
  if (!v.is_number()) fail(path, where + ": expected a number");
  return v.get<double>();
}

int need_int(const std::string& path, const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(path, where + ": expected an integer");
  return v.get<int>();
}

std::string need_string(const std::string& path, const json& v,
                        const std::string& where) {
  if (!v.is_string()) fail(path, where + ": expected a string");
  return v.get<std::string>();
}

TemporalSegment parse_segment(const std::string& path, const json& v,
                              const std::string& where) {
  if (!v.is_array() || v.size() != 2)
    fail(path, where + ": expected a [start, end] pair");
  TemporalSegment seg{need_number(path, v[0], where), need_number(path, v[1], where)};
  if (!seg.valid()) {
    throw BadSegmentError(path + ": " + where + ": segment [" +
                          std::to_string(seg.start) + ", " +
                          std::to_string(seg.end) +
                          "] must be finite with 0 <= start <= end");
  }
  return seg;
}

json parse_root_object(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file");
  json root = json::parse(in, nullptr, false);
  if (root.is_discarded()) fail(path, "malformed JSON");
  if (!root.is_object()) fail(path, "expected a top-level object");
  return root;
}

std::vector<std::string> parse_string_array(const std::string& path,
                                            const json& v,
                                            const std::string& where) {
  if (!v.is_array()) fail(path, where + ": expected an array");
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const json& item : v) out.push_back(need_string(path, item, where));
  return out;
}

Relation parse_relation(const std::string& path, const json& v,
                        const std::string& where) {
  if (!v.is_object()) fail(path, where + ": expected a relation object");
  Relation r;
  r.subjects = parse_string_array(path, need(path, v, "subjects", where), where);
  r.verb = need_string(path, need(path, v, "verb", where), where);
  r.modifiers = parse_string_array(path, need(path, v, "modifiers", where), where);
  r.objects = parse_string_array(path, need(path, v, "objects", where), where);
  if (auto it = v.find("segment"); it != v.end())
    r.segment = parse_segment(path, *it, where);
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Captions.

std::vector<VideoRecord> load_captions(const std::string& path,
                                       std::vector<std::string>* warnings) {
  json root = parse_root_object(path);
  std::vector<VideoRecord> records;
  records.reserve(root.size());

  for (const auto& [video_id, body] : root.items()) {
    const std::string where = "video '" + video_id + "'";
    if (!body.is_object()) fail(path, where + ": expected an object");

    VideoRecord rec;
    rec.video_id = video_id;
    rec.duration = need_number(path, need(path, body, "duration", where), where);

    const json& timestamps = need(path, body, "timestamps", where);
    const json& sentences = need(path, body, "sentences", where);
    if (!timestamps.is_array() || !sentences.is_array())
      fail(path, where + ": timestamps and sentences must be arrays");
    if (timestamps.size() != sentences.size()) {
      throw LengthMismatchError(path + ": " + where + ": " +
                                std::to_string(timestamps.size()) +
                                " timestamps vs " +
                                std::to_string(sentences.size()) + " sentences");
    }

    const json* confidences = nullptr;
    if (auto it = body.find("confidences"); it != body.end()) {
      if (!it->is_array() || it->size() != sentences.size()) {
        throw LengthMismatchError(path + ": " + where +
                                  ": confidences array length mismatch");
      }
      confidences = &*it;
    }

    for (std::size_t i = 0; i < timestamps.size(); ++i) {
      const std::string at = where + " event " + std::to_string(i);
      CaptionedEvent event;
      event.segment = parse_segment(path, timestamps[i], at);
      event.sentence = std::string(
          trim(need_string(path, sentences[i], at)));
      if (event.sentence.empty()) fail(path, at + ": empty sentence");
      if (confidences) {
        const json& c = (*confidences)[i];
        if (!c.is_null()) event.confidence = need_number(path, c, at);
      }
      if (warnings &&
          (event.segment.end > rec.duration + 0.5)) {
        warnings->push_back(where + ": event " + std::to_string(i) +
                            " segment [" + fixed6(event.segment.start) + ", " +
                            fixed6(event.segment.end) + "] exceeds duration " +
                            fixed6(rec.duration));
      }
      rec.events.push_back(std::move(event));
    }
    records.push_back(std::move(rec));
  }

  std::sort(records.begin(), records.end(),
            [](const VideoRecord& a, const VideoRecord& b) {
              return a.video_id < b.video_id;
            });
  return records;
}

void write_captions(const std::string& path,
                    const std::vector<VideoRecord>& records) {
  std::vector<const VideoRecord*> sorted;
  sorted.reserve(records.size());
  for (const VideoRecord& r : records) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const VideoRecord* a, const VideoRecord* b) {
              return a->video_id < b->video_id;
            });

  std::string out = "{\n";
  for (std::size_t vi = 0; vi < sorted.size(); ++vi) {
    const VideoRecord& rec = *sorted[vi];
    if (vi > 0) out += ",\n";
    append_json_string(out, rec.video_id);
    out += ":{";

    bool any_confidence = std::any_of(
        rec.events.begin(), rec.events.end(),
        [](const CaptionedEvent& e) { return e.confidence.has_value(); });
    if (any_confidence) {
      out += "\"confidences\":";
      append_array(out, rec.events, [](std::string& o, const CaptionedEvent& e) {
        o += e.confidence ? fixed6(*e.confidence) : "null";
      });
      out += ',';
    }
    out += "\"duration\":";
    out += fixed6(rec.duration);
    out += ",\"sentences\":";
    append_array(out, rec.events, [](std::string& o, const CaptionedEvent& e) {
      append_json_string(o, e.sentence);
    });
    out += ",\"timestamps\":";
    append_array(out, rec.events, [](std::string& o, const CaptionedEvent& e) {
      append_segment(o, e.segment);
    });
    out += '}';
  }
  out += "\n}\n";
  write_file(path, out);
}

// ---------------------------------------------------------------------------
// Parsed documents.

std::map<std::string, ParsedDocument> load_parsed(const std::string& path) {
  json root = parse_root_object(path);
  std::map<std::string, ParsedDocument> docs;

  for (const auto& [video_id, body] : root.items()) {
    const std::string where = "video '" + video_id + "'";
    if (!body.is_object()) fail(path, where + ": expected an object");

    ParsedDocument doc;
    const json& tokens = need(path, body, "tokens", where);
    if (!tokens.is_array()) fail(path, where + ": tokens must be an array");
    int position = 0;
    for (const json& tok : tokens) {
      const std::string at = where + " token " + std::to_string(position);
      if (!tok.is_object()) fail(path, at + ": expected an object");
      Token t;
      t.index = need_int(path, need(path, tok, "index", at), at);
      if (t.index != position)
        fail(path, at + ": index does not match position");
      t.text = need_string(path, need(path, tok, "text", at), at);
      if (auto it = tok.find("lemma"); it != tok.end())
        t.lemma = need_string(path, *it, at);
      t.pos = need_string(path, need(path, tok, "pos", at), at);
      t.dep = need_string(path, need(path, tok, "dep", at), at);
      t.head = need_int(path, need(path, tok, "head", at), at);
      t.sentence_id = need_int(path, need(path, tok, "sentence_id", at), at);
      doc.tokens.push_back(std::move(t));
      ++position;
    }

    if (auto it = body.find("sentence_segments"); it != body.end()) {
      if (!it->is_array()) fail(path, where + ": sentence_segments must be an array");
      int sid = 0;
      for (const json& seg : *it) {
        doc.sentence_segments.push_back(parse_segment(
            path, seg, where + " sentence " + std::to_string(sid++)));
      }
    }

    if (auto it = body.find("clusters"); it != body.end()) {
      if (!it->is_array()) fail(path, where + ": clusters must be an array");
      for (const json& cluster : *it) {
        if (!cluster.is_array()) fail(path, where + ": cluster must be an array");
        std::vector<MentionSpan> spans;
        for (const json& span : cluster) {
          if (!span.is_array() || span.size() != 2)
            fail(path, where + ": mention must be a [first, last] pair");
          spans.push_back({need_int(path, span[0], where),
                           need_int(path, span[1], where)});
        }
        doc.coref_clusters.push_back(std::move(spans));
      }
    }

    std::vector<ValidationIssue> issues = validate_document(doc);
    if (!issues.empty()) {
      std::string message = path + ": " + where + ": invalid document:";
      for (std::size_t i = 0; i < issues.size() && i < 5; ++i) {
        message += " [" + std::string(to_string(issues[i].kind)) + " at " +
                   std::to_string(issues[i].index) + ": " + issues[i].detail + "]";
      }
      if (issues.size() > 5)
        message += " (+" + std::to_string(issues.size() - 5) + " more)";
      throw ValidationError(message, std::move(issues));
    }
    docs.emplace(video_id, std::move(doc));
  }
  return docs;
}

void write_parsed(const std::string& path,
                  const std::map<std::string, ParsedDocument>& docs) {
  std::string out = "{\n";
  bool first_video = true;
  for (const auto& [video_id, doc] : docs) {
    if (!first_video) out += ",\n";
    first_video = false;
    append_json_string(out, video_id);
    out += ":{\"clusters\":";
    append_array(out, doc.coref_clusters,
                 [](std::string& o, const std::vector<MentionSpan>& cluster) {
                   o += '[';
                   for (std::size_t i = 0; i < cluster.size(); ++i) {
                     if (i > 0) o += ',';
                     o += '[' + std::to_string(cluster[i].first) + ',' +
                          std::to_string(cluster[i].last) + ']';
                   }
                   o += ']';
                 });
    out += ",\"sentence_segments\":";
    append_array(out, doc.sentence_segments,
                 [](std::string& o, const TemporalSegment& seg) {
                   append_segment(o, seg);
                 });
    out += ",\"tokens\":";
    append_array(out, doc.tokens, [](std::string& o, const Token& t) {
      o += "{\"dep\":";
      append_json_string(o, t.dep);
      o += ",\"head\":" + std::to_string(t.head);
      o += ",\"index\":" + std::to_string(t.index);
      o += ",\"lemma\":";
      append_json_string(o, t.lemma);
      o += ",\"pos\":";
      append_json_string(o, t.pos);
      o += ",\"sentence_id\":" + std::to_string(t.sentence_id);
      o += ",\"text\":";
      append_json_string(o, t.text);
      o += '}';
    });
    out += '}';
  }
  out += "\n}\n";
  write_file(path, out);
}

// ---------------------------------------------------------------------------
// Metadata.

void write_metadata(const std::string& path, const MetadataFile& metadata) {
  std::string out = "{\n";
  bool first_video = true;
  for (const auto& [video_id, md] : metadata) {
    if (!first_video) out += ",\n";
    first_video = false;

    VideoMetadata sorted = md;
    std::sort(sorted.video_entities.begin(), sorted.video_entities.end());
    std::sort(sorted.event_entities.begin(), sorted.event_entities.end(),
              [](const Entity& a, const Entity& b) {
                return std::tie(a.segment, a.name) < std::tie(b.segment, b.name);
              });
    std::sort(sorted.properties.begin(), sorted.properties.end());
    std::sort(sorted.video_relations.begin(), sorted.video_relations.end());
    std::sort(sorted.event_relations.begin(), sorted.event_relations.end(),
              [](const Relation& a, const Relation& b) {
                return std::tie(a.segment, a.subjects, a.verb, a.modifiers,
                                a.objects) < std::tie(b.segment, b.subjects,
                                                      b.verb, b.modifiers,
                                                      b.objects);
              });

    append_json_string(out, video_id);
    out += ":{\"event_entities\":";
    append_array(out, sorted.event_entities, [](std::string& o, const Entity& e) {
      o += "{\"name\":";
      append_json_string(o, e.name);
      o += ",\"segment\":";
      append_segment(o, e.segment.value_or(TemporalSegment{}));
      o += '}';
    });
    out += ",\"event_relations\":";
    append_array(out, sorted.event_relations,
                 [](std::string& o, const Relation& r) { append_relation(o, r); });
    out += ",\"properties\":";
    append_array(out, sorted.properties,
                 [](std::string& o, const PropertyPair& p) {
                   o += '[';
                   append_json_string(o, p.entity);
                   o += ',';
                   append_json_string(o, p.property);
                   o += ']';
                 });
    out += ",\"video_entities\":";
    append_array(out, sorted.video_entities,
                 [](std::string& o, const Entity& e) {
                   append_json_string(o, e.name);
                 });
    out += ",\"video_relations\":";
    append_array(out, sorted.video_relations,
                 [](std::string& o, const Relation& r) { append_relation(o, r); });
    out += '}';
  }
  out += "\n}\n";
  write_file(path, out);
}

MetadataFile load_metadata(const std::string& path) {
  json root = parse_root_object(path);
  MetadataFile metadata;

  for (const auto& [video_id, body] : root.items()) {
    const std::string where = "video '" + video_id + "'";
    if (!body.is_object()) fail(path, where + ": expected an object");
    VideoMetadata md;

    if (auto it = body.find("video_entities"); it != body.end()) {
      for (const std::string& name : parse_string_array(path, *it, where))
        md.video_entities.push_back({name, std::nullopt});
    }
    if (auto it = body.find("event_entities"); it != body.end()) {
      if (!it->is_array()) fail(path, where + ": event_entities must be an array");
      for (const json& item : *it) {
        if (!item.is_object()) fail(path, where + ": expected an entity object");
        Entity e;
        e.name = need_string(path, need(path, item, "name", where), where);
        e.segment = parse_segment(path, need(path, item, "segment", where), where);
        md.event_entities.push_back(std::move(e));
      }
    }
    if (auto it = body.find("properties"); it != body.end()) {
      if (!it->is_array()) fail(path, where + ": properties must be an array");
      for (const json& item : *it) {
        if (!item.is_array() || item.size() != 2)
          fail(path, where + ": property must be an [entity, property] pair");
        md.properties.push_back({need_string(path, item[0], where),
                                 need_string(path, item[1], where)});
      }
    }
    if (auto it = body.find("video_relations"); it != body.end()) {
      if (!it->is_array()) fail(path, where + ": video_relations must be an array");
      for (const json& item : *it) {
        Relation r = parse_relation(path, item, where);
        if (r.segment) fail(path, where + ": video relation carries a segment");
        md.video_relations.push_back(std::move(r));
      }
    }
    if (auto it = body.find("event_relations"); it != body.end()) {
      if (!it->is_array()) fail(path, where + ": event_relations must be an array");
      for (const json& item : *it) {
        Relation r = parse_relation(path, item, where);
        if (!r.segment) fail(path, where + ": event relation lacks a segment");
        md.event_relations.push_back(std::move(r));
      }
    }
    metadata.emplace(video_id, std::move(md));
  }
  return metadata;
}

// ---------------------------------------------------------------------------
// Frequency index and reports.

void write_freq_index(const std::string& path, const FrequencyIndex& index) {
  std::string out = "{\"counts\":{";
  bool first = true;
  for (const auto& [name, count] : index.counts) {
    if (!first) out += ',';
    first = false;
    append_json_string(out, name);
    out += ':' + std::to_string(count);
  }
  out += "}}\n";
  write_file(path, out);
}

FrequencyIndex load_freq_index(const std::string& path) {
  json root = parse_root_object(path);
  const json& counts = need(path, root, "counts", "frequency index");
  if (!counts.is_object()) fail(path, "counts must be an object");
  FrequencyIndex index;
  for (const auto& [name, value] : counts.items()) {
    if (!value.is_number_integer() || value.get<long long>() < 1)
      fail(path, "count for '" + name + "' must be a positive integer");
    index.counts[name] = value.get<long long>();
  }
  return index;
}

std::string format_report(const EvalReport& report, const std::string& type) {
  std::ostringstream out;
  out << "type " << type << '\n';
  out << "videos_evaluated " << report.videos_evaluated << '\n';
  out << "ignored_pred_videos " << report.ignored_pred_videos << '\n';
  for (const ThresholdResult& row : report.per_threshold) {
    char thr[32];
    std::snprintf(thr, sizeof(thr), "%g", row.threshold);
    out << "n_pred@" << thr << ' ' << row.counts.n_pred << '\n';
    out << "n_gold@" << thr << ' ' << row.counts.n_gold << '\n';
    out << "tp_p@" << thr << ' ' << row.counts.tp_p << '\n';
    out << "tp_g@" << thr << ' ' << row.counts.tp_g << '\n';
    out << "precision@" << thr << ' ' << fixed6(row.precision) << '\n';
    out << "recall@" << thr << ' ' << fixed6(row.recall) << '\n';
  }
  if (report.per_threshold.empty()) {
    out << "n_pred " << report.counts.n_pred << '\n';
    out << "n_gold " << report.counts.n_gold << '\n';
    out << "tp_p " << report.counts.tp_p << '\n';
    out << "tp_g " << report.counts.tp_g << '\n';
  }
  out << "precision " << fixed6(report.avg_precision) << '\n';
  out << "recall " << fixed6(report.avg_recall) << '\n';
  out << "f1 " << fixed6(report.f1) << '\n';
  return out.str();
}

void write_report(const std::string& path, const EvalReport& report,
                  const std::string& type) {
  write_file(path, format_report(report, type));
}

// ---------------------------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write file '" + path + "'");
  out << content;
  if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace vcmeta
