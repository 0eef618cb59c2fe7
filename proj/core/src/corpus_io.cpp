// Copyright 2026 The strokepheno Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "strokepheno/corpus_io.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <utility>

#include "json.hpp"

namespace strokepheno {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Reads non-blank lines as JSON objects, handing each to `fn` together with
// its 1-based line number.
template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw CorpusError(line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!record.is_object()) {
      throw CorpusError(line_no, "record is not a JSON object");
    }
    fn(record, line_no);
  }
  if (in.bad()) throw CorpusError(line_no, "read error");
}

class FieldReader {
 public:
  explicit FieldReader(std::size_t line) : line_(line) {}

  const json& get(const json& obj, const std::string& key,
                  const std::string& path) const {
    if (!obj.is_object() || !obj.contains(key)) {
      throw CorpusError(line_, "missing field \"" + path + key + "\"");
    }
    return obj.at(key);
  }

  std::string string(const json& obj, const std::string& key,
                     const std::string& path = "") const {
    const json& v = get(obj, key, path);
    if (!v.is_string()) fail(path + key, "a string");
    return v.get<std::string>();
  }

  std::size_t offset(const json& obj, const std::string& key,
                     const std::string& path) const {
    const json& v = get(obj, key, path);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      fail(path + key, "a non-negative integer");
    }
    return v.get<std::size_t>();
  }

  bool boolean(const json& obj, const std::string& key,
               const std::string& path) const {
    const json& v = get(obj, key, path);
    if (!v.is_boolean()) fail(path + key, "a boolean");
    return v.get<bool>();
  }

  const json& array(const json& obj, const std::string& key,
                    const std::string& path = "") const {
    const json& v = get(obj, key, path);
    if (!v.is_array()) fail(path + key, "an array");
    return v;
  }

  template <typename Parse>
  auto label(const json& obj, const std::string& key, const std::string& path,
             Parse&& parse) const {
    const std::string value = string(obj, key, path);
    try {
      return parse(value);
    } catch (const LabelError& e) {
      throw CorpusError(line_, "field \"" + path + key + "\": " + e.what());
    }
  }

  [[noreturn]] void fail(const std::string& field,
                         const std::string& expected) const {
    throw CorpusError(line_, "field \"" + field + "\" must be " + expected);
  }

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Span read_span(const FieldReader& r, const json& obj, const std::string& path) {
  return Span{r.offset(obj, "start", path), r.offset(obj, "end", path),
              r.string(obj, "text", path)};
}

ReportDocument read_report(const json& record, std::size_t line) {
  const FieldReader r(line);
  ReportDocument report;
  report.report_id = r.string(record, "report_id");
  if (report.report_id.empty()) r.fail("report_id", "non-empty");
  report.modality = r.label(record, "modality", "", parse_modality);
  const json& sentences = r.array(record, "sentences");
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const std::string spath = "sentences[" + std::to_string(s) + "].";
    const json& js = sentences[s];
    if (!js.is_object()) r.fail(spath.substr(0, spath.size() - 1), "an object");
    Sentence sentence;
    sentence.text = r.string(js, "text", spath);
    const json& frames = r.array(js, "frames", spath);
    for (std::size_t f = 0; f < frames.size(); ++f) {
      const std::string fpath = spath + "frames[" + std::to_string(f) + "].";
      const json& jf = frames[f];
      if (!jf.is_object()) r.fail(fpath.substr(0, fpath.size() - 1), "an object");
      SpatialFrame frame;
      frame.sentence_index = s;
      const json& trigger = r.get(jf, "trigger", fpath);
      if (!trigger.is_object()) r.fail(fpath + "trigger", "an object");
      frame.trigger = read_span(r, trigger, fpath + "trigger.");
      const json& elements = r.array(jf, "elements", fpath);
      for (std::size_t e = 0; e < elements.size(); ++e) {
        const std::string epath =
            fpath + "elements[" + std::to_string(e) + "].";
        const json& je = elements[e];
        if (!je.is_object()) r.fail(epath.substr(0, epath.size() - 1), "an object");
        FrameElement element;
        element.kind = r.label(je, "kind", epath, parse_element_kind);
        element.span = read_span(r, je, epath);
        frame.elements.push_back(std::move(element));
      }
      sentence.frames.push_back(std::move(frame));
    }
    report.sentences.push_back(std::move(sentence));
  }
  return report;
}

ordered_json span_json(const Span& span) {
  ordered_json j;
  j["start"] = span.start;
  j["end"] = span.end;
  j["text"] = span.text;
  return j;
}

std::vector<PhenotypeRecord> read_phenotype_records(
    std::istream& in, std::optional<std::size_t> cap,
    std::vector<LoadWarning>* warnings) {
  std::vector<PhenotypeRecord> records;
  for_each_record(in, [&](const json& record, std::size_t line) {
    const FieldReader r(line);
    PhenotypeRecord out;
    out.report_id = r.string(record, "report_id");
    if (out.report_id.empty()) r.fail("report_id", "non-empty");
    const json& phenotypes = r.array(record, "phenotypes");
    for (std::size_t i = 0; i < phenotypes.size(); ++i) {
      const std::string path = "phenotypes[" + std::to_string(i) + "].";
      const json& jp = phenotypes[i];
      if (!jp.is_object()) r.fail(path.substr(0, path.size() - 1), "an object");
      Phenotype p;
      p.side = r.label(jp, "side", path, parse_laterality);
      p.region = r.label(jp, "region", path, parse_brain_region);
      p.stage = r.label(jp, "stage", path, parse_stage);
      p.lacunar = r.boolean(jp, "lacunar", path);
      if (!out.phenotypes.insert(p).second && warnings) {
        warnings->push_back({line, "report " + out.report_id +
                                       ": duplicate phenotype " + describe(p) +
                                       " collapsed"});
      }
    }
    if (cap && out.phenotypes.size() > *cap) {
      throw CorpusError(line, "report " + out.report_id + " has " +
                                  std::to_string(out.phenotypes.size()) +
                                  " distinct phenotypes; at most " +
                                  std::to_string(*cap) + " are allowed");
    }
    records.push_back(std::move(out));
  });
  return records;
}

void check_written(const std::ostream& out) {
  if (!out) throw CorpusError(0, "write failed");
}

std::vector<ReportDocument> read_reports(std::istream& in, bool validate) {
  std::vector<ReportDocument> reports;
  std::set<std::string> ids;
  for_each_record(in, [&](const json& record, std::size_t line) {
    ReportDocument report = read_report(record, line);
    if (!ids.insert(report.report_id).second) {
      throw CorpusError(line, "duplicate report_id \"" + report.report_id + "\"");
    }
    if (validate) {
      auto findings = validate_report(report);
      if (!findings.empty()) {
        throw CorpusValidationError(line, report.report_id, std::move(findings));
      }
    }
    reports.push_back(std::move(report));
  });
  return reports;
}

}  // namespace

CorpusError::CorpusError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message
                              : message),
      line_(line) {}

CorpusValidationError::CorpusValidationError(
    std::size_t line, std::string report_id,
    std::vector<ValidationFinding> findings)
    : CorpusError(line, "report " + report_id + " failed validation (" +
                            std::to_string(findings.size()) + " finding(s))"),
      report_id_(std::move(report_id)),
      findings_(std::move(findings)) {}

std::vector<ReportDocument> parse_reports(std::istream& in) {
  return read_reports(in, /*validate=*/false);
}

std::vector<ReportDocument> load_reports(std::istream& in) {
  return read_reports(in, /*validate=*/true);
}

void write_reports(const std::vector<ReportDocument>& reports,
                   std::ostream& out) {
  for (const ReportDocument& report : reports) {
    ordered_json j;
    j["report_id"] = report.report_id;
    j["modality"] = std::string(to_string(report.modality));
    j["sentences"] = ordered_json::array();
    for (const Sentence& sentence : report.sentences) {
      ordered_json js;
      js["text"] = sentence.text;
      js["frames"] = ordered_json::array();
      for (const SpatialFrame& frame : sentence.frames) {
        ordered_json jf;
        jf["trigger"] = span_json(frame.trigger);
        jf["elements"] = ordered_json::array();
        for (const FrameElement& element : frame.elements) {
          ordered_json je;
          je["kind"] = std::string(to_string(element.kind));
          je["start"] = element.span.start;
          je["end"] = element.span.end;
          je["text"] = element.span.text;
          jf["elements"].push_back(std::move(je));
        }
        js["frames"].push_back(std::move(jf));
      }
      j["sentences"].push_back(std::move(js));
    }
    out << j.dump() << '\n';
  }
  check_written(out);
}

std::vector<GoldPhenotypeRecord> load_gold(std::istream& in,
                                           std::vector<LoadWarning>* warnings) {
  return read_phenotype_records(in, kMaxGoldPhenotypes, warnings);
}

std::vector<PhenotypeRecord> load_predictions(
    std::istream& in, std::vector<LoadWarning>* warnings) {
  return read_phenotype_records(in, std::nullopt, warnings);
}

void write_phenotypes(std::vector<PhenotypeRecord> records, std::ostream& out) {
  std::stable_sort(records.begin(), records.end(),
                   [](const PhenotypeRecord& a, const PhenotypeRecord& b) {
                     return a.report_id < b.report_id;
                   });
  for (const PhenotypeRecord& record : records) {
    ordered_json j;
    j["report_id"] = record.report_id;
    j["phenotypes"] = ordered_json::array();
    for (const Phenotype& p : record.phenotypes) {
      ordered_json jp;
      jp["side"] = std::string(to_string(p.side));
      jp["region"] = std::string(to_string(p.region));
      jp["stage"] = std::string(to_string(p.stage));
      jp["lacunar"] = p.lacunar;
      j["phenotypes"].push_back(std::move(jp));
    }
    out << j.dump() << '\n';
  }
  check_written(out);
}

std::vector<TextReport> load_text_reports(std::istream& in) {
  std::vector<TextReport> reports;
  std::set<std::string> ids;
  for_each_record(in, [&](const json& record, std::size_t line) {
    const FieldReader r(line);
    TextReport report;
    report.report_id = r.string(record, "report_id");
    if (report.report_id.empty()) r.fail("report_id", "non-empty");
    if (!ids.insert(report.report_id).second) {
      throw CorpusError(line, "duplicate report_id \"" + report.report_id + "\"");
    }
    report.modality = r.label(record, "modality", "", parse_modality);
    const json& sentences = r.array(record, "sentences");
    for (std::size_t s = 0; s < sentences.size(); ++s) {
      if (!sentences[s].is_string()) {
        r.fail("sentences[" + std::to_string(s) + "]", "a string");
      }
      report.sentences.push_back(sentences[s].get<std::string>());
    }
    reports.push_back(std::move(report));
  });
  return reports;
}

}  // namespace strokepheno
