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

#ifndef STROKEPHENO_CORPUS_IO_HPP_
#define STROKEPHENO_CORPUS_IO_HPP_

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "strokepheno/frame_model.hpp"
#include "strokepheno/phenotype.hpp"

namespace strokepheno {

// Malformed or inconsistent input. `line` is 1-based, 0 when the problem is
// not tied to a line (write failures).
class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A report parsed fine but violates span or ordering invariants.
class CorpusValidationError : public CorpusError {
 public:
  CorpusValidationError(std::size_t line, std::string report_id,
                        std::vector<ValidationFinding> findings);
  const std::string& report_id() const { return report_id_; }
  const std::vector<ValidationFinding>& findings() const { return findings_; }

 private:
  std::string report_id_;
  std::vector<ValidationFinding> findings_;
};

// Report corpus, one JSON object per line:
//   {"report_id": "...", "modality": "CT"|"MRI",
//    "sentences": [{"text": "...",
//                   "frames": [{"trigger": {"start","end","text"},
//                               "elements": [{"kind","start","end","text"}]}]}]}
// Blank lines are skipped. sentence_index is implied by sentence position.

// Structural parse only; duplicate ids and bad labels throw, span
// invariants are not checked.
std::vector<ReportDocument> parse_reports(std::istream& in);

// parse_reports() plus validate_report() on every report. Throws
// CorpusValidationError for the first report with findings.
std::vector<ReportDocument> load_reports(std::istream& in);

void write_reports(const std::vector<ReportDocument>& reports,
                   std::ostream& out);

// Phenotype files, one JSON object per line:
//   {"report_id": "...",
//    "phenotypes": [{"side","region","stage","lacunar": bool}]}
struct PhenotypeRecord {
  std::string report_id;
  PhenotypeSet phenotypes;

  friend bool operator==(const PhenotypeRecord&,
                         const PhenotypeRecord&) = default;
};
using GoldPhenotypeRecord = PhenotypeRecord;

// Annotators list at most this many combinations per report.
inline constexpr std::size_t kMaxGoldPhenotypes = 5;

struct LoadWarning {
  std::size_t line = 0;
  std::string message;
};

// Gold annotations: duplicates collapse with a warning, more than
// kMaxGoldPhenotypes distinct tuples is an error.
std::vector<GoldPhenotypeRecord> load_gold(
    std::istream& in, std::vector<LoadWarning>* warnings = nullptr);

// System output: same format, no cap.
std::vector<PhenotypeRecord> load_predictions(
    std::istream& in, std::vector<LoadWarning>* warnings = nullptr);

// Canonical form: records sorted by report_id, tuples in Phenotype order.
void write_phenotypes(std::vector<PhenotypeRecord> records, std::ostream& out);

// Raw-text input for the pattern extractor, one JSON object per line:
//   {"report_id": "...", "modality": "CT"|"MRI", "sentences": ["...", ...]}
struct TextReport {
  std::string report_id;
  Modality modality = Modality::kCT;
  std::vector<std::string> sentences;
};

std::vector<TextReport> load_text_reports(std::istream& in);

}  // namespace strokepheno

#endif  // STROKEPHENO_CORPUS_IO_HPP_
