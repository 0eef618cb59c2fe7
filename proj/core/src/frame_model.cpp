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

#include "strokepheno/frame_model.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "strokepheno/utf8.hpp"

namespace strokepheno {
namespace {

constexpr std::array<std::pair<ElementKind, std::string_view>, 9> kKindLabels{{
    {ElementKind::kFigure, "Figure"},
    {ElementKind::kGround, "Ground"},
    {ElementKind::kHedge, "Hedge"},
    {ElementKind::kDiagnosis, "Diagnosis"},
    {ElementKind::kRelativePosition, "RelativePosition"},
    {ElementKind::kDistance, "Distance"},
    {ElementKind::kPositionStatus, "PositionStatus"},
    {ElementKind::kReason, "Reason"},
    {ElementKind::kAssociatedProcess, "AssociatedProcess"},
}};

// Appends findings for one span; stops at the first failed check so a
// single defect yields a single finding.
void check_span(const Span& span, std::string_view sentence,
                std::size_t sentence_length, std::size_t sentence_index,
                std::size_t frame_index, const std::string& what,
                std::vector<ValidationFinding>& out) {
  auto add = [&](std::string message) {
    out.push_back({sentence_index, frame_index, what + ": " + std::move(message)});
  };
  if (!(span.start < span.end)) {
    add("span start < end violated");
    return;
  }
  if (utf8::length(span.text) != span.end - span.start) {
    add("span text length does not equal end - start");
    return;
  }
  if (span.end > sentence_length) {
    add("span extends past end of sentence");
    return;
  }
  const auto actual = utf8::substr(sentence, span.start, span.end);
  if (!actual || *actual != span.text) {
    add("span text does not match sentence substring \"" +
        std::string(actual.value_or("")) + "\"");
  }
}

}  // namespace

std::string_view to_string(ElementKind kind) {
  for (const auto& [k, label] : kKindLabels) {
    if (k == kind) return label;
  }
  return "?";
}

ElementKind parse_element_kind(std::string_view label) {
  for (const auto& [k, name] : kKindLabels) {
    if (name == label) return k;
  }
  throw LabelError("unknown element kind \"" + std::string(label) + "\"");
}

std::string_view to_string(Modality modality) {
  return modality == Modality::kCT ? "CT" : "MRI";
}

Modality parse_modality(std::string_view label) {
  if (label == "CT") return Modality::kCT;
  if (label == "MRI") return Modality::kMRI;
  throw LabelError("unknown modality \"" + std::string(label) + "\"");
}

std::string describe(const ValidationFinding& finding) {
  std::string out = "sentence " + std::to_string(finding.sentence);
  if (finding.frame) out += ", frame " + std::to_string(*finding.frame);
  return out + ": " + finding.message;
}

std::vector<ValidationFinding> validate_report(const ReportDocument& report) {
  std::vector<ValidationFinding> findings;
  if (report.report_id.empty()) {
    findings.push_back({0, std::nullopt, "report_id is empty"});
  }
  for (std::size_t s = 0; s < report.sentences.size(); ++s) {
    const Sentence& sentence = report.sentences[s];
    const std::size_t sentence_length = utf8::length(sentence.text);
    for (std::size_t f = 0; f < sentence.frames.size(); ++f) {
      const SpatialFrame& frame = sentence.frames[f];
      if (frame.sentence_index != s) {
        findings.push_back({s, f,
                            "sentence_index " +
                                std::to_string(frame.sentence_index) +
                                " does not match sentence position"});
      }
      check_span(frame.trigger, sentence.text, sentence_length, s, f,
                 "trigger", findings);
      for (std::size_t e = 0; e < frame.elements.size(); ++e) {
        const FrameElement& element = frame.elements[e];
        check_span(element.span, sentence.text, sentence_length, s, f,
                   "element " + std::to_string(e) + " (" +
                       std::string(to_string(element.kind)) + ")",
                   findings);
      }
      if (f > 0 && sentence.frames[f - 1].trigger.start > frame.trigger.start) {
        findings.push_back(
            {s, f, "frames not ordered by trigger start offset"});
      }
    }
  }
  return findings;
}

std::vector<Span> elements_of(const SpatialFrame& frame, ElementKind kind) {
  std::vector<Span> out;
  for (const FrameElement& element : frame.elements) {
    if (element.kind == kind) out.push_back(element.span);
  }
  std::stable_sort(out.begin(), out.end(), [](const Span& a, const Span& b) {
    return a.start < b.start;
  });
  return out;
}

Span make_span(std::string_view sentence, std::size_t start, std::size_t end) {
  const auto text = utf8::substr(sentence, start, end);
  if (!text) throw std::out_of_range("span outside sentence");
  return Span{start, end, std::string(*text)};
}

}  // namespace strokepheno
