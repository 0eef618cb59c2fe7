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

#ifndef STROKEPHENO_FRAME_MODEL_HPP_
#define STROKEPHENO_FRAME_MODEL_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strokepheno {

// A mention inside a sentence. Offsets count Unicode scalar values,
// `start` inclusive and `end` exclusive.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string text;

  friend bool operator==(const Span&, const Span&) = default;
};

enum class ElementKind {
  kFigure,
  kGround,
  kHedge,
  kDiagnosis,
  kRelativePosition,
  kDistance,
  kPositionStatus,
  kReason,
  kAssociatedProcess,
};

inline constexpr ElementKind kAllElementKinds[] = {
    ElementKind::kFigure,           ElementKind::kGround,
    ElementKind::kHedge,            ElementKind::kDiagnosis,
    ElementKind::kRelativePosition, ElementKind::kDistance,
    ElementKind::kPositionStatus,   ElementKind::kReason,
    ElementKind::kAssociatedProcess,
};

// Thrown when a closed-vocabulary label does not parse.
class LabelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string_view to_string(ElementKind kind);
// Accepts the exact labels produced by to_string(ElementKind).
ElementKind parse_element_kind(std::string_view label);

struct FrameElement {
  ElementKind kind = ElementKind::kFigure;
  Span span;

  friend bool operator==(const FrameElement&, const FrameElement&) = default;
};

// One spatial trigger and the elements attached to it. A frame may carry
// several elements of the same kind (coordinated Grounds, for instance) or
// none at all.
struct SpatialFrame {
  Span trigger;
  std::vector<FrameElement> elements;
  std::size_t sentence_index = 0;

  friend bool operator==(const SpatialFrame&, const SpatialFrame&) = default;
};

enum class Modality { kCT, kMRI };

std::string_view to_string(Modality modality);
Modality parse_modality(std::string_view label);

struct Sentence {
  std::string text;
  // Ordered by trigger start offset.
  std::vector<SpatialFrame> frames;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct ReportDocument {
  std::string report_id;
  Modality modality = Modality::kCT;
  std::vector<Sentence> sentences;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

// One violated invariant. `frame` is unset for sentence- or report-level
// findings.
struct ValidationFinding {
  std::size_t sentence = 0;
  std::optional<std::size_t> frame;
  std::string message;

  friend bool operator==(const ValidationFinding&,
                         const ValidationFinding&) = default;
};

std::string describe(const ValidationFinding& finding);

// Checks span and ordering invariants. Empty result means the report is
// well formed.
std::vector<ValidationFinding> validate_report(const ReportDocument& report);

// All spans of `kind` in `frame`, ascending by start offset.
std::vector<Span> elements_of(const SpatialFrame& frame, ElementKind kind);

// Builds a span over scalars [start, end) of `sentence`. Throws
// std::out_of_range when the range is not inside the sentence.
Span make_span(std::string_view sentence, std::size_t start, std::size_t end);

}  // namespace strokepheno

#endif  // STROKEPHENO_FRAME_MODEL_HPP_
