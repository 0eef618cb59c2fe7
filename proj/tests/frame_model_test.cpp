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

#include <gtest/gtest.h>

#include "builders.hpp"
#include "strokepheno/utf8.hpp"

namespace strokepheno {
namespace {

using testing::granular_sample_report;
using testing::make_report;

TEST(Utf8, LengthCountsScalars) {
  EXPECT_EQ(utf8::length("abc"), 3u);
  EXPECT_EQ(utf8::length("caf\xC3\xA9"), 4u);
  EXPECT_EQ(utf8::length("a\xE2\x80\x94" "b"), 3u);
  EXPECT_EQ(utf8::length(""), 0u);
}

TEST(Utf8, SubstrUsesScalarOffsets) {
  const std::string text = "caf\xC3\xA9 au lait";
  EXPECT_EQ(utf8::substr(text, 0, 4).value(), "caf\xC3\xA9");
  EXPECT_EQ(utf8::substr(text, 5, 7).value(), "au");
  EXPECT_FALSE(utf8::substr(text, 5, 40).has_value());
}

TEST(ElementKind, LabelsRoundTrip) {
  for (ElementKind kind : kAllElementKinds) {
    EXPECT_EQ(parse_element_kind(to_string(kind)), kind);
  }
  EXPECT_EQ(to_string(ElementKind::kAssociatedProcess), "AssociatedProcess");
  EXPECT_THROW(parse_element_kind("figure"), LabelError);
  EXPECT_THROW(parse_element_kind(""), LabelError);
}

TEST(Modality, LabelsRoundTrip) {
  EXPECT_EQ(parse_modality("CT"), Modality::kCT);
  EXPECT_EQ(parse_modality("MRI"), Modality::kMRI);
  EXPECT_EQ(to_string(Modality::kMRI), "MRI");
  EXPECT_THROW(parse_modality("PET"), LabelError);
}

TEST(MakeSpan, SlicesByScalar) {
  const Span span = make_span("Old infarct in the pons.", 0, 11);
  EXPECT_EQ(span.text, "Old infarct");
  EXPECT_THROW(make_span("short", 2, 9), std::out_of_range);
}

TEST(ValidateReport, SampleIsClean) {
  EXPECT_TRUE(validate_report(granular_sample_report()).empty());
}

TEST(ValidateReport, EmptyIdIsReported) {
  ReportDocument report = granular_sample_report();
  report.report_id.clear();
  const auto findings = validate_report(report);
  ASSERT_EQ(findings.size(), 1u);
}

TEST(ValidateReport, TextMismatchIsReported) {
  ReportDocument report = granular_sample_report();
  report.sentences[0].frames[0].elements[0].span.text = "Acute infarct";
  const auto findings = validate_report(report);
  ASSERT_EQ(findings.size(), 1u);
  EXPECT_EQ(findings[0].sentence, 0u);
  EXPECT_EQ(findings[0].frame, 0u);
  EXPECT_NE(findings[0].message.find("element 0 (Figure)"), std::string::npos);
}

TEST(ValidateReport, InvertedSpanIsReported) {
  ReportDocument report = granular_sample_report();
  auto& trigger = report.sentences[2].frames[0].trigger;
  std::swap(trigger.start, trigger.end);
  const auto findings = validate_report(report);
  ASSERT_EQ(findings.size(), 1u);
  EXPECT_NE(findings[0].message.find("trigger: "), std::string::npos);
  EXPECT_NE(findings[0].message.find("start < end"), std::string::npos);
}

TEST(ValidateReport, OutOfRangeSpanIsReported) {
  ReportDocument report = granular_sample_report();
  auto& ground = report.sentences[1].frames[0].elements[1].span;
  ground.end += 200;
  EXPECT_FALSE(validate_report(report).empty());
}

TEST(ValidateReport, WrongSentenceIndexIsReported) {
  ReportDocument report = granular_sample_report();
  report.sentences[1].frames[0].sentence_index = 0;
  EXPECT_EQ(validate_report(report).size(), 1u);
}

TEST(ValidateReport, UnorderedFramesAreReported) {
  ReportDocument report = granular_sample_report();
  auto& frames = report.sentences[0].frames;
  std::swap(frames[0], frames[1]);
  EXPECT_FALSE(validate_report(report).empty());
}

TEST(ValidateReport, NonAsciiOffsetsAreScalarBased) {
  using K = ElementKind;
  const ReportDocument report = make_report(
      "r", Modality::kCT,
      {{"Caf\xC3\xA9 note: old infarct in the pons.",
        {{"in", {{K::kFigure, "old infarct"}, {K::kGround, "the pons"}}}}}});
  EXPECT_TRUE(validate_report(report).empty());
  EXPECT_EQ(report.sentences[0].frames[0].trigger.start, 23u);
}

TEST(ElementsOf, SortsByStart) {
  SpatialFrame frame;
  frame.elements = {{ElementKind::kGround, {10, 12, "xx"}},
                    {ElementKind::kGround, {2, 4, "yy"}},
                    {ElementKind::kFigure, {0, 1, "z"}}};
  const auto grounds = elements_of(frame, ElementKind::kGround);
  ASSERT_EQ(grounds.size(), 2u);
  EXPECT_EQ(grounds[0].start, 2u);
  EXPECT_EQ(grounds[1].start, 10u);
}

}  // namespace
}  // namespace strokepheno
