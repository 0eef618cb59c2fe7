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

#include "strokepheno/phenotype_engine.hpp"

#include <gtest/gtest.h>

#include "builders.hpp"

namespace strokepheno {
namespace {

using K = ElementKind;
using L = Laterality;
using R = BrainRegion;
using S = Stage;
using testing::make_report;

const Lexicon& lex() { return Lexicon::builtin(); }

PhenotypeSet classify_one(Modality modality, const std::string& text,
                          std::vector<testing::FrameSpec> frames) {
  return classify_report(make_report("r", modality, {{text, std::move(frames)}}), lex());
}

TEST(ChainFrames, LinksThroughSharedSpan) {
  const ReportDocument report = testing::granular_sample_report();
  const auto chains = chain_frames(report.sentences[0].frames);
  ASSERT_EQ(chains.size(), 1u);
  EXPECT_EQ(chains[0].frame_indices, (std::vector<std::size_t>{0, 1}));
  ASSERT_EQ(chains[0].merged_figure.size(), 1u);
  EXPECT_EQ(chains[0].merged_figure[0].text, "Acute infarction");
  ASSERT_EQ(chains[0].merged_ground.size(), 1u);
  EXPECT_EQ(chains[0].merged_ground[0].text, "right cerebellum");
}

TEST(ChainFrames, LinksThroughSharedLastWord) {
  const std::string text = "Infarct in the left lobe with edema of the lobe.";
  const ReportDocument report = make_report(
      "r", Modality::kCT,
      {{text,
        {{"in", {{K::kFigure, "Infarct"}, {K::kGround, "the left lobe"}}},
         {"of", {{K::kFigure, "edema of the lobe"}, {K::kGround, "the lobe."}}}}}});
  EXPECT_TRUE(frames_link(report.sentences[0].frames[0], report.sentences[0].frames[1]));
}

TEST(ChainFrames, UnrelatedFramesStaySeparate) {
  const ReportDocument report = testing::cortical_hypodensity_report(true);
  const auto chains = chain_frames(report.sentences[0].frames);
  EXPECT_EQ(chains.size(), 2u);
  EXPECT_TRUE(chain_frames({}).empty());
}

TEST(PropagateLaterality, CarriesForward) {
  const std::string text = "x left frontal lobe, parietal lobe, right insula, pons";
  const std::vector<Span> grounds = {
      testing::span_of(text, "left frontal lobe"), testing::span_of(text, "parietal lobe"),
      testing::span_of(text, "right insula"), testing::span_of(text, "pons")};
  const auto sides = propagate_laterality(grounds, lex());
  ASSERT_EQ(sides.size(), 4u);
  EXPECT_EQ(sides[0].second, L::kLeft);
  EXPECT_EQ(sides[1].second, L::kLeft);
  EXPECT_EQ(sides[2].second, L::kRight);
  EXPECT_EQ(sides[3].second, L::kRight);
}

TEST(Classify, GranularSample) {
  const PhenotypeSet expected = {{L::kRight, R::kCerebellum, S::kAcute, false},
                                 {L::kLeft, R::kCerebellum, S::kChronic, false},
                                 {L::kRight, R::kBrainstem, S::kAcute, false}};
  EXPECT_EQ(classify_report(testing::granular_sample_report(), lex()), expected);
}

TEST(Classify, CortexStageFromConstraints) {
  EXPECT_EQ(classify_report(testing::cortical_hypodensity_report(true), lex()),
            (PhenotypeSet{{L::kRight, R::kFrontalLobe, S::kAcute, false}}));
  EXPECT_EQ(classify_report(testing::cortical_hypodensity_report(false), lex()),
            (PhenotypeSet{{L::kRight, R::kFrontalLobe, S::kCantDetermine, false}}));
}

TEST(Classify, ConstraintsNeedCorticalLocation) {
  const std::string text = "Hypodensity in the left thalamus with effacement of the sulci.";
  const auto result = classify_one(
      Modality::kCT, text,
      {{"in", {{K::kFigure, "Hypodensity"}, {K::kGround, "the left thalamus"}}},
       {"of", {{K::kFigure, "effacement"}, {K::kGround, "the sulci"}}}});
  EXPECT_EQ(result, (PhenotypeSet{{L::kLeft, R::kThalamus, S::kCantDetermine, false}}));
}

TEST(Classify, ChronicCueIsReportWide) {
  const ReportDocument report = make_report(
      "r", Modality::kCT,
      {{"Hypodensity in the right pons.",
        {{"in", {{K::kFigure, "Hypodensity"}, {K::kGround, "the right pons"}}}}},
       {"Gliosis in the left frontal lobe.",
        {{"in", {{K::kFigure, "Gliosis"}, {K::kGround, "the left frontal lobe"}}}}}});
  const PhenotypeSet expected = {{L::kRight, R::kBrainstem, S::kChronic, false},
                                 {L::kLeft, R::kFrontalLobe, S::kChronic, false}};
  EXPECT_EQ(classify_report(report, lex()), expected);
}

TEST(Classify, MriRestrictedDiffusionIsAcuteInCortex) {
  const auto cortex = classify_one(
      Modality::kMRI, "Restricted diffusion in the left insula.",
      {{"in", {{K::kFigure, "Restricted diffusion"}, {K::kGround, "the left insula"}}}});
  EXPECT_EQ(cortex, (PhenotypeSet{{L::kLeft, R::kInsula, S::kAcute, false}}));
  const auto deep = classify_one(
      Modality::kMRI, "Restricted diffusion in the left thalamus.",
      {{"in", {{K::kFigure, "Restricted diffusion"}, {K::kGround, "the left thalamus"}}}});
  EXPECT_EQ(deep, (PhenotypeSet{{L::kLeft, R::kThalamus, S::kCantDetermine, false}}));
  const auto cortical_ground = classify_one(
      Modality::kMRI, "Restricted diffusion in the subcortical left thalamus.",
      {{"in", {{K::kFigure, "Restricted diffusion"},
               {K::kGround, "the subcortical left thalamus"}}}});
  EXPECT_EQ(cortical_ground, (PhenotypeSet{{L::kLeft, R::kThalamus, S::kAcute, false}}));
}

TEST(Classify, FindingFilterIsModalitySpecific) {
  const std::string text = "Hypodensity in the right pons.";
  const std::vector<testing::FrameSpec> frames = {
      {"in", {{K::kFigure, "Hypodensity"}, {K::kGround, "the right pons"}}}};
  EXPECT_EQ(classify_one(Modality::kCT, text, frames).size(), 1u);
  EXPECT_TRUE(classify_one(Modality::kMRI, text, frames).empty());
}

TEST(Classify, DiagnosisQualifiesAndStages) {
  const std::string text = "Density in the left cerebellum, likely represents old infarct.";
  const auto result = classify_one(
      Modality::kCT, text,
      {{"in", {{K::kFigure, "Density"}, {K::kGround, "the left cerebellum"},
               {K::kHedge, "likely represents"}, {K::kDiagnosis, "old infarct"}}}});
  EXPECT_EQ(result, (PhenotypeSet{{L::kLeft, R::kCerebellum, S::kChronic, false}}));
}

TEST(Classify, LacunarFlag) {
  const auto result = classify_one(
      Modality::kCT, "Lacunar infarct in the left internal capsule.",
      {{"in", {{K::kFigure, "Lacunar infarct"}, {K::kGround, "the left internal capsule"}}}});
  EXPECT_EQ(result, (PhenotypeSet{{L::kLeft, R::kInternalExternalCapsule,
                                   S::kCantDetermine, true}}));
}

TEST(Classify, SameGroupMergesEvidence) {
  const ReportDocument report = make_report(
      "r", Modality::kCT,
      {{"Infarct in the left pons.",
        {{"in", {{K::kFigure, "Infarct"}, {K::kGround, "the left pons"}}}}},
       {"Old lacune in the left midbrain.",
        {{"in", {{K::kFigure, "Old lacune"}, {K::kGround, "the left midbrain"}}}}}});
  EXPECT_EQ(classify_report(report, lex()),
            (PhenotypeSet{{L::kLeft, R::kBrainstem, S::kChronic, true}}));
}

TEST(Classify, EmptyReport) {
  EXPECT_TRUE(classify_report(make_report("r", Modality::kCT, {}), lex()).empty());
}

TEST(Describe, Phenotype) {
  EXPECT_EQ(describe(Phenotype{L::kRight, R::kCerebellum, S::kAcute, false}),
            "(Right, Cerebellum, Acute, not lacunar)");
}

}  // namespace
}  // namespace strokepheno
