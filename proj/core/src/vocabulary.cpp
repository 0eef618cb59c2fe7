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

#include "strokepheno/vocabulary.hpp"

#include <array>
#include <string>
#include <utility>

namespace strokepheno {
namespace {

template <typename Enum, std::size_t N>
using LabelTable = std::array<std::pair<Enum, std::string_view>, N>;

constexpr LabelTable<BrainRegion, 14> kRegionLabels{{
    {BrainRegion::kCerebralHemisphere, "CerebralHemisphere"},
    {BrainRegion::kFrontalLobe, "FrontalLobe"},
    {BrainRegion::kOccipitalLobe, "OccipitalLobe"},
    {BrainRegion::kParietalLobe, "ParietalLobe"},
    {BrainRegion::kTemporalLobe, "TemporalLobe"},
    {BrainRegion::kCerebellum, "Cerebellum"},
    {BrainRegion::kBrainstem, "Brainstem"},
    {BrainRegion::kBasalGanglia, "BasalGanglia"},
    {BrainRegion::kThalamus, "Thalamus"},
    {BrainRegion::kCerebralPeduncle, "CerebralPeduncle"},
    {BrainRegion::kInternalExternalCapsule, "InternalExternalCapsule"},
    {BrainRegion::kCoronaRadiata, "CoronaRadiata"},
    {BrainRegion::kInsula, "Insula"},
    {BrainRegion::kWatershed, "Watershed"},
}};

constexpr LabelTable<Laterality, 4> kSideLabels{{
    {Laterality::kLeft, "Left"},
    {Laterality::kRight, "Right"},
    {Laterality::kBilateral, "Bilateral"},
    {Laterality::kUnspecified, "Unspecified"},
}};

constexpr LabelTable<Stage, 5> kStageLabels{{
    {Stage::kAcute, "Acute"},
    {Stage::kSubacute, "Subacute"},
    {Stage::kAcuteSubacute, "AcuteSubacute"},
    {Stage::kChronic, "Chronic"},
    {Stage::kCantDetermine, "CantDetermine"},
}};

constexpr LabelTable<ConstraintCue, 12> kCueLabels{{
    {ConstraintCue::kHypodensityCorticalSubcortical,
     "HypodensityCorticalSubcortical"},
    {ConstraintCue::kHyperdenseMCA, "HyperdenseMCA"},
    {ConstraintCue::kHyperdensityBasilar, "HyperdensityBasilar"},
    {ConstraintCue::kLossGrayWhiteDifferentiation,
     "LossGrayWhiteDifferentiation"},
    {ConstraintCue::kSulcalEffacement, "SulcalEffacement"},
    {ConstraintCue::kProminenceVentriclesSulci, "ProminenceVentriclesSulci"},
    {ConstraintCue::kAtrophy, "Atrophy"},
    {ConstraintCue::kGliosisEncephalomalacia, "GliosisEncephalomalacia"},
    {ConstraintCue::kRestrictedOrSlowDiffusion, "RestrictedOrSlowDiffusion"},
    {ConstraintCue::kLossFlowVoidMCABasilar, "LossFlowVoidMCABasilar"},
    {ConstraintCue::kFacilitatedDiffusion, "FacilitatedDiffusion"},
    {ConstraintCue::kDilationVentricles, "DilationVentricles"},
}};

template <typename Enum, std::size_t N>
std::string_view lookup(const LabelTable<Enum, N>& table, Enum value) {
  for (const auto& [e, label] : table) {
    if (e == value) return label;
  }
  return "?";
}

template <typename Enum, std::size_t N>
Enum lookup(const LabelTable<Enum, N>& table, std::string_view label,
            const char* what) {
  for (const auto& [e, name] : table) {
    if (name == label) return e;
  }
  throw LabelError(std::string("unknown ") + what + " \"" + std::string(label) +
                   "\"");
}

}  // namespace

std::string_view to_string(BrainRegion region) {
  return lookup(kRegionLabels, region);
}
std::string_view to_string(Laterality side) { return lookup(kSideLabels, side); }
std::string_view to_string(Stage stage) { return lookup(kStageLabels, stage); }
std::string_view to_string(ConstraintCue cue) { return lookup(kCueLabels, cue); }

BrainRegion parse_brain_region(std::string_view label) {
  return lookup(kRegionLabels, label, "region");
}
Laterality parse_laterality(std::string_view label) {
  return lookup(kSideLabels, label, "side");
}
Stage parse_stage(std::string_view label) {
  return lookup(kStageLabels, label, "stage");
}
ConstraintCue parse_constraint_cue(std::string_view label) {
  return lookup(kCueLabels, label, "constraint cue");
}

}  // namespace strokepheno
