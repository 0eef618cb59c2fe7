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

#ifndef STROKEPHENO_VOCABULARY_HPP_
#define STROKEPHENO_VOCABULARY_HPP_

#include <string_view>

#include "strokepheno/frame_model.hpp"

namespace strokepheno {

// Enumerator order is the canonical sort order used in output files.
enum class BrainRegion {
  kCerebralHemisphere,
  kFrontalLobe,
  kOccipitalLobe,
  kParietalLobe,
  kTemporalLobe,
  kCerebellum,
  kBrainstem,
  kBasalGanglia,
  kThalamus,
  kCerebralPeduncle,
  kInternalExternalCapsule,
  kCoronaRadiata,
  kInsula,
  kWatershed,
};

inline constexpr BrainRegion kAllBrainRegions[] = {
    BrainRegion::kCerebralHemisphere,
    BrainRegion::kFrontalLobe,
    BrainRegion::kOccipitalLobe,
    BrainRegion::kParietalLobe,
    BrainRegion::kTemporalLobe,
    BrainRegion::kCerebellum,
    BrainRegion::kBrainstem,
    BrainRegion::kBasalGanglia,
    BrainRegion::kThalamus,
    BrainRegion::kCerebralPeduncle,
    BrainRegion::kInternalExternalCapsule,
    BrainRegion::kCoronaRadiata,
    BrainRegion::kInsula,
    BrainRegion::kWatershed,
};

enum class Laterality { kLeft, kRight, kBilateral, kUnspecified };

inline constexpr Laterality kAllLateralities[] = {
    Laterality::kLeft, Laterality::kRight, Laterality::kBilateral,
    Laterality::kUnspecified};

enum class Stage { kAcute, kSubacute, kAcuteSubacute, kChronic, kCantDetermine };

inline constexpr Stage kAllStages[] = {Stage::kAcute, Stage::kSubacute,
                                       Stage::kAcuteSubacute, Stage::kChronic,
                                       Stage::kCantDetermine};

// Report-level evidence used when no stage keyword is present.
enum class ConstraintCue {
  kHypodensityCorticalSubcortical,
  kHyperdenseMCA,
  kHyperdensityBasilar,
  kLossGrayWhiteDifferentiation,
  kSulcalEffacement,
  kProminenceVentriclesSulci,
  kAtrophy,
  kGliosisEncephalomalacia,
  kRestrictedOrSlowDiffusion,
  kLossFlowVoidMCABasilar,
  kFacilitatedDiffusion,
  kDilationVentricles,
};

inline constexpr ConstraintCue kAllConstraintCues[] = {
    ConstraintCue::kHypodensityCorticalSubcortical,
    ConstraintCue::kHyperdenseMCA,
    ConstraintCue::kHyperdensityBasilar,
    ConstraintCue::kLossGrayWhiteDifferentiation,
    ConstraintCue::kSulcalEffacement,
    ConstraintCue::kProminenceVentriclesSulci,
    ConstraintCue::kAtrophy,
    ConstraintCue::kGliosisEncephalomalacia,
    ConstraintCue::kRestrictedOrSlowDiffusion,
    ConstraintCue::kLossFlowVoidMCABasilar,
    ConstraintCue::kFacilitatedDiffusion,
    ConstraintCue::kDilationVentricles,
};

// Labels are the enumerator names without the `k` prefix, e.g.
// "BasalGanglia", "Unspecified", "CantDetermine", "SulcalEffacement".
std::string_view to_string(BrainRegion region);
std::string_view to_string(Laterality side);
std::string_view to_string(Stage stage);
std::string_view to_string(ConstraintCue cue);

// Each throws LabelError on anything outside the vocabulary.
BrainRegion parse_brain_region(std::string_view label);
Laterality parse_laterality(std::string_view label);
Stage parse_stage(std::string_view label);
ConstraintCue parse_constraint_cue(std::string_view label);

}  // namespace strokepheno

#endif  // STROKEPHENO_VOCABULARY_HPP_
