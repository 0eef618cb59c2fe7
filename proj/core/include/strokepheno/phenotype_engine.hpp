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

#ifndef STROKEPHENO_PHENOTYPE_ENGINE_HPP_
#define STROKEPHENO_PHENOTYPE_ENGINE_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strokepheno/frame_model.hpp"
#include "strokepheno/lexicon.hpp"
#include "strokepheno/phenotype.hpp"

namespace strokepheno {

// Consecutive frames of one sentence linked through a shared element: the
// Ground of one frame is the Figure of the next ("infarction in the lateral
// aspect of right cerebellum"). The chain's Figure and Diagnosis come from
// its first frame and its Ground from its last frame.
struct FrameChain {
  // Indices into the sentence's frame list, ascending.
  std::vector<std::size_t> frame_indices;
  std::vector<Span> merged_figure;
  std::vector<Span> merged_ground;
  std::vector<Span> merged_diagnosis;
};

// True iff some Ground of `prev` overlaps, or shares its head word with, some
// Figure of `next`.
bool frames_link(const SpatialFrame& prev, const SpatialFrame& next);

// Greedy left-to-right partition of one sentence's frames into chains.
std::vector<FrameChain> chain_frames(std::span<const SpatialFrame> frames);

// Side for each Ground of one coordination. A Ground without a laterality
// term takes the side of the nearest lateralized Ground before it, so in
// "left frontal and parietal lobes" both lobes are left.
std::vector<std::pair<Span, Laterality>> propagate_laterality(
    std::span<const Span> grounds, const Lexicon& lexicon);

using CueFlags = std::map<ConstraintCue, bool>;

// Cue flags over every frame of the report, whether or not the frame is
// stroke related. Each Figure, Ground and Diagnosis text is tested, as is
// the "<figure> <trigger> <ground>" phrase of each Figure/Ground pair.
CueFlags report_cue_flags(const ReportDocument& report, const Lexicon& lexicon);

// Everything the report says about one (region, side).
struct RegionSideEvidence {
  BrainRegion region = BrainRegion::kCerebralHemisphere;
  Laterality side = Laterality::kUnspecified;
  std::vector<std::string> finding_texts;
  std::vector<std::string> diagnosis_texts;
  std::vector<std::string> ground_texts;
  CueFlags cue_flags;
};

// Stage for one (region, side). A direct stage keyword in a finding or
// diagnosis text wins (acute/subacute, then subacute, then acute, then
// chronic). Otherwise the modality's domain constraints decide, and failing
// those the stage is CantDetermine.
//
// CT acute:    hypodensity localized to cortex/subcortex AND (hyperdense
//              MCA OR basilar hyperdensity OR lost gray-white
//              differentiation OR sulcal effacement).
// CT chronic:  (localized hypodensity AND (prominent ventricles/sulci OR
//              atrophy)) OR gliosis/encephalomalacia.
// MRI acute:   restricted/slow diffusion localized to cortex/subcortex OR
//              lost MCA/basilar flow void.
// MRI chronic: facilitated diffusion OR gliosis/encephalomalacia OR
//              ventricular dilation.
//
// Acute constraints are checked before chronic ones.
Stage infer_stage(const RegionSideEvidence& evidence, Modality modality,
                  const Lexicon& lexicon);

// True iff a Figure or Diagnosis text marks a chain as stroke related: an
// imaging finding keyword for the modality, a stage keyword, or a lacunar
// keyword.
bool is_stroke_related(std::string_view text, Modality modality,
                       const Lexicon& lexicon);

// Evidence groups for a report, keyed by (region, side).
std::map<std::pair<BrainRegion, Laterality>, RegionSideEvidence>
collect_evidence(const ReportDocument& report, const Lexicon& lexicon);

// All phenotypes of a report. Pure in (report, lexicon); the output is not
// capped.
PhenotypeSet classify_report(const ReportDocument& report,
                             const Lexicon& lexicon);

}  // namespace strokepheno

#endif  // STROKEPHENO_PHENOTYPE_ENGINE_HPP_
