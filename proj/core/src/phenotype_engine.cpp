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

#include <algorithm>
#include <optional>

#include "strokepheno/text_match.hpp"

namespace strokepheno {
namespace {

std::string head_word(std::string_view text) {
  const std::string norm = text::normalize(text);
  std::size_t end = norm.size();
  while (end > 0 && !text::is_word_byte(norm[end - 1])) --end;
  std::size_t start = end;
  while (start > 0 && text::is_word_byte(norm[start - 1])) --start;
  return norm.substr(start, end - start);
}

bool spans_overlap(const Span& a, const Span& b) {
  return a.start < b.end && b.start < a.end;
}

int stage_priority(Stage stage) {
  switch (stage) {
    case Stage::kAcuteSubacute:
      return 0;
    case Stage::kSubacute:
      return 1;
    case Stage::kAcute:
      return 2;
    case Stage::kChronic:
      return 3;
    case Stage::kCantDetermine:
      break;
  }
  return 4;
}

std::vector<std::string> texts_of(const std::vector<Span>& spans) {
  std::vector<std::string> out;
  out.reserve(spans.size());
  for (const Span& span : spans) out.push_back(span.text);
  return out;
}

void append(std::vector<std::string>& to, const std::vector<std::string>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

}  // namespace

std::string describe(const Phenotype& p) {
  return "(" + std::string(to_string(p.side)) + ", " +
         std::string(to_string(p.region)) + ", " +
         std::string(to_string(p.stage)) + ", " +
         (p.lacunar ? "lacunar" : "not lacunar") + ")";
}

bool frames_link(const SpatialFrame& prev, const SpatialFrame& next) {
  for (const Span& ground : elements_of(prev, ElementKind::kGround)) {
    const std::string ground_head = head_word(ground.text);
    for (const Span& figure : elements_of(next, ElementKind::kFigure)) {
      if (spans_overlap(ground, figure)) return true;
      if (!ground_head.empty() && ground_head == head_word(figure.text)) {
        return true;
      }
    }
  }
  return false;
}

std::vector<FrameChain> chain_frames(std::span<const SpatialFrame> frames) {
  std::vector<FrameChain> chains;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    if (!chains.empty() &&
        frames_link(frames[chains.back().frame_indices.back()], frames[i])) {
      chains.back().frame_indices.push_back(i);
    } else {
      chains.push_back(FrameChain{{i}, {}, {}, {}});
    }
  }
  for (FrameChain& chain : chains) {
    const SpatialFrame& first = frames[chain.frame_indices.front()];
    const SpatialFrame& last = frames[chain.frame_indices.back()];
    chain.merged_figure = elements_of(first, ElementKind::kFigure);
    chain.merged_diagnosis = elements_of(first, ElementKind::kDiagnosis);
    chain.merged_ground = elements_of(last, ElementKind::kGround);
  }
  return chains;
}

std::vector<std::pair<Span, Laterality>> propagate_laterality(
    std::span<const Span> grounds, const Lexicon& lexicon) {
  std::vector<std::pair<Span, Laterality>> out;
  out.reserve(grounds.size());
  Laterality inherited = Laterality::kUnspecified;
  for (const Span& ground : grounds) {
    Laterality side = lexicon.match_laterality(ground.text);
    if (side == Laterality::kUnspecified) {
      side = inherited;
    } else {
      inherited = side;
    }
    out.emplace_back(ground, side);
  }
  return out;
}

CueFlags report_cue_flags(const ReportDocument& report,
                          const Lexicon& lexicon) {
  std::vector<std::string> texts;
  for (const Sentence& sentence : report.sentences) {
    for (const SpatialFrame& frame : sentence.frames) {
      const auto figures = elements_of(frame, ElementKind::kFigure);
      const auto grounds = elements_of(frame, ElementKind::kGround);
      for (const FrameElement& element : frame.elements) {
        if (element.kind == ElementKind::kFigure ||
            element.kind == ElementKind::kGround ||
            element.kind == ElementKind::kDiagnosis) {
          texts.push_back(element.span.text);
        }
      }
      for (const Span& figure : figures) {
        for (const Span& ground : grounds) {
          texts.push_back(figure.text + " " + frame.trigger.text + " " +
                          ground.text);
        }
      }
    }
  }
  CueFlags flags;
  for (ConstraintCue cue : kAllConstraintCues) {
    flags[cue] = std::any_of(texts.begin(), texts.end(), [&](const auto& t) {
      return lexicon.match_cue(t, cue);
    });
  }
  return flags;
}

Stage infer_stage(const RegionSideEvidence& evidence, Modality modality,
                  const Lexicon& lexicon) {
  std::optional<Stage> direct;
  auto consider = [&](const std::string& text) {
    const auto stage = lexicon.match_stage_keyword(text);
    if (stage && (!direct || stage_priority(*stage) < stage_priority(*direct))) {
      direct = stage;
    }
  };
  std::for_each(evidence.finding_texts.begin(), evidence.finding_texts.end(),
                consider);
  std::for_each(evidence.diagnosis_texts.begin(),
                evidence.diagnosis_texts.end(), consider);
  if (direct) return *direct;

  const bool cortical =
      is_cortical_region(evidence.region) ||
      std::any_of(evidence.ground_texts.begin(), evidence.ground_texts.end(),
                  [&](const auto& t) { return lexicon.match_cortical(t); });
  auto localized = [&](ConstraintCue cue) {
    return cortical &&
           std::any_of(evidence.finding_texts.begin(),
                       evidence.finding_texts.end(),
                       [&](const auto& t) { return lexicon.match_cue(t, cue); });
  };
  auto flag = [&](ConstraintCue cue) {
    const auto it = evidence.cue_flags.find(cue);
    return it != evidence.cue_flags.end() && it->second;
  };

  bool acute = false;
  bool chronic = false;
  if (modality == Modality::kCT) {
    const bool hypodensity =
        localized(ConstraintCue::kHypodensityCorticalSubcortical);
    acute = hypodensity && (flag(ConstraintCue::kHyperdenseMCA) ||
                            flag(ConstraintCue::kHyperdensityBasilar) ||
                            flag(ConstraintCue::kLossGrayWhiteDifferentiation) ||
                            flag(ConstraintCue::kSulcalEffacement));
    chronic = (hypodensity && (flag(ConstraintCue::kProminenceVentriclesSulci) ||
                               flag(ConstraintCue::kAtrophy))) ||
              flag(ConstraintCue::kGliosisEncephalomalacia);
  } else {
    acute = localized(ConstraintCue::kRestrictedOrSlowDiffusion) ||
            flag(ConstraintCue::kLossFlowVoidMCABasilar);
    chronic = flag(ConstraintCue::kFacilitatedDiffusion) ||
              flag(ConstraintCue::kGliosisEncephalomalacia) ||
              flag(ConstraintCue::kDilationVentricles);
  }
  if (acute) return Stage::kAcute;
  if (chronic) return Stage::kChronic;
  return Stage::kCantDetermine;
}

bool is_stroke_related(std::string_view text, Modality modality,
                       const Lexicon& lexicon) {
  return lexicon.match_is_finding(text, modality) ||
         lexicon.match_stage_keyword(text).has_value() ||
         lexicon.match_lacunarity(text);
}

std::map<std::pair<BrainRegion, Laterality>, RegionSideEvidence>
collect_evidence(const ReportDocument& report, const Lexicon& lexicon) {
  const CueFlags flags = report_cue_flags(report, lexicon);
  std::map<std::pair<BrainRegion, Laterality>, RegionSideEvidence> groups;
  for (const Sentence& sentence : report.sentences) {
    for (const FrameChain& chain : chain_frames(sentence.frames)) {
      auto related = [&](const Span& s) {
        return is_stroke_related(s.text, report.modality, lexicon);
      };
      if (std::none_of(chain.merged_figure.begin(), chain.merged_figure.end(),
                       related) &&
          std::none_of(chain.merged_diagnosis.begin(),
                       chain.merged_diagnosis.end(), related)) {
        continue;
      }
      const auto findings = texts_of(chain.merged_figure);
      const auto diagnoses = texts_of(chain.merged_diagnosis);
      for (const auto& [ground, side] :
           propagate_laterality(chain.merged_ground, lexicon)) {
        for (BrainRegion region : lexicon.match_region(ground.text)) {
          auto [it, inserted] = groups.try_emplace({region, side});
          RegionSideEvidence& evidence = it->second;
          if (inserted) {
            evidence.region = region;
            evidence.side = side;
            evidence.cue_flags = flags;
          }
          append(evidence.finding_texts, findings);
          append(evidence.diagnosis_texts, diagnoses);
          evidence.ground_texts.push_back(ground.text);
        }
      }
    }
  }
  return groups;
}

PhenotypeSet classify_report(const ReportDocument& report,
                             const Lexicon& lexicon) {
  PhenotypeSet out;
  for (const auto& [key, evidence] : collect_evidence(report, lexicon)) {
    auto lacunar = [&](const std::string& t) {
      return lexicon.match_lacunarity(t);
    };
    out.insert(Phenotype{
        evidence.side, evidence.region,
        infer_stage(evidence, report.modality, lexicon),
        std::any_of(evidence.finding_texts.begin(),
                    evidence.finding_texts.end(), lacunar) ||
            std::any_of(evidence.diagnosis_texts.begin(),
                        evidence.diagnosis_texts.end(), lacunar)});
  }
  return out;
}

}  // namespace strokepheno
