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

#include "strokepheno/evaluation.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <set>
#include <utility>

#include "json.hpp"

namespace strokepheno {
namespace {

enum class StageMode { kNone, kFine, kCoarse };

struct VariantShape {
  Variant variant;
  std::string_view name;
  std::string_view table_name;
  bool side;
  StageMode stage;
  bool lacunar;
};

constexpr std::array<VariantShape, 7> kShapes{{
    {Variant::kBR, "BR", "BR", false, StageMode::kNone, false},
    {Variant::kBR_CS, "BR_CS", "BR+CS", true, StageMode::kNone, false},
    {Variant::kBR_SSCO, "BR_SSCO", "BR+SS_CO", false, StageMode::kCoarse,
     false},
    {Variant::kBR_CS_SSCO, "BR_CS_SSCO", "BR+CS+SS_CO", true,
     StageMode::kCoarse, false},
    {Variant::kBR_CS_SS, "BR_CS_SS", "BR+CS+SS", true, StageMode::kFine,
     false},
    {Variant::kBR_CS_LC, "BR_CS_LC", "BR+CS+LC", true, StageMode::kNone, true},
    {Variant::kBR_CS_SSCO_LC, "BR_CS_SSCO_LC", "BR+CS+SS_CO+LC", true,
     StageMode::kCoarse, true},
}};

const VariantShape& shape_of(Variant variant) {
  for (const auto& shape : kShapes) {
    if (shape.variant == variant) return shape;
  }
  return kShapes.front();
}

using ProjectedSet = std::set<ProjectedPhenotype>;

ProjectedSet project_all(const PhenotypeSet& phenotypes, Variant variant,
                         const EvalOptions& options) {
  const bool drop_unknown = options.exclude_unknown_stage &&
                            shape_of(variant).stage != StageMode::kNone;
  ProjectedSet out;
  for (const Phenotype& p : phenotypes) {
    if (drop_unknown && p.stage == Stage::kCantDetermine) continue;
    out.insert(project(p, variant));
  }
  return out;
}

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::string_view to_string(Variant variant) { return shape_of(variant).name; }

Variant parse_variant(std::string_view label) {
  for (const auto& shape : kShapes) {
    if (shape.name == label || shape.table_name == label) return shape.variant;
  }
  throw LabelError("unknown variant \"" + std::string(label) + "\"");
}

std::string_view to_string(CoarseStage stage) {
  switch (stage) {
    case CoarseStage::kAcute:
      return "CoarseAcute";
    case CoarseStage::kChronic:
      return "CoarseChronic";
    case CoarseStage::kUnknown:
      break;
  }
  return "CoarseUnknown";
}

CoarseStage coarsen(Stage stage) {
  switch (stage) {
    case Stage::kAcute:
    case Stage::kSubacute:
    case Stage::kAcuteSubacute:
      return CoarseStage::kAcute;
    case Stage::kChronic:
      return CoarseStage::kChronic;
    case Stage::kCantDetermine:
      break;
  }
  return CoarseStage::kUnknown;
}

ProjectedPhenotype project(const Phenotype& p, Variant variant) {
  const VariantShape& shape = shape_of(variant);
  ProjectedPhenotype out;
  out.region = p.region;
  if (shape.side) out.side = p.side;
  if (shape.stage == StageMode::kFine) out.stage = p.stage;
  if (shape.stage == StageMode::kCoarse) out.coarse_stage = coarsen(p.stage);
  if (shape.lacunar) out.lacunar = p.lacunar;
  return out;
}

std::string describe(const ProjectedPhenotype& p) {
  std::string out = "(" + std::string(to_string(p.region));
  if (p.side) out += ", " + std::string(to_string(*p.side));
  if (p.stage) out += ", " + std::string(to_string(*p.stage));
  if (p.coarse_stage) out += ", " + std::string(to_string(*p.coarse_stage));
  if (p.lacunar) out += *p.lacunar ? ", lacunar" : ", not lacunar";
  return out + ")";
}

EvalResult evaluate(std::span<const GoldPhenotypeRecord> gold,
                    std::span<const PhenotypeRecord> predicted,
                    Variant variant, const EvalOptions& options) {
  std::map<std::string, const PhenotypeRecord*> predicted_by_id;
  for (const PhenotypeRecord& record : predicted) {
    if (!predicted_by_id.emplace(record.report_id, &record).second) {
      throw EvaluationError("duplicate report_id \"" + record.report_id +
                            "\" in predictions");
    }
  }
  std::set<std::string> gold_ids;
  for (const GoldPhenotypeRecord& record : gold) {
    if (!gold_ids.insert(record.report_id).second) {
      throw EvaluationError("duplicate report_id \"" + record.report_id +
                            "\" in gold");
    }
  }
  for (const auto& [id, record] : predicted_by_id) {
    if (!gold_ids.contains(id)) {
      throw EvaluationError("predicted report_id \"" + id +
                            "\" has no gold record");
    }
  }

  EvalResult result;
  result.variant = variant;
  for (const GoldPhenotypeRecord& record : gold) {
    const ProjectedSet g = project_all(record.phenotypes, variant, options);
    const auto it = predicted_by_id.find(record.report_id);
    const ProjectedSet p = it == predicted_by_id.end()
                               ? ProjectedSet{}
                               : project_all(it->second->phenotypes, variant,
                                             options);
    ReportCounts counts{record.report_id, 0, 0, 0};
    for (const auto& tuple : p) {
      if (g.contains(tuple)) {
        ++counts.tp;
      } else {
        ++counts.fp;
      }
    }
    counts.fn = g.size() - counts.tp;
    result.tp += counts.tp;
    result.fp += counts.fp;
    result.fn += counts.fn;
    if (options.per_report) result.per_report.push_back(std::move(counts));
  }

  result.precision = ratio(result.tp, result.tp + result.fp);
  result.recall = ratio(result.tp, result.tp + result.fn);
  result.f1 = result.precision + result.recall > 0.0
                  ? 2.0 * result.precision * result.recall /
                        (result.precision + result.recall)
                  : 0.0;
  const std::string name(to_string(variant));
  if (result.tp + result.fp == 0) {
    result.warnings.push_back(name + ": no predicted tuples; precision set to 0");
  }
  if (result.tp + result.fn == 0) {
    result.warnings.push_back(name + ": no gold tuples; recall set to 0");
  }
  if (result.precision + result.recall == 0.0) {
    result.warnings.push_back(name + ": precision + recall is 0; F1 set to 0");
  }
  return result;
}

void write_eval_report(std::span<const EvalResult> results, std::ostream& out) {
  nlohmann::ordered_json report;
  report["aggregation"] = "micro";
  report["results"] = nlohmann::ordered_json::array();
  for (const EvalResult& r : results) {
    nlohmann::ordered_json j;
    j["variant"] = std::string(to_string(r.variant));
    j["tp"] = r.tp;
    j["fp"] = r.fp;
    j["fn"] = r.fn;
    j["precision"] = r.precision;
    j["recall"] = r.recall;
    j["f1"] = r.f1;
    j["aggregation"] = "micro";
    if (!r.per_report.empty()) {
      j["per_report"] = nlohmann::ordered_json::array();
      for (const ReportCounts& c : r.per_report) {
        j["per_report"].push_back(
            {{"report_id", c.report_id}, {"tp", c.tp}, {"fp", c.fp}, {"fn", c.fn}});
      }
    }
    report["results"].push_back(std::move(j));
  }
  out << report.dump(2) << '\n';
}

}  // namespace strokepheno
