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

#ifndef STROKEPHENO_EVALUATION_HPP_
#define STROKEPHENO_EVALUATION_HPP_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strokepheno/corpus_io.hpp"
#include "strokepheno/phenotype.hpp"

namespace strokepheno {

// Feature subsets scored against gold. BR = region, CS = side, SS = stage,
// SSCO = stage coarsened to acute/chronic/unknown, LC = lacunarity.
enum class Variant {
  kBR,
  kBR_CS,
  kBR_SSCO,
  kBR_CS_SSCO,
  kBR_CS_SS,
  kBR_CS_LC,
  kBR_CS_SSCO_LC,
};

inline constexpr Variant kAllVariants[] = {
    Variant::kBR,        Variant::kBR_CS,    Variant::kBR_SSCO,
    Variant::kBR_CS_SSCO, Variant::kBR_CS_SS, Variant::kBR_CS_LC,
    Variant::kBR_CS_SSCO_LC,
};

// "BR", "BR_CS", "BR_SSCO", ...
std::string_view to_string(Variant variant);
// Also accepts the "+"-joined spelling, e.g. "BR+CS+SS_CO".
Variant parse_variant(std::string_view label);

// Acute, subacute and acute/subacute fold into one coarse acute label.
enum class CoarseStage { kAcute, kChronic, kUnknown };

std::string_view to_string(CoarseStage stage);  // "CoarseAcute", ...
CoarseStage coarsen(Stage stage);

// A phenotype with the fields outside a variant dropped. At most one of
// `stage` and `coarse_stage` is set.
struct ProjectedPhenotype {
  BrainRegion region = BrainRegion::kCerebralHemisphere;
  std::optional<Laterality> side;
  std::optional<Stage> stage;
  std::optional<CoarseStage> coarse_stage;
  std::optional<bool> lacunar;

  friend auto operator<=>(const ProjectedPhenotype&,
                          const ProjectedPhenotype&) = default;
};

ProjectedPhenotype project(const Phenotype& phenotype, Variant variant);

// "(Cerebellum, Left, CoarseChronic)"
std::string describe(const ProjectedPhenotype& projected);

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvalOptions {
  // Drop CantDetermine tuples from both sides under stage variants instead
  // of scoring them as their own label.
  bool exclude_unknown_stage = false;
  bool per_report = false;
};

struct ReportCounts {
  std::string report_id;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
};

// Micro-averaged scores: counts are summed over reports before the ratios
// are taken. A zero denominator gives 0 and a warning.
struct EvalResult {
  Variant variant = Variant::kBR;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::vector<std::string> warnings;
  std::vector<ReportCounts> per_report;  // filled when requested
};

// Compares distinct projected tuples per report. Gold reports without a
// prediction count as predicting nothing. Throws EvaluationError when a
// predicted id is absent from gold or an id repeats within either input.
EvalResult evaluate(std::span<const GoldPhenotypeRecord> gold,
                    std::span<const PhenotypeRecord> predicted,
                    Variant variant, const EvalOptions& options = {});

// JSON summary: {"aggregation": "micro", "results": [...]} with one entry
// per result and, when present, its per-report counts.
void write_eval_report(std::span<const EvalResult> results, std::ostream& out);

}  // namespace strokepheno

#endif  // STROKEPHENO_EVALUATION_HPP_
