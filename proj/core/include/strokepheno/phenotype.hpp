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

#ifndef STROKEPHENO_PHENOTYPE_HPP_
#define STROKEPHENO_PHENOTYPE_HPP_

#include <compare>
#include <set>
#include <string>

#include "strokepheno/vocabulary.hpp"

namespace strokepheno {

// One (side, region, stage, lacunarity) combination. Every field is always
// populated; Unspecified and CantDetermine are values in their own right.
struct Phenotype {
  Laterality side = Laterality::kUnspecified;
  BrainRegion region = BrainRegion::kCerebralHemisphere;
  Stage stage = Stage::kCantDetermine;
  bool lacunar = false;

  friend auto operator<=>(const Phenotype&, const Phenotype&) = default;
};

using PhenotypeSet = std::set<Phenotype>;

// "(Right, Cerebellum, Acute, not lacunar)"
std::string describe(const Phenotype& phenotype);

}  // namespace strokepheno

#endif  // STROKEPHENO_PHENOTYPE_HPP_
