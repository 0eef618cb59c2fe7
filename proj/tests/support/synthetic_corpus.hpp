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

#ifndef STROKEPHENO_TESTS_SUPPORT_SYNTHETIC_CORPUS_HPP_
#define STROKEPHENO_TESTS_SUPPORT_SYNTHETIC_CORPUS_HPP_

#include <random>
#include <string>
#include <vector>

#include "strokepheno/frame_model.hpp"
#include "strokepheno/lexicon.hpp"

namespace strokepheno::testing {

using Rng = std::mt19937_64;

// Random report whose frames are built from lexicon phrases placed in
// templated clauses: "<figure> <trigger> <ground> [<hedge> <diagnosis>]",
// chained clauses sharing a linking element ("... in the lateral aspect of
// ..."), coordinated Grounds, and stroke-unrelated frames carrying
// constraint cues. Always passes validate_report().
ReportDocument random_report(Rng& rng, const Lexicon& lexicon, std::string id);

// Frames over a random sentence with arbitrary, possibly overlapping spans
// and elements in random order. Trigger starts are non-decreasing.
Sentence random_loose_sentence(Rng& rng);

}  // namespace strokepheno::testing

#endif  // STROKEPHENO_TESTS_SUPPORT_SYNTHETIC_CORPUS_HPP_
