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

#ifndef STROKEPHENO_PATTERN_EXTRACTOR_HPP_
#define STROKEPHENO_PATTERN_EXTRACTOR_HPP_

#include <string_view>
#include <vector>

#include "strokepheno/frame_model.hpp"
#include "strokepheno/lexicon.hpp"

namespace strokepheno {

// Lexicon-driven spatial frame extraction from one raw sentence, for running
// the engine without a learned extractor.
//
// The sentence is cut into chunks: maximal word runs free of triggers,
// hedge markers, punctuation and a few copula/relative words ("is",
// "noted", "which", "with", ...). For each trigger (in, within, of, on, at,
// involving, along, near, throughout):
//   * Figure is the nearest preceding chunk with a finding, stage or
//     lacunar keyword;
//   * Ground is the nearest following chunk with a region or laterality
//     keyword, searching no further than a hedge marker or clause
//     punctuation; comma-separated anatomical chunks right after it are
//     added as coordinated Grounds.
// A frame is emitted only when both are found, and triggers inside an
// emitted frame's Figure-to-Ground stretch are absorbed by it. A hedge
// marker (consistent with, suggesting, suggestive of, likely represents,
// compatible with, may represent) attaches to the closest preceding frame,
// with the following chunk as Diagnosis when that chunk carries a keyword.
//
// Output frames are ordered by trigger offset and carry sentence_index 0.
std::vector<SpatialFrame> extract_frames(std::string_view sentence,
                                         const Lexicon& lexicon);

// Builds a ReportDocument by running extract_frames() over each sentence.
ReportDocument extract_report(std::string report_id, Modality modality,
                              const std::vector<std::string>& sentences,
                              const Lexicon& lexicon);

}  // namespace strokepheno

#endif  // STROKEPHENO_PATTERN_EXTRACTOR_HPP_
