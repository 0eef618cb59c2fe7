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

#ifndef STROKEPHENO_LEXICON_HPP_
#define STROKEPHENO_LEXICON_HPP_

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strokepheno/frame_model.hpp"
#include "strokepheno/vocabulary.hpp"

namespace strokepheno {

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Keyword tables driving every match in the engine. All phrases are stored
// normalized (lowercase, single spaces) and none is empty. Treat a loaded
// lexicon as immutable; every matcher is a const, pure function.
//
// Matching is whole-phrase on word boundaries: "acute" never matches inside
// "subacute", and inflected forms must be listed explicitly.
struct Lexicon {
  std::vector<std::string> is_finding_ct;
  std::vector<std::string> is_finding_mri;
  std::vector<std::string> stage_acute_subacute;
  std::vector<std::string> stage_subacute;
  std::vector<std::string> stage_acute;
  std::vector<std::string> stage_chronic;
  std::vector<std::string> lacunar;
  std::vector<std::string> laterality_left;
  std::vector<std::string> laterality_right;
  std::vector<std::string> laterality_bilateral;
  // Plural anatomy that implies both sides ("thalami", "capsules").
  std::vector<std::string> bilateral_plural;
  // Ground wording that places a finding in cortex or subcortex.
  std::vector<std::string> cortical_terms;
  std::map<BrainRegion, std::vector<std::string>> region_keywords;
  // Vascular territory -> supplied regions. Entries may map to nothing.
  std::map<std::string, std::set<BrainRegion>> territory_map;
  std::map<ConstraintCue, std::vector<std::string>> cue_phrases;

  friend bool operator==(const Lexicon&, const Lexicon&) = default;

  // Compiled-in defaults. Parsed once; safe to call from any thread.
  static const Lexicon& builtin();

  bool match_is_finding(std::string_view text, Modality modality) const;
  std::set<BrainRegion> match_region(std::string_view ground_text) const;
  Laterality match_laterality(std::string_view ground_text) const;
  // AcuteSubacute, then Subacute, then Acute, then Chronic.
  std::optional<Stage> match_stage_keyword(std::string_view text) const;
  bool match_lacunarity(std::string_view text) const;
  bool match_cue(std::string_view text, ConstraintCue cue) const;
  bool match_cortical(std::string_view text) const;
};

// Fused two-lobe adjectives ("frontoparietal") and the lobes they name.
struct CompoundLobe {
  std::string_view phrase;
  BrainRegion first;
  BrainRegion second;
};
std::span<const CompoundLobe> compound_lobes();

// Regions treated as cortical/subcortical by the stage constraints: the
// cerebral hemisphere, its four lobes, and the insula.
bool is_cortical_region(BrainRegion region);

// Parses a complete lexicon config. Every list table and every region and
// cue section must be present and non-empty.
//
// Format: `[section]` headers followed by one phrase per line; blank lines
// and lines starting with '#' are ignored. Sections are the Lexicon field
// names, `region.<BrainRegion>`, `cue.<ConstraintCue>`, and
// `territory.<phrase>` (whose lines are BrainRegion labels).
Lexicon load_lexicon(std::istream& in);

// Applies the sections present in `in` on top of `base`. A section replaces
// the corresponding table wholesale; absent tables keep their base value.
Lexicon apply_lexicon_overrides(const Lexicon& base, std::istream& in);

// Writes `lexicon` in the config format. load_lexicon() on the output
// yields an equal lexicon.
void dump_lexicon(const Lexicon& lexicon, std::ostream& out);

// Throws LexiconError naming the first violated invariant.
void check_lexicon(const Lexicon& lexicon);

namespace detail {
extern const char* const kDefaultLexiconConfig;
}  // namespace detail

}  // namespace strokepheno

#endif  // STROKEPHENO_LEXICON_HPP_
