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

#include "strokepheno/lexicon.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "strokepheno/text_match.hpp"

namespace strokepheno {
namespace {

using PhraseList = std::vector<std::string>;

struct ListTable {
  std::string_view name;
  PhraseList Lexicon::*field;
};

constexpr std::array<ListTable, 12> kListTables{{
    {"is_finding_ct", &Lexicon::is_finding_ct},
    {"is_finding_mri", &Lexicon::is_finding_mri},
    {"stage_acute_subacute", &Lexicon::stage_acute_subacute},
    {"stage_subacute", &Lexicon::stage_subacute},
    {"stage_acute", &Lexicon::stage_acute},
    {"stage_chronic", &Lexicon::stage_chronic},
    {"lacunar", &Lexicon::lacunar},
    {"laterality_left", &Lexicon::laterality_left},
    {"laterality_right", &Lexicon::laterality_right},
    {"laterality_bilateral", &Lexicon::laterality_bilateral},
    {"bilateral_plural", &Lexicon::bilateral_plural},
    {"cortical_terms", &Lexicon::cortical_terms},
}};

constexpr std::string_view kRegionPrefix = "region.";
constexpr std::string_view kCuePrefix = "cue.";
constexpr std::string_view kTerritoryPrefix = "territory.";

constexpr std::array<CompoundLobe, 11> kCompoundLobes{{
    {"frontoparietal", BrainRegion::kFrontalLobe, BrainRegion::kParietalLobe},
    {"fronto-parietal", BrainRegion::kFrontalLobe, BrainRegion::kParietalLobe},
    {"frontotemporal", BrainRegion::kFrontalLobe, BrainRegion::kTemporalLobe},
    {"fronto-temporal", BrainRegion::kFrontalLobe, BrainRegion::kTemporalLobe},
    {"temporoparietal", BrainRegion::kTemporalLobe, BrainRegion::kParietalLobe},
    {"temporo-parietal", BrainRegion::kTemporalLobe,
     BrainRegion::kParietalLobe},
    {"parietooccipital", BrainRegion::kParietalLobe,
     BrainRegion::kOccipitalLobe},
    {"parieto-occipital", BrainRegion::kParietalLobe,
     BrainRegion::kOccipitalLobe},
    {"temporooccipital", BrainRegion::kTemporalLobe,
     BrainRegion::kOccipitalLobe},
    {"temporo-occipital", BrainRegion::kTemporalLobe,
     BrainRegion::kOccipitalLobe},
    {"occipitoparietal", BrainRegion::kOccipitalLobe,
     BrainRegion::kParietalLobe},
}};

struct Section {
  std::string name;
  std::size_t line = 0;
  std::vector<std::pair<std::size_t, std::string>> entries;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string at_line(std::size_t line) {
  return "line " + std::to_string(line) + ": ";
}

std::vector<Section> read_sections(std::istream& in) {
  std::vector<Section> sections;
  std::set<std::string> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw LexiconError(at_line(line_no) + "malformed section header");
      }
      std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!seen.insert(name).second) {
        throw LexiconError(at_line(line_no) + "duplicate section [" + name +
                           "]");
      }
      sections.push_back({std::move(name), line_no, {}});
      continue;
    }
    if (sections.empty()) {
      throw LexiconError(at_line(line_no) + "phrase outside any section");
    }
    sections.back().entries.emplace_back(line_no, line);
  }
  if (in.bad()) throw LexiconError("read error");
  return sections;
}

PhraseList to_phrases(const Section& section) {
  if (section.entries.empty()) {
    throw LexiconError(at_line(section.line) + "empty table [" + section.name +
                       "]");
  }
  PhraseList out;
  for (const auto& [line, entry] : section.entries) {
    std::string phrase = text::normalize(entry);
    if (phrase.empty()) {
      throw LexiconError(at_line(line) + "empty phrase in [" + section.name +
                         "]");
    }
    if (std::find(out.begin(), out.end(), phrase) == out.end()) {
      out.push_back(std::move(phrase));
    }
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

// Applies each section to `lexicon`; returns the names applied.
std::set<std::string> apply_sections(const std::vector<Section>& sections,
                                     Lexicon& lexicon) {
  std::set<std::string> applied;
  for (const Section& section : sections) {
    const std::string_view name = section.name;
    const auto table = std::find_if(
        kListTables.begin(), kListTables.end(),
        [&](const ListTable& t) { return t.name == name; });
    try {
      if (table != kListTables.end()) {
        lexicon.*(table->field) = to_phrases(section);
      } else if (starts_with(name, kRegionPrefix)) {
        const auto region =
            parse_brain_region(name.substr(kRegionPrefix.size()));
        lexicon.region_keywords[region] = to_phrases(section);
      } else if (starts_with(name, kCuePrefix)) {
        const auto cue = parse_constraint_cue(name.substr(kCuePrefix.size()));
        lexicon.cue_phrases[cue] = to_phrases(section);
      } else if (starts_with(name, kTerritoryPrefix)) {
        const std::string key =
            text::normalize(name.substr(kTerritoryPrefix.size()));
        if (key.empty()) {
          throw LexiconError(at_line(section.line) + "empty territory phrase");
        }
        std::set<BrainRegion> regions;
        for (const auto& [line, entry] : section.entries) {
          try {
            regions.insert(parse_brain_region(entry));
          } catch (const LabelError& e) {
            throw LexiconError(at_line(line) + e.what());
          }
        }
        lexicon.territory_map[key] = std::move(regions);
      } else {
        throw LexiconError(at_line(section.line) + "unknown section [" +
                           section.name + "]");
      }
    } catch (const LabelError& e) {
      throw LexiconError(at_line(section.line) + e.what());
    }
    applied.insert(section.name);
  }
  return applied;
}

void write_list(std::ostream& out, std::string_view name,
                const PhraseList& phrases) {
  out << '[' << name << "]\n";
  for (const auto& phrase : phrases) out << phrase << '\n';
  out << '\n';
}

}  // namespace

std::span<const CompoundLobe> compound_lobes() { return kCompoundLobes; }

bool is_cortical_region(BrainRegion region) {
  switch (region) {
    case BrainRegion::kCerebralHemisphere:
    case BrainRegion::kFrontalLobe:
    case BrainRegion::kOccipitalLobe:
    case BrainRegion::kParietalLobe:
    case BrainRegion::kTemporalLobe:
    case BrainRegion::kInsula:
      return true;
    default:
      return false;
  }
}

const Lexicon& Lexicon::builtin() {
  static const Lexicon lexicon = [] {
    std::istringstream in(detail::kDefaultLexiconConfig);
    return load_lexicon(in);
  }();
  return lexicon;
}

bool Lexicon::match_is_finding(std::string_view text, Modality modality) const {
  const auto& phrases =
      modality == Modality::kCT ? is_finding_ct : is_finding_mri;
  return text::contains_any(text::normalize(text), phrases);
}

std::set<BrainRegion> Lexicon::match_region(std::string_view ground_text) const {
  const std::string norm = text::normalize(ground_text);
  std::set<BrainRegion> out;
  for (const auto& [region, phrases] : region_keywords) {
    if (text::contains_any(norm, phrases)) out.insert(region);
  }
  for (const CompoundLobe& lobe : kCompoundLobes) {
    if (text::contains_phrase(norm, lobe.phrase)) {
      out.insert(lobe.first);
      out.insert(lobe.second);
    }
  }
  for (const auto& [territory, regions] : territory_map) {
    if (text::contains_phrase(norm, territory)) {
      out.insert(regions.begin(), regions.end());
    }
  }
  return out;
}

Laterality Lexicon::match_laterality(std::string_view ground_text) const {
  const std::string norm = text::normalize(ground_text);
  const bool left = text::contains_any(norm, laterality_left);
  const bool right = text::contains_any(norm, laterality_right);
  if (text::contains_any(norm, laterality_bilateral) || (left && right)) {
    return Laterality::kBilateral;
  }
  if (left) return Laterality::kLeft;
  if (right) return Laterality::kRight;
  if (text::contains_any(norm, bilateral_plural)) return Laterality::kBilateral;
  return Laterality::kUnspecified;
}

std::optional<Stage> Lexicon::match_stage_keyword(std::string_view text) const {
  const std::string norm = text::normalize(text);
  if (text::contains_any(norm, stage_acute_subacute)) {
    return Stage::kAcuteSubacute;
  }
  if (text::contains_any(norm, stage_subacute)) return Stage::kSubacute;
  if (text::contains_any(norm, stage_acute)) return Stage::kAcute;
  if (text::contains_any(norm, stage_chronic)) return Stage::kChronic;
  return std::nullopt;
}

bool Lexicon::match_lacunarity(std::string_view text) const {
  return text::contains_any(text::normalize(text), lacunar);
}

bool Lexicon::match_cue(std::string_view text, ConstraintCue cue) const {
  const auto it = cue_phrases.find(cue);
  if (it == cue_phrases.end()) return false;
  return text::contains_any(text::normalize(text), it->second);
}

bool Lexicon::match_cortical(std::string_view text) const {
  return text::contains_any(text::normalize(text), cortical_terms);
}

void check_lexicon(const Lexicon& lexicon) {
  auto check_list = [](std::string_view name, const PhraseList& phrases) {
    if (phrases.empty()) {
      throw LexiconError("missing mandatory table [" + std::string(name) + "]");
    }
    for (const auto& phrase : phrases) {
      if (phrase.empty()) {
        throw LexiconError("empty phrase in [" + std::string(name) + "]");
      }
      if (text::normalize(phrase) != phrase) {
        throw LexiconError("phrase \"" + phrase + "\" in [" +
                           std::string(name) + "] is not normalized");
      }
    }
  };
  for (const ListTable& table : kListTables) {
    check_list(table.name, lexicon.*(table.field));
  }
  for (BrainRegion region : kAllBrainRegions) {
    const auto it = lexicon.region_keywords.find(region);
    const std::string name =
        std::string(kRegionPrefix) + std::string(to_string(region));
    check_list(name, it == lexicon.region_keywords.end() ? PhraseList{}
                                                         : it->second);
  }
  for (ConstraintCue cue : kAllConstraintCues) {
    const auto it = lexicon.cue_phrases.find(cue);
    const std::string name =
        std::string(kCuePrefix) + std::string(to_string(cue));
    check_list(name,
               it == lexicon.cue_phrases.end() ? PhraseList{} : it->second);
  }
  for (const auto& [territory, regions] : lexicon.territory_map) {
    if (territory.empty() || text::normalize(territory) != territory) {
      throw LexiconError("territory phrase \"" + territory +
                         "\" is empty or not normalized");
    }
  }
}

Lexicon load_lexicon(std::istream& in) {
  Lexicon lexicon;
  const auto applied = apply_sections(read_sections(in), lexicon);
  auto require = [&](const std::string& name) {
    if (!applied.contains(name)) {
      throw LexiconError("missing mandatory table [" + name + "]");
    }
  };
  for (const ListTable& table : kListTables) require(std::string(table.name));
  for (BrainRegion region : kAllBrainRegions) {
    require(std::string(kRegionPrefix) + std::string(to_string(region)));
  }
  for (ConstraintCue cue : kAllConstraintCues) {
    require(std::string(kCuePrefix) + std::string(to_string(cue)));
  }
  check_lexicon(lexicon);
  return lexicon;
}

Lexicon apply_lexicon_overrides(const Lexicon& base, std::istream& in) {
  Lexicon lexicon = base;
  apply_sections(read_sections(in), lexicon);
  check_lexicon(lexicon);
  return lexicon;
}

void dump_lexicon(const Lexicon& lexicon, std::ostream& out) {
  out << "# strokepheno lexicon\n\n";
  for (const ListTable& table : kListTables) {
    write_list(out, table.name, lexicon.*(table.field));
  }
  for (const auto& [region, phrases] : lexicon.region_keywords) {
    write_list(out, std::string(kRegionPrefix) + std::string(to_string(region)),
               phrases);
  }
  for (const auto& [territory, regions] : lexicon.territory_map) {
    out << '[' << kTerritoryPrefix << territory << "]\n";
    for (BrainRegion region : regions) out << to_string(region) << '\n';
    out << '\n';
  }
  for (const auto& [cue, phrases] : lexicon.cue_phrases) {
    write_list(out, std::string(kCuePrefix) + std::string(to_string(cue)),
               phrases);
  }
  if (!out) throw LexiconError("write error");
}

}  // namespace strokepheno
