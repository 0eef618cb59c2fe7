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

#include "synthetic_corpus.hpp"

#include <algorithm>
#include <cctype>
#include <string_view>
#include <utility>

#include "strokepheno/utf8.hpp"

namespace strokepheno::testing {
namespace {

constexpr std::string_view kTriggers[] = {"in", "within", "of", "on", "at",
                                          "involving", "along", "near"};
constexpr std::string_view kHedges[] = {"consistent with", "suggesting",
                                        "likely represents", "compatible with"};
constexpr std::string_view kNeutralFigures[] = {
    "effacement", "mass effect", "prominence", "edema", "calcification",
    "enlargement"};
constexpr std::string_view kNeutralGrounds[] = {
    "adjacent sulci", "ventricles", "vertex", "lateral aspect", "midline",
    "overlying sulci"};
constexpr std::string_view kDiagnoses[] = {"infarct", "infarction",
                                           "lacunar infarct", "ischemia",
                                           "artifact", "small vessel disease"};
constexpr std::string_view kLinks[] = {"the lateral aspect", "the medial aspect",
                                       "the posterior portion", "the region"};
constexpr std::string_view kCompounds[] = {"frontoparietal", "temporoparietal",
                                           "parieto-occipital", "frontotemporal"};
constexpr std::string_view kFillers[] = {"There is ", "Again noted ", "",
                                         "New ", "Note is made of "};

class SentenceBuilder {
 public:
  Span append(std::string_view piece) {
    const std::size_t start = length_;
    text_ += piece;
    length_ += utf8::length(piece);
    return Span{start, length_, std::string(piece)};
  }
  const std::string& text() const { return text_; }

 private:
  std::string text_;
  std::size_t length_ = 0;
};

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  std::uniform_int_distribution<std::size_t> d(0, items.size() - 1);
  return items[d(rng)];
}

template <typename T, std::size_t N>
const T& pick(Rng& rng, const T (&items)[N]) {
  std::uniform_int_distribution<std::size_t> d(0, N - 1);
  return items[d(rng)];
}

bool chance(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

std::string stage_word(Rng& rng, const Lexicon& lex) {
  switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
    case 0:
      return pick(rng, lex.stage_acute_subacute);
    case 1:
      return pick(rng, lex.stage_subacute);
    case 2:
      return pick(rng, lex.stage_acute);
    case 3:
      return pick(rng, lex.stage_chronic);
    default:
      return {};
  }
}

std::string figure_core(Rng& rng, const Lexicon& lex) {
  switch (std::uniform_int_distribution<int>(0, 6)(rng)) {
    case 0:
    case 1:
      return pick(rng, lex.is_finding_ct);
    case 2:
      return pick(rng, lex.is_finding_mri);
    case 3: {
      const auto cue = pick(rng, kAllConstraintCues);
      return pick(rng, lex.cue_phrases.at(cue));
    }
    case 4:
      return pick(rng, lex.lacunar);
    default:
      return std::string(pick(rng, kNeutralFigures));
  }
}

std::string figure_phrase(Rng& rng, const Lexicon& lex) {
  std::string out;
  if (chance(rng, 0.3)) out += "cortical ";
  const std::string stage = stage_word(rng, lex);
  if (!stage.empty()) out += stage + " ";
  out += figure_core(rng, lex);
  if (chance(rng, 0.15)) out += " and " + figure_core(rng, lex);
  if (chance(rng, 0.5)) out[0] = static_cast<char>(std::toupper(out[0]));
  return out;
}

std::string side_word(Rng& rng, const Lexicon& lex) {
  switch (std::uniform_int_distribution<int>(0, 6)(rng)) {
    case 0:
    case 1:
      return pick(rng, lex.laterality_left);
    case 2:
    case 3:
      return pick(rng, lex.laterality_right);
    case 4:
      return pick(rng, lex.laterality_bilateral);
    case 5:
      return "left and right";
    default:
      return {};
  }
}

std::string anatomy_core(Rng& rng, const Lexicon& lex) {
  switch (std::uniform_int_distribution<int>(0, 7)(rng)) {
    case 0:
      return std::string(pick(rng, kCompounds));
    case 1: {
      std::vector<std::string> keys;
      for (const auto& [k, v] : lex.territory_map) keys.push_back(k);
      return pick(rng, keys) + " territory";
    }
    case 2:
      return std::string(pick(rng, kNeutralGrounds));
    default: {
      const auto region = pick(rng, kAllBrainRegions);
      return pick(rng, lex.region_keywords.at(region));
    }
  }
}

std::string ground_phrase(Rng& rng, const Lexicon& lex, bool allow_side) {
  std::string out;
  if (chance(rng, 0.5)) out += "the ";
  if (allow_side) {
    const std::string side = side_word(rng, lex);
    if (!side.empty()) out += side + " ";
  }
  if (chance(rng, 0.2)) out += pick(rng, lex.cortical_terms) + " ";
  out += anatomy_core(rng, lex);
  return out;
}

void add(SpatialFrame& frame, ElementKind kind, Span span) {
  frame.elements.push_back({kind, std::move(span)});
}

// Appends one clause; returns the frames it produced.
std::vector<SpatialFrame> clause(Rng& rng, const Lexicon& lex,
                                 SentenceBuilder& b) {
  std::vector<SpatialFrame> frames;
  b.append(pick(rng, kFillers));
  const Span figure = b.append(figure_phrase(rng, lex));
  b.append(" ");

  const int shape = std::uniform_int_distribution<int>(0, 9)(rng);
  SpatialFrame first;
  first.trigger = b.append(pick(rng, kTriggers));
  b.append(" ");
  add(first, ElementKind::kFigure, figure);

  if (shape <= 1) {
    // Chain through linking elements: figure in LINK of [LINK of] ground.
    const int links = shape == 0 ? 1 : 2;
    Span link = b.append(pick(rng, kLinks));
    add(first, ElementKind::kGround, link);
    frames.push_back(std::move(first));
    for (int i = 0; i < links; ++i) {
      b.append(" ");
      SpatialFrame next;
      next.trigger = b.append("of");
      b.append(" ");
      add(next, ElementKind::kFigure, link);
      if (i + 1 < links) {
        link = b.append(pick(rng, kLinks));
      } else {
        link = b.append(ground_phrase(rng, lex, true));
      }
      add(next, ElementKind::kGround, link);
      frames.push_back(std::move(next));
    }
  } else if (shape == 2) {
    // Coordinated Grounds, the second without a side term.
    add(first, ElementKind::kGround, b.append(ground_phrase(rng, lex, true)));
    b.append(chance(rng, 0.5) ? " and " : ", ");
    add(first, ElementKind::kGround, b.append(ground_phrase(rng, lex, false)));
    frames.push_back(std::move(first));
  } else {
    add(first, ElementKind::kGround, b.append(ground_phrase(rng, lex, true)));
    frames.push_back(std::move(first));
  }

  if (chance(rng, 0.35)) {
    b.append(" ");
    SpatialFrame& owner = frames.front();
    add(owner, ElementKind::kHedge, b.append(pick(rng, kHedges)));
    b.append(" ");
    std::string diagnosis;
    const std::string stage = stage_word(rng, lex);
    if (!stage.empty()) diagnosis += stage + " ";
    diagnosis += pick(rng, kDiagnoses);
    add(owner, ElementKind::kDiagnosis, b.append(diagnosis));
  }
  return frames;
}

}  // namespace

ReportDocument random_report(Rng& rng, const Lexicon& lexicon, std::string id) {
  ReportDocument report;
  report.report_id = std::move(id);
  report.modality = chance(rng, 0.5) ? Modality::kCT : Modality::kMRI;
  const int sentences = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int s = 0; s < sentences; ++s) {
    SentenceBuilder b;
    Sentence sentence;
    if (chance(rng, 0.1)) {
      b.append(chance(rng, 0.5) ? "No acute intracranial hemorrhage."
                                : "Ventricles are normal, size ± stable, café-au-lait.");
    } else {
      const int clauses = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int c = 0; c < clauses; ++c) {
        if (c > 0) b.append(chance(rng, 0.5) ? "; " : ". Also ");
        for (SpatialFrame& f : clause(rng, lexicon, b)) {
          sentence.frames.push_back(std::move(f));
        }
      }
      b.append(".");
    }
    sentence.text = b.text();
    for (SpatialFrame& f : sentence.frames) {
      f.sentence_index = static_cast<std::size_t>(s);
    }
    report.sentences.push_back(std::move(sentence));
  }
  return report;
}

Sentence random_loose_sentence(Rng& rng) {
  Sentence sentence;
  const std::size_t length = std::uniform_int_distribution<std::size_t>(8, 60)(rng);
  std::uniform_int_distribution<int> letter('a', 'z');
  for (std::size_t i = 0; i < length; ++i) {
    sentence.text.push_back(i % 5 == 4 ? ' ' : static_cast<char>(letter(rng)));
  }
  auto random_span = [&]() {
    std::uniform_int_distribution<std::size_t> start_d(0, length - 1);
    const std::size_t start = start_d(rng);
    std::uniform_int_distribution<std::size_t> len_d(1, std::min<std::size_t>(8, length - start));
    const std::size_t end = start + len_d(rng);
    return make_span(sentence.text, start, end);
  };
  const int frames = std::uniform_int_distribution<int>(0, 6)(rng);
  for (int f = 0; f < frames; ++f) {
    SpatialFrame frame;
    frame.trigger = random_span();
    const int elements = std::uniform_int_distribution<int>(0, 5)(rng);
    for (int e = 0; e < elements; ++e) {
      const auto kind = pick(rng, kAllElementKinds);
      frame.elements.push_back({kind, random_span()});
    }
    sentence.frames.push_back(std::move(frame));
  }
  std::stable_sort(sentence.frames.begin(), sentence.frames.end(),
                   [](const SpatialFrame& a, const SpatialFrame& b) {
                     return a.trigger.start < b.trigger.start;
                   });
  return sentence;
}

}  // namespace strokepheno::testing
