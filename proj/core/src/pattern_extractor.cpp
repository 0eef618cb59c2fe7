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

#include "strokepheno/pattern_extractor.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>

#include "strokepheno/phenotype_engine.hpp"
#include "strokepheno/text_match.hpp"
#include "strokepheno/utf8.hpp"

namespace strokepheno {
namespace {

constexpr std::array<std::string_view, 9> kTriggers = {
    "in",    "within", "of",   "on",        "at",
    "involving", "along", "near", "throughout"};

constexpr std::array<std::string_view, 6> kHedges = {
    "consistent with", "suggesting",     "suggestive of",
    "likely represents", "compatible with", "may represent"};

constexpr std::array<std::string_view, 20> kBreakWords = {
    "is",      "are",     "was",         "were",    "be",
    "been",    "being",   "noted",       "seen",    "identified",
    "demonstrated", "present", "which",  "that",    "there",
    "also",    "with",    "without",     "again",   "appears"};

enum class TokenRole { kWord, kTrigger, kHedge, kBreak, kPunct, kClauseEnd };

struct Token {
  std::size_t start = 0;  // scalar offsets
  std::size_t end = 0;
  std::string lower;
  TokenRole role = TokenRole::kWord;
  std::size_t hedge_id = 0;  // groups multi-word hedge tokens
};

struct Chunk {
  std::size_t first = 0;  // token indices, inclusive
  std::size_t last = 0;
  std::string text;
};

template <std::size_t N>
bool listed(const std::array<std::string_view, N>& list, std::string_view w) {
  return std::find(list.begin(), list.end(), w) != list.end();
}

bool word_scalar(std::string_view scalar) {
  return !scalar.empty() && text::is_word_byte(scalar.front());
}

bool joiner_scalar(std::string_view scalar) {
  return scalar == "-" || scalar == "/" || scalar == "'";
}

bool space_scalar(std::string_view scalar) {
  return scalar == " " || scalar == "\t" || scalar == "\n" || scalar == "\r";
}

std::vector<Token> tokenize(std::string_view sentence) {
  const auto offsets = utf8::boundaries(sentence);
  const std::size_t n = offsets.size() - 1;
  auto scalar = [&](std::size_t i) {
    return sentence.substr(offsets[i], offsets[i + 1] - offsets[i]);
  };
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < n) {
    const auto s = scalar(i);
    if (space_scalar(s)) {
      ++i;
      continue;
    }
    Token token;
    token.start = i;
    if (word_scalar(s)) {
      std::size_t j = i + 1;
      while (j < n) {
        if (word_scalar(scalar(j))) {
          ++j;
        } else if (joiner_scalar(scalar(j)) && j + 1 < n &&
                   word_scalar(scalar(j + 1))) {
          j += 2;
        } else {
          break;
        }
      }
      token.end = j;
    } else {
      token.end = i + 1;
      token.role = (s == "." || s == ";" || s == ":") ? TokenRole::kClauseEnd
                                                      : TokenRole::kPunct;
    }
    token.lower = text::normalize(
        sentence.substr(offsets[token.start],
                        offsets[token.end] - offsets[token.start]));
    tokens.push_back(std::move(token));
    i = tokens.back().end;
  }
  return tokens;
}

void assign_roles(std::vector<Token>& tokens) {
  std::size_t hedge_id = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].role != TokenRole::kWord) continue;
    bool hedged = false;
    for (std::string_view hedge : kHedges) {
      // Compare word by word.
      std::size_t k = i;
      std::size_t pos = 0;
      while (pos < hedge.size() && k < tokens.size() &&
             tokens[k].role == TokenRole::kWord) {
        const auto space = hedge.find(' ', pos);
        const auto word = hedge.substr(
            pos, space == std::string_view::npos ? hedge.npos : space - pos);
        if (tokens[k].lower != word) break;
        ++k;
        pos = space == std::string_view::npos ? hedge.size() : space + 1;
      }
      if (pos >= hedge.size()) {
        ++hedge_id;
        for (std::size_t m = i; m < k; ++m) {
          tokens[m].role = TokenRole::kHedge;
          tokens[m].hedge_id = hedge_id;
        }
        i = k - 1;
        hedged = true;
        break;
      }
    }
    if (hedged) continue;
    if (listed(kTriggers, tokens[i].lower)) {
      tokens[i].role = TokenRole::kTrigger;
    } else if (listed(kBreakWords, tokens[i].lower)) {
      tokens[i].role = TokenRole::kBreak;
    }
  }
}

std::vector<Chunk> chunk(const std::vector<Token>& tokens,
                         std::string_view sentence) {
  std::vector<Chunk> chunks;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (tokens[i].role != TokenRole::kWord) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < tokens.size() && tokens[j + 1].role == TokenRole::kWord) ++j;
    const Span span = make_span(sentence, tokens[i].start, tokens[j].end);
    chunks.push_back(Chunk{i, j, span.text});
    i = j + 1;
  }
  return chunks;
}

// True iff a clause boundary or hedge sits strictly between tokens a and b.
bool barrier_between(const std::vector<Token>& tokens, std::size_t a,
                     std::size_t b) {
  for (std::size_t k = a + 1; k < b; ++k) {
    if (tokens[k].role == TokenRole::kClauseEnd ||
        tokens[k].role == TokenRole::kHedge) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<SpatialFrame> extract_frames(std::string_view sentence,
                                         const Lexicon& lexicon) {
  std::vector<Token> tokens = tokenize(sentence);
  assign_roles(tokens);
  const std::vector<Chunk> chunks = chunk(tokens, sentence);

  // Modality is unknown here, so either finding list anchors a Figure.
  auto anchors = [&](const Chunk& c) {
    return is_stroke_related(c.text, Modality::kCT, lexicon) ||
           is_stroke_related(c.text, Modality::kMRI, lexicon);
  };
  auto anatomical = [&](const Chunk& c) {
    return !lexicon.match_region(c.text).empty() ||
           lexicon.match_laterality(c.text) != Laterality::kUnspecified;
  };
  auto span_of = [&](const Chunk& c) {
    return make_span(sentence, tokens[c.first].start, tokens[c.last].end);
  };

  std::vector<SpatialFrame> frames;
  std::vector<std::size_t> frame_trigger_token;
  std::size_t absorbed_until = 0;  // token index
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    if (tokens[t].role != TokenRole::kTrigger || t < absorbed_until) continue;

    std::optional<std::size_t> figure;
    for (std::size_t c = chunks.size(); c-- > 0;) {
      if (chunks[c].last < t && anchors(chunks[c])) {
        figure = c;
        break;
      }
    }
    std::optional<std::size_t> ground;
    for (std::size_t c = 0; c < chunks.size(); ++c) {
      if (chunks[c].first <= t) continue;
      if (barrier_between(tokens, t, chunks[c].first)) break;
      if (anatomical(chunks[c])) {
        ground = c;
        break;
      }
    }
    if (!figure || !ground) continue;

    SpatialFrame frame;
    frame.trigger = make_span(sentence, tokens[t].start, tokens[t].end);
    frame.elements.push_back({ElementKind::kFigure, span_of(chunks[*figure])});
    frame.elements.push_back({ElementKind::kGround, span_of(chunks[*ground])});
    std::size_t last_ground = *ground;
    for (std::size_t c = *ground + 1; c < chunks.size(); ++c) {
      // Coordinated anatomy: "the right occipital lobe, right basal ganglia".
      const std::size_t gap_first = chunks[c - 1].last + 1;
      const bool comma_only = chunks[c].first == gap_first + 1 &&
                              tokens[gap_first].lower == ",";
      if (!comma_only || !anatomical(chunks[c])) break;
      frame.elements.push_back({ElementKind::kGround, span_of(chunks[c])});
      last_ground = c;
    }
    absorbed_until = chunks[last_ground].last + 1;
    frames.push_back(std::move(frame));
    frame_trigger_token.push_back(t);
  }

  for (std::size_t h = 0; h < tokens.size(); ++h) {
    if (tokens[h].role != TokenRole::kHedge) continue;
    std::size_t h_end = h;
    while (h_end + 1 < tokens.size() &&
           tokens[h_end + 1].hedge_id == tokens[h].hedge_id) {
      ++h_end;
    }
    const auto owner = std::find_if(
        frame_trigger_token.rbegin(), frame_trigger_token.rend(),
        [&](std::size_t t) { return t < h; });
    const auto next = std::find_if(chunks.begin(), chunks.end(),
                                   [&](const Chunk& c) { return c.first > h_end; });
    if (owner != frame_trigger_token.rend() && next != chunks.end() &&
        next->first == h_end + 1 && anchors(*next)) {
      SpatialFrame& frame =
          frames[static_cast<std::size_t>(frame_trigger_token.rend() - owner) - 1];
      frame.elements.push_back(
          {ElementKind::kHedge,
           make_span(sentence, tokens[h].start, tokens[h_end].end)});
      frame.elements.push_back({ElementKind::kDiagnosis, span_of(*next)});
    }
    h = h_end;
  }

  for (SpatialFrame& frame : frames) {
    std::stable_sort(frame.elements.begin(), frame.elements.end(),
                     [](const FrameElement& a, const FrameElement& b) {
                       return a.span.start < b.span.start;
                     });
  }
  return frames;
}

ReportDocument extract_report(std::string report_id, Modality modality,
                              const std::vector<std::string>& sentences,
                              const Lexicon& lexicon) {
  ReportDocument report;
  report.report_id = std::move(report_id);
  report.modality = modality;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    Sentence sentence{sentences[s], extract_frames(sentences[s], lexicon)};
    for (SpatialFrame& frame : sentence.frames) frame.sentence_index = s;
    report.sentences.push_back(std::move(sentence));
  }
  return report;
}

}  // namespace strokepheno
