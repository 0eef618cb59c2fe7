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

#include "strokepheno/text_match.hpp"

namespace strokepheno::text {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    out.push_back(c);
  }
  return out;
}

bool is_word_byte(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') ||
         (u >= '0' && u <= '9') || u >= 0x80;
}

bool contains_phrase(std::string_view normalized, std::string_view phrase) {
  if (phrase.empty()) return false;
  for (auto pos = normalized.find(phrase); pos != std::string_view::npos;
       pos = normalized.find(phrase, pos + 1)) {
    const std::size_t end = pos + phrase.size();
    const bool left_ok = pos == 0 || !is_word_byte(normalized[pos - 1]) ||
                         !is_word_byte(phrase.front());
    const bool right_ok = end == normalized.size() ||
                          !is_word_byte(normalized[end]) ||
                          !is_word_byte(phrase.back());
    if (left_ok && right_ok) return true;
  }
  return false;
}

bool contains_any(std::string_view normalized,
                  std::span<const std::string> phrases) {
  for (const auto& phrase : phrases) {
    if (contains_phrase(normalized, phrase)) return true;
  }
  return false;
}

}  // namespace strokepheno::text
