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

#ifndef STROKEPHENO_TEXT_MATCH_HPP_
#define STROKEPHENO_TEXT_MATCH_HPP_

#include <span>
#include <string>
#include <string_view>

namespace strokepheno::text {

// ASCII lowercase, whitespace runs collapsed to one space, ends trimmed.
// Bytes outside ASCII pass through untouched.
std::string normalize(std::string_view text);

// Letters, digits and any non-ASCII byte. Hyphen, slash and punctuation
// are boundaries.
bool is_word_byte(char c);

// True iff `phrase` occurs in `normalized` with a word boundary (or the
// string edge) on both sides. Both arguments must already be normalized.
bool contains_phrase(std::string_view normalized, std::string_view phrase);

// True iff any of `phrases` satisfies contains_phrase.
bool contains_any(std::string_view normalized,
                  std::span<const std::string> phrases);

}  // namespace strokepheno::text

#endif  // STROKEPHENO_TEXT_MATCH_HPP_
