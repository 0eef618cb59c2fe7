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

#ifndef STROKEPHENO_UTF8_HPP_
#define STROKEPHENO_UTF8_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace strokepheno::utf8 {

// Number of Unicode scalar values in `text`. Invalid sequences count one
// scalar per offending byte.
std::size_t length(std::string_view text);

// Byte offset of every scalar boundary in `text`, plus text.size() at the end.
// result[i] is the byte offset of scalar i.
std::vector<std::size_t> boundaries(std::string_view text);

// Substring of `text` covering scalars [start, end). Returns nullopt when the
// range falls outside the text or is inverted.
std::optional<std::string_view> substr(std::string_view text, std::size_t start,
                                       std::size_t end);

}  // namespace strokepheno::utf8

#endif  // STROKEPHENO_UTF8_HPP_
