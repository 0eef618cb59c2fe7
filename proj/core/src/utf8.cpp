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

#include "strokepheno/utf8.hpp"

namespace strokepheno::utf8 {
namespace {

// Width of the sequence starting at text[i]; 1 for anything malformed.
std::size_t sequence_width(std::string_view text, std::size_t i) {
  const auto lead = static_cast<unsigned char>(text[i]);
  std::size_t width = 1;
  if (lead >= 0xF0 && lead <= 0xF4) {
    width = 4;
  } else if (lead >= 0xE0) {
    width = lead <= 0xEF ? 3 : 1;
  } else if (lead >= 0xC2) {
    width = 2;
  }
  if (width == 1 || i + width > text.size()) return 1;
  for (std::size_t k = 1; k < width; ++k) {
    const auto c = static_cast<unsigned char>(text[i + k]);
    if ((c & 0xC0) != 0x80) return 1;
  }
  return width;
}

}  // namespace

std::size_t length(std::string_view text) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < text.size(); i += sequence_width(text, i)) ++n;
  return n;
}

std::vector<std::size_t> boundaries(std::string_view text) {
  std::vector<std::size_t> out;
  out.reserve(text.size() + 1);
  for (std::size_t i = 0; i < text.size(); i += sequence_width(text, i)) {
    out.push_back(i);
  }
  out.push_back(text.size());
  return out;
}

std::optional<std::string_view> substr(std::string_view text, std::size_t start,
                                       std::size_t end) {
  if (start > end) return std::nullopt;
  const auto offsets = boundaries(text);
  const std::size_t scalars = offsets.size() - 1;
  if (end > scalars) return std::nullopt;
  return text.substr(offsets[start], offsets[end] - offsets[start]);
}

}  // namespace strokepheno::utf8
