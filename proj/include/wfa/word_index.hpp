// Copyright 2026 The wfa-aak Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wfa/wfa.hpp"

namespace wfa {

///
/// Graded lexicographic enumeration of all words of length <= max_length
/// over an alphabet of size d: shorter words first, words of equal length
/// ordered lexicographically by symbol index. The empty word has index 0.
///
/// For d = 2 the order starts  eps, a, b, aa, ab, ba, bb, aaa, ...
///
class WordIndex {
 public:
  WordIndex(int alphabet_size, int max_length);

  int alphabet_size() const { return alphabet_size_; }
  int max_length() const { return max_length_; }

  // Number of indexed words: sum_{k <= L} d^k.
  std::size_t size() const { return offsets_.back(); }

  // Index of the first word of length `length` (length <= max_length + 1,
  // where offset(max_length + 1) == size()).
  std::size_t offset(int length) const;

  // d^length.
  std::size_t words_of_length(int length) const;

  std::size_t index(std::span<const Symbol> word) const;
  Word word(std::size_t index) const;
  int length(std::size_t index) const;

  // Position of the word among the words of the same length.
  std::size_t rank_in_length(std::size_t index) const {
    return index - offset(length(index));
  }

  bool operator==(const WordIndex& other) const = default;

 private:
  int alphabet_size_;
  int max_length_;
  std::vector<std::size_t> offsets_;  // offsets_[k] = index of first length-k word
  std::vector<std::size_t> powers_;   // powers_[k] = d^k
};

// Index, in `target`, of the concatenation of word `p` (from `prefixes`)
// and word `s` (from `suffixes`). All three must share the alphabet and
// `target` must be long enough.
std::size_t concat_index(const WordIndex& target, const WordIndex& prefixes,
                         std::size_t p, const WordIndex& suffixes,
                         std::size_t s);

}  // namespace wfa
