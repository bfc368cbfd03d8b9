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

#include "wfa/word_index.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "wfa/errors.hpp"

namespace wfa {

WordIndex::WordIndex(int alphabet_size, int max_length)
    : alphabet_size_(alphabet_size), max_length_(max_length) {
  if (alphabet_size < 1) throw InputError("alphabet size must be positive");
  if (max_length < 0) throw InputError("word length bound must be >= 0");
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  const auto d = static_cast<std::size_t>(alphabet_size);
  powers_.push_back(1);
  offsets_.push_back(0);
  for (int k = 0; k <= max_length; ++k) {
    if (offsets_.back() > kMax - powers_.back())
      throw InputError("word index too large");
    offsets_.push_back(offsets_.back() + powers_.back());
    if (powers_.back() > kMax / d) throw InputError("word index too large");
    powers_.push_back(powers_.back() * d);
  }
}

std::size_t WordIndex::offset(int length) const {
  if (length < 0 || length > max_length_ + 1)
    throw InputError("length " + std::to_string(length) + " out of range");
  return offsets_[static_cast<std::size_t>(length)];
}

std::size_t WordIndex::words_of_length(int length) const {
  if (length < 0 || length > max_length_ + 1)
    throw InputError("length " + std::to_string(length) + " out of range");
  return powers_[static_cast<std::size_t>(length)];
}

std::size_t WordIndex::index(std::span<const Symbol> word) const {
  if (static_cast<int>(word.size()) > max_length_)
    throw InputError("word of length " + std::to_string(word.size()) +
                     " exceeds the index bound " + std::to_string(max_length_));
  check_word(word, alphabet_size_);
  std::size_t rank = 0;
  for (Symbol a : word)
    rank = rank * static_cast<std::size_t>(alphabet_size_) +
           static_cast<std::size_t>(a);
  return offsets_[word.size()] + rank;
}

int WordIndex::length(std::size_t index) const {
  if (index >= size())
    throw InputError("word index " + std::to_string(index) + " out of range");
  // offsets_ is strictly increasing; find the last offset <= index.
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

Word WordIndex::word(std::size_t index) const {
  const int len = length(index);
  std::size_t rank = index - offsets_[static_cast<std::size_t>(len)];
  Word w(static_cast<std::size_t>(len));
  const auto d = static_cast<std::size_t>(alphabet_size_);
  for (int i = len - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<Symbol>(rank % d);
    rank /= d;
  }
  return w;
}

std::size_t concat_index(const WordIndex& target, const WordIndex& prefixes,
                         std::size_t p, const WordIndex& suffixes,
                         std::size_t s) {
  if (prefixes.alphabet_size() != target.alphabet_size() ||
      suffixes.alphabet_size() != target.alphabet_size())
    throw InputError("word indices over different alphabets");
  const int lp = prefixes.length(p);
  const int ls = suffixes.length(s);
  if (lp + ls > target.max_length())
    throw InputError("concatenation exceeds the target length bound");
  return target.offset(lp + ls) +
         prefixes.rank_in_length(p) * target.words_of_length(ls) +
         suffixes.rank_in_length(s);
}

}  // namespace wfa
