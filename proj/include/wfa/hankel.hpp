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
#include <functional>
#include <optional>
#include <span>

#include "wfa/wfa.hpp"
#include "wfa/word_index.hpp"

namespace wfa {

// A function on words, used wherever Hankel entries come from something
// other than an explicit automaton (approximants, black boxes).
using Series = std::function<double(std::span<const Symbol>)>;

// Blocks with more entries than this are refused.
inline constexpr std::size_t kMaxBlockEntries = 10'000'000;

// Relative rank tolerance: singular values <= tol * sigma_max count as zero.
inline constexpr double kDefaultRankTol = 1e-9;

///
/// Finite sub-block of a Hankel matrix. Rows are indexed by all prefixes of
/// length <= L_p and columns by all suffixes of length <= L_s, both in graded
/// lexicographic order. The constructor checks shapes only; blocks built by
/// build_hankel() satisfy the Hankel constraint by construction, while a
/// block wrapping an arbitrary matrix need not (see check_hankel_property()).
///
class HankelBlock {
 public:
  HankelBlock(WordIndex prefixes, WordIndex suffixes, Matrix entries);

  const WordIndex& prefixes() const { return prefixes_; }
  const WordIndex& suffixes() const { return suffixes_; }
  const Matrix& entries() const { return entries_; }
  int alphabet_size() const { return prefixes_.alphabet_size(); }

 private:
  WordIndex prefixes_;
  WordIndex suffixes_;
  Matrix entries_;
};

// f on every word of length <= max_length, in graded lexicographic order.
// Each value is bit-identical to evaluate(wfa, word).
Vector word_values(const Wfa& wfa, int max_length);

// Same table for an arbitrary series; each word is queried once.
Vector word_values(const Series& f, int alphabet_size, int max_length);

HankelBlock build_hankel(const Wfa& wfa, int prefix_length, int suffix_length);
HankelBlock build_hankel(const Series& f, int alphabet_size, int prefix_length,
                         int suffix_length);

// Singular values of the block, in decreasing order.
Vector singular_values(const HankelBlock& h);

// Number of singular values > tol * sigma_max (0 for the zero block).
int hankel_rank(const HankelBlock& h, double tol = kDefaultRankTol);

struct Truncation {
  Matrix matrix;  // best rank-k approximation; generally not Hankel
  double error;   // sigma_k, the (k+1)-th singular value, 0 past the rank
};

Truncation svd_truncate(const HankelBlock& h, int k);

///
/// Spectral method: recovers a k-state automaton from the rank-k SVD of the
/// block, H ~ U_k D_k V_k^T, as
///
///   A_a   = D_k^{-1/2} U_k^T H_a V_k D_k^{-1/2},
///   alpha = D_k^{-1/2} V_k^T h(eps, :)^T,
///   beta  = D_k^{-1/2} U_k^T h(:, eps),
///
/// where the shifted blocks H_a(p, s) = f(p a s) are filled from `f`.
/// k = 0 yields Wfa::zero(). Throws InputError when k exceeds the numerical
/// rank, DegenerateInputError when a nonzero rank is requested of a zero
/// block.
///
Wfa spectral_recover(const HankelBlock& h, int k, const Series& f,
                     double tol = kDefaultRankTol);
Wfa spectral_recover(const HankelBlock& h, int k, const Wfa& generator,
                     double tol = kDefaultRankTol);

struct HankelViolation {
  Word prefix, suffix;              // first occurrence of the word
  Word other_prefix, other_suffix;  // conflicting factorization
  double value, other_value;
};

struct HankelCheck {
  bool holds;
  std::optional<HankelViolation> witness;  // set iff !holds
};

// Compares every pair of entries (p, s), (p', s') with ps = p's'.
HankelCheck check_hankel_property(const HankelBlock& h, double tol);

// True iff the (n, n) Hankel block of the automaton has numerical rank n.
bool is_minimal(const Wfa& wfa, double tol = kDefaultRankTol);

}  // namespace wfa
