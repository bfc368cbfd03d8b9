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

#include "wfa/hankel.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "wfa/errors.hpp"

namespace wfa {

namespace {

void check_block_size(std::size_t rows, std::size_t cols) {
  if (rows != 0 && cols > kMaxBlockEntries / rows)
    throw InputError("Hankel block of " + std::to_string(rows) + "x" +
                     std::to_string(cols) + " entries exceeds the limit of " +
                     std::to_string(kMaxBlockEntries));
}

void check_lengths(int prefix_length, int suffix_length) {
  if (prefix_length < 0 || suffix_length < 0)
    throw InputError("Hankel block length bounds must be >= 0");
}

// Fills entries(p, s) = values[index(ps)].
HankelBlock block_from_values(const Vector& values, const WordIndex& words,
                              WordIndex prefixes, WordIndex suffixes) {
  Matrix entries(static_cast<Eigen::Index>(prefixes.size()),
                 static_cast<Eigen::Index>(suffixes.size()));
  for (std::size_t s = 0; s < suffixes.size(); ++s)
    for (std::size_t p = 0; p < prefixes.size(); ++p)
      entries(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(s)) =
          values(static_cast<Eigen::Index>(
              concat_index(words, prefixes, p, suffixes, s)));
  return HankelBlock(std::move(prefixes), std::move(suffixes),
                     std::move(entries));
}

Wfa recover_from_values(const HankelBlock& h, int k, const Vector& values,
                        const WordIndex& words, double tol) {
  const Matrix& entries = h.entries();
  const int d = h.alphabet_size();
  if (k < 0) throw InputError("requested number of states must be >= 0");
  if (k > std::min(entries.rows(), entries.cols()))
    throw InputError("requested " + std::to_string(k) +
                     " states from a block of shape " +
                     std::to_string(entries.rows()) + "x" +
                     std::to_string(entries.cols()));
  if (k == 0) return Wfa::zero(d);

  Eigen::BDCSVD<Matrix> svd(entries, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& sigma = svd.singularValues();
  if (sigma(0) == 0.0)
    throw DegenerateInputError("spectral recovery of " + std::to_string(k) +
                               " states from a zero Hankel block");
  if (sigma(k - 1) <= tol * sigma(0)) {
    int rank = 0;
    while (rank < sigma.size() && sigma(rank) > tol * sigma(0)) ++rank;
    throw InputError("requested " + std::to_string(k) +
                     " states but the block has numerical rank " +
                     std::to_string(rank));
  }

  const Vector inv_sqrt = sigma.head(k).cwiseSqrt().cwiseInverse();
  // Left and right pseudo-inverse factors.
  const Matrix left = inv_sqrt.asDiagonal() * svd.matrixU().leftCols(k).transpose();
  const Matrix right = svd.matrixV().leftCols(k) * inv_sqrt.asDiagonal();

  const WordIndex& pre = h.prefixes();
  const WordIndex& suf = h.suffixes();
  std::vector<Matrix> transitions;
  transitions.reserve(static_cast<std::size_t>(d));
  Matrix shifted(entries.rows(), entries.cols());
  for (Symbol a = 0; a < d; ++a) {
    for (std::size_t s = 0; s < suf.size(); ++s) {
      const int ls = suf.length(s);
      const std::size_t rs = suf.rank_in_length(s);
      for (std::size_t p = 0; p < pre.size(); ++p) {
        const int lp = pre.length(p);
        const std::size_t rank_pa = pre.rank_in_length(p) *
                                        static_cast<std::size_t>(d) +
                                    static_cast<std::size_t>(a);
        const std::size_t idx = words.offset(lp + 1 + ls) +
                                rank_pa * words.words_of_length(ls) + rs;
        shifted(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(s)) =
            values(static_cast<Eigen::Index>(idx));
      }
    }
    transitions.push_back(left * shifted * right);
  }
  Vector alpha = right.transpose() * entries.row(0).transpose();
  Vector beta = left * entries.col(0);
  return Wfa(std::move(alpha), std::move(transitions), std::move(beta));
}

}  // namespace

HankelBlock::HankelBlock(WordIndex prefixes, WordIndex suffixes, Matrix entries)
    : prefixes_(std::move(prefixes)),
      suffixes_(std::move(suffixes)),
      entries_(std::move(entries)) {
  if (prefixes_.alphabet_size() != suffixes_.alphabet_size())
    throw InputError("prefix and suffix indices use different alphabets");
  if (static_cast<std::size_t>(entries_.rows()) != prefixes_.size() ||
      static_cast<std::size_t>(entries_.cols()) != suffixes_.size())
    throw InputError("Hankel block entries have shape " +
                     std::to_string(entries_.rows()) + "x" +
                     std::to_string(entries_.cols()) + ", index sets need " +
                     std::to_string(prefixes_.size()) + "x" +
                     std::to_string(suffixes_.size()));
}

Vector word_values(const Wfa& wfa, int max_length) {
  const WordIndex words(wfa.alphabet_size(), max_length);
  check_block_size(words.size(), 1);
  const auto d = static_cast<std::size_t>(wfa.alphabet_size());
  const auto n = static_cast<Eigen::Index>(wfa.num_states());
  // Forward rows alpha^T A_w; row w = row(parent) * A_last, the same
  // operation sequence as evaluate().
  Matrix rows(static_cast<Eigen::Index>(words.size()), n);
  Vector values(static_cast<Eigen::Index>(words.size()));
  rows.row(0) = wfa.alpha().transpose();
  for (std::size_t w = 0; w < words.size(); ++w) {
    const auto wi = static_cast<Eigen::Index>(w);
    if (w > 0) {
      // Children of word i sit at d*i + 1, ..., d*i + d.
      const std::size_t parent = (w - 1) / d;
      const auto last = static_cast<std::size_t>((w - 1) % d);
      RowVector row = rows.row(static_cast<Eigen::Index>(parent));
      RowVector next = row * wfa.transitions()[last];
      rows.row(wi) = next;
    }
    RowVector row = rows.row(wi);
    values(wi) = row.dot(wfa.beta().transpose());
  }
  return values;
}

Vector word_values(const Series& f, int alphabet_size, int max_length) {
  const WordIndex words(alphabet_size, max_length);
  check_block_size(words.size(), 1);
  Vector values(static_cast<Eigen::Index>(words.size()));
  for (std::size_t w = 0; w < words.size(); ++w)
    values(static_cast<Eigen::Index>(w)) = f(words.word(w));
  return values;
}

HankelBlock build_hankel(const Wfa& wfa, int prefix_length, int suffix_length) {
  check_lengths(prefix_length, suffix_length);
  WordIndex pre(wfa.alphabet_size(), prefix_length);
  WordIndex suf(wfa.alphabet_size(), suffix_length);
  check_block_size(pre.size(), suf.size());
  const WordIndex words(wfa.alphabet_size(), prefix_length + suffix_length);
  return block_from_values(word_values(wfa, words.max_length()), words,
                           std::move(pre), std::move(suf));
}

HankelBlock build_hankel(const Series& f, int alphabet_size, int prefix_length,
                         int suffix_length) {
  check_lengths(prefix_length, suffix_length);
  WordIndex pre(alphabet_size, prefix_length);
  WordIndex suf(alphabet_size, suffix_length);
  check_block_size(pre.size(), suf.size());
  const WordIndex words(alphabet_size, prefix_length + suffix_length);
  return block_from_values(word_values(f, alphabet_size, words.max_length()),
                           words, std::move(pre), std::move(suf));
}

Vector singular_values(const HankelBlock& h) {
  if (h.entries().size() == 0) return Vector();
  Eigen::BDCSVD<Matrix> svd(h.entries());
  return svd.singularValues();
}

int hankel_rank(const HankelBlock& h, double tol) {
  if (!(tol > 0.0)) throw InputError("rank tolerance must be positive");
  const Vector sigma = singular_values(h);
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > tol * sigma(0)) ++rank;
  return rank;
}

Truncation svd_truncate(const HankelBlock& h, int k) {
  const Matrix& m = h.entries();
  const auto max_rank = std::min(m.rows(), m.cols());
  if (k < 0 || k > max_rank)
    throw InputError("truncation rank " + std::to_string(k) +
                     " outside [0, " + std::to_string(max_rank) + "]");
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& sigma = svd.singularValues();
  Matrix approx = svd.matrixU().leftCols(k) * sigma.head(k).asDiagonal() *
                  svd.matrixV().leftCols(k).transpose();
  const double error = k < sigma.size() ? sigma(k) : 0.0;
  return {std::move(approx), error};
}

Wfa spectral_recover(const HankelBlock& h, int k, const Series& f, double tol) {
  const WordIndex words(h.alphabet_size(), h.prefixes().max_length() +
                                               h.suffixes().max_length() + 1);
  return recover_from_values(
      h, k, word_values(f, h.alphabet_size(), words.max_length()), words, tol);
}

Wfa spectral_recover(const HankelBlock& h, int k, const Wfa& generator,
                     double tol) {
  if (generator.alphabet_size() != h.alphabet_size())
    throw InputError("generator and block use different alphabets");
  const WordIndex words(h.alphabet_size(), h.prefixes().max_length() +
                                               h.suffixes().max_length() + 1);
  return recover_from_values(h, k, word_values(generator, words.max_length()),
                             words, tol);
}

HankelCheck check_hankel_property(const HankelBlock& h, double tol) {
  const WordIndex& pre = h.prefixes();
  const WordIndex& suf = h.suffixes();
  const WordIndex words(h.alphabet_size(),
                        pre.max_length() + suf.max_length());
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  // First factorization seen for each concatenated word.
  std::vector<std::pair<std::size_t, std::size_t>> first(words.size(),
                                                         {kUnset, kUnset});
  const Matrix& m = h.entries();
  for (std::size_t p = 0; p < pre.size(); ++p) {
    for (std::size_t s = 0; s < suf.size(); ++s) {
      auto& seen = first[concat_index(words, pre, p, suf, s)];
      const double value =
          m(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(s));
      if (seen.first == kUnset) {
        seen = {p, s};
        continue;
      }
      const double other = m(static_cast<Eigen::Index>(seen.first),
                             static_cast<Eigen::Index>(seen.second));
      if (!(std::abs(value - other) <= tol)) {
        return {false, HankelViolation{pre.word(seen.first),
                                       suf.word(seen.second), pre.word(p),
                                       suf.word(s), other, value}};
      }
    }
  }
  return {true, std::nullopt};
}

bool is_minimal(const Wfa& wfa, double tol) {
  const int n = wfa.num_states();
  return hankel_rank(build_hankel(wfa, n, n), tol) == n;
}

}  // namespace wfa
