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

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace wfa {

using Symbol = int;

// A finite word over the alphabet {0, ..., d-1}. The empty vector is the
// empty word.
using Word = std::vector<Symbol>;

using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;
using Matrix = Eigen::MatrixXd;

///
/// Weighted finite automaton with real weights.
///
/// Holds an initial weight vector alpha, a final weight vector beta and one
/// n x n transition matrix per symbol. The automaton computes
///
///   f(x_1 ... x_t) = alpha^T A_{x_1} ... A_{x_t} beta.
///
/// The constructor only checks shapes. Minimality is a separate predicate
/// (see is_minimal() in hankel.hpp).
///
class Wfa {
 public:
  Wfa(Vector alpha, std::vector<Matrix> transitions, Vector beta);

  int alphabet_size() const { return static_cast<int>(transitions_.size()); }
  int num_states() const { return static_cast<int>(alpha_.size()); }

  const Vector& alpha() const { return alpha_; }
  const Vector& beta() const { return beta_; }
  const Matrix& transition(Symbol a) const;
  const std::vector<Matrix>& transitions() const { return transitions_; }

  // Automaton with one state and all weights zero over `alphabet_size`
  // symbols; it computes the zero function.
  static Wfa zero(int alphabet_size);

 private:
  Vector alpha_;
  std::vector<Matrix> transitions_;
  Vector beta_;
};

// Throws InputError if some symbol of `word` is not in [0, alphabet_size).
void check_word(std::span<const Symbol> word, int alphabet_size);

// f(x) = alpha^T A_x beta, accumulated left to right as a row vector.
double evaluate(const Wfa& wfa, std::span<const Symbol> word);

// alpha^T A_{x_1} ... A_{x_t}. No range checks.
RowVector forward_weights(const Wfa& wfa, std::span<const Symbol> word);

// Largest eigenvalue modulus of a square matrix.
double spectral_radius(const Matrix& m);

// Kronecker product with entries
// (M (x) N)(i * p' + i', j * q' + j') = M(i, j) N(i', j') (zero-based).
Matrix kronecker(const Matrix& m, const Matrix& n);

// Spectral norm (largest singular value).
double spectral_norm(const Matrix& m);

///
/// Random fixture generator. Entries are standard normal; the transitions
/// are then rescaled so that
///   d == 1:  spectral_radius(A) <= radius_bound,
///   d >  1:  sum_j ||A_j||_2^2 <= radius_bound.
/// Same arguments always give the same automaton.
///
Wfa random_stable_wfa(int alphabet_size, int num_states, std::uint64_t seed,
                      double radius_bound);

}  // namespace wfa
