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

#include "wfa/wfa.hpp"
#include "wfa/word_index.hpp"

namespace wfa {

///
/// Fock space over a d-letter alphabet truncated at degree D: the span of
/// e_w for all words |w| <= D, ordered exactly as WordIndex(d, D).
///
class FockBasis {
 public:
  FockBasis(int alphabet_size, int degree);

  int alphabet_size() const { return words_.alphabet_size(); }
  int degree() const { return words_.max_length(); }
  std::size_t dimension() const { return words_.size(); }
  const WordIndex& words() const { return words_; }

  std::size_t index(std::span<const Symbol> word) const {
    return words_.index(word);
  }
  Word word(std::size_t index) const { return words_.word(index); }
  int length(std::size_t index) const { return words_.length(index); }

  bool operator==(const FockBasis& other) const = default;

 private:
  WordIndex words_;
};

class FockVector {
 public:
  explicit FockVector(FockBasis basis);  // zero vector
  FockVector(FockBasis basis, Vector coefficients);

  static FockVector basis_vector(FockBasis basis, std::span<const Symbol> word);

  const FockBasis& basis() const { return basis_; }
  const Vector& coefficients() const { return coefficients_; }
  Vector& coefficients() { return coefficients_; }

  double at(std::span<const Symbol> word) const;

  // Longest word with a nonzero coefficient, -1 for the zero vector.
  int support_degree() const;

  double norm() const { return coefficients_.norm(); }
  double dot(const FockVector& other) const;

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector& operator*=(double s);

 private:
  FockBasis basis_;
  Vector coefficients_;
};

FockVector operator+(FockVector u, const FockVector& v);
FockVector operator-(FockVector u, const FockVector& v);
FockVector operator*(double s, FockVector v);

///
/// Dense operator from span(domain) to span(codomain); entry (r, c) is
/// <e_r, M e_c> with r, c indexed by the respective bases.
///
class FockMatrix {
 public:
  FockMatrix(FockBasis codomain, FockBasis domain, Matrix entries);

  const FockBasis& codomain() const { return codomain_; }
  const FockBasis& domain() const { return domain_; }
  const Matrix& entries() const { return entries_; }

  FockVector apply(const FockVector& v) const;
  FockMatrix adjoint() const;

 private:
  FockBasis codomain_;
  FockBasis domain_;
  Matrix entries_;
};

FockMatrix operator*(const FockMatrix& a, const FockMatrix& b);

// S_i e_w = e_{iw}. Throws TruncationError if v has support at degree D.
FockVector left_shift(Symbol i, const FockVector& v);
// R_i e_w = e_{wi}. Same truncation rule.
FockVector right_shift(Symbol i, const FockVector& v);
// S*_i e_{iw} = e_w, zero on words not starting with i.
FockVector left_shift_adj(Symbol i, const FockVector& v);
// R*_i e_{wi} = e_w, zero on words not ending with i.
FockVector right_shift_adj(Symbol i, const FockVector& v);
// U e_{w_1...w_k} = e_{w_k...w_1}.
FockVector flip(const FockVector& v);

// Matrices of the operators above on the truncated space. The shift
// matrices drop the image of degree-D words; they agree with the true
// operators on the interior (columns |w| <= D - 1). The adjoint matrices
// are the exact transposes.
FockMatrix left_shift_matrix(const FockBasis& basis, Symbol i);
FockMatrix right_shift_matrix(const FockBasis& basis, Symbol i);
FockMatrix flip_matrix(const FockBasis& basis);
FockMatrix identity_matrix(const FockBasis& basis);

///
/// H = F_0^2 (+) F^2 truncated at degree D. The negative part is indexed by
/// the nonempty words, the positive part by all words.
///
class TwoSidedVector {
 public:
  explicit TwoSidedVector(FockBasis basis);  // zero vector
  TwoSidedVector(FockBasis basis, Vector negative, Vector positive);

  static TwoSidedVector from_negative(const FockVector& v);  // drops e_eps
  static TwoSidedVector from_positive(const FockVector& v);

  const FockBasis& basis() const { return basis_; }
  // negative()(j) is the coefficient of the word with basis index j + 1.
  const Vector& negative() const { return negative_; }
  const Vector& positive() const { return positive_; }
  Vector& negative() { return negative_; }
  Vector& positive() { return positive_; }

  double norm() const;
  double squared_norm() const;
  TwoSidedVector& operator+=(const TwoSidedVector& other);

 private:
  FockBasis basis_;
  Vector negative_;
  Vector positive_;
};

// Orthogonal projection onto the negative part.
TwoSidedVector project_negative(const TwoSidedVector& h);

///
/// Bilateral shift: R*_i on the negative part, R_i on the positive part.
/// R*_i e_i = e_eps is not a negative word, so it lands in the positive
/// part. Throws TruncationError if the positive part has support at
/// degree D.
///
TwoSidedVector bilateral_shift(Symbol i, const TwoSidedVector& h);

///
/// NC Hankel matrix of f: rows are words |b| <= row_degree, columns words
/// |a| <= col_degree, entry (b, a) = f(ba). Same numbers as build_hankel()
/// with the same lengths.
///
FockMatrix nc_hankel_matrix(const Wfa& wfa, int row_degree, int col_degree);

///
/// Coefficients of the flipped symbol known from the automaton: f(w) at
/// every |w| <= D, i.e. the first column of the NC Hankel matrix and the
/// series alpha^T (1 - sum_j A_j z_j)^{-1} beta. The symbol also carries a
/// component in H^2 that the automaton does not determine; it is not
/// computed.
///
struct FlippedSymbol {
  FockVector phi;
  bool remainder_determined = false;
};

FlippedSymbol flipped_symbol_coefficients(const Wfa& wfa, int degree);

// G e_w = sum_g theta_g e_{wg}, truncated at the degree of theta's basis.
// Commutes with every left shift.
FockMatrix right_multiplication_matrix(const FockVector& theta);

// Multiplier A with U A = G_theta, i.e. A = U G_theta.
FockMatrix multiplier_from_symbol(const FockVector& theta);

}  // namespace wfa
