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

#include "wfa/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wfa/errors.hpp"
#include "wfa/hankel.hpp"

namespace wfa {

namespace {

using Eigen::Index;

Index as_index(std::size_t i) { return static_cast<Index>(i); }

void check_symbol(Symbol i, int d) {
  if (i < 0 || i >= d)
    throw InputError("symbol " + std::to_string(i) +
                     " outside alphabet of size " + std::to_string(d));
}

void check_same_basis(const FockBasis& a, const FockBasis& b) {
  if (!(a == b))
    throw InputError("Fock vectors live on different truncated bases");
}

void check_shiftable(const FockVector& v, const char* op) {
  if (v.support_degree() >= v.basis().degree())
    throw TruncationError(std::string(op) + " of a vector with support at degree " +
                          std::to_string(v.basis().degree()) +
                          " leaves the truncated space");
}

// Index of iw (prepend) and wi (append) for a word w given by index.
std::size_t prepend_index(const WordIndex& words, Symbol i, std::size_t w) {
  const int len = words.length(w);
  return words.offset(len + 1) +
         static_cast<std::size_t>(i) * words.words_of_length(len) +
         words.rank_in_length(w);
}

std::size_t append_index(const WordIndex& words, std::size_t w, Symbol i) {
  const int len = words.length(w);
  return words.offset(len + 1) +
         words.rank_in_length(w) * static_cast<std::size_t>(words.alphabet_size()) +
         static_cast<std::size_t>(i);
}

std::vector<std::size_t> reversal_permutation(const WordIndex& words) {
  std::vector<std::size_t> perm(words.size());
  for (std::size_t w = 0; w < words.size(); ++w) {
    Word word = words.word(w);
    std::reverse(word.begin(), word.end());
    perm[w] = words.index(word);
  }
  return perm;
}

}  // namespace

FockBasis::FockBasis(int alphabet_size, int degree)
    : words_(alphabet_size, degree) {}

FockVector::FockVector(FockBasis basis)
    : basis_(std::move(basis)),
      coefficients_(Vector::Zero(as_index(basis_.dimension()))) {}

FockVector::FockVector(FockBasis basis, Vector coefficients)
    : basis_(std::move(basis)), coefficients_(std::move(coefficients)) {
  if (static_cast<std::size_t>(coefficients_.size()) != basis_.dimension())
    throw InputError("Fock vector has " + std::to_string(coefficients_.size()) +
                     " coefficients, basis has dimension " +
                     std::to_string(basis_.dimension()));
}

FockVector FockVector::basis_vector(FockBasis basis,
                                    std::span<const Symbol> word) {
  FockVector v(std::move(basis));
  v.coefficients_(as_index(v.basis_.index(word))) = 1.0;
  return v;
}

double FockVector::at(std::span<const Symbol> word) const {
  return coefficients_(as_index(basis_.index(word)));
}

int FockVector::support_degree() const {
  for (Index j = coefficients_.size() - 1; j >= 0; --j)
    if (coefficients_(j) != 0.0)
      return basis_.length(static_cast<std::size_t>(j));
  return -1;
}

double FockVector::dot(const FockVector& other) const {
  check_same_basis(basis_, other.basis_);
  return coefficients_.dot(other.coefficients_);
}

FockVector& FockVector::operator+=(const FockVector& other) {
  check_same_basis(basis_, other.basis_);
  coefficients_ += other.coefficients_;
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  check_same_basis(basis_, other.basis_);
  coefficients_ -= other.coefficients_;
  return *this;
}

FockVector& FockVector::operator*=(double s) {
  coefficients_ *= s;
  return *this;
}

FockVector operator+(FockVector u, const FockVector& v) { return u += v; }
FockVector operator-(FockVector u, const FockVector& v) { return u -= v; }
FockVector operator*(double s, FockVector v) { return v *= s; }

FockMatrix::FockMatrix(FockBasis codomain, FockBasis domain, Matrix entries)
    : codomain_(std::move(codomain)),
      domain_(std::move(domain)),
      entries_(std::move(entries)) {
  if (static_cast<std::size_t>(entries_.rows()) != codomain_.dimension() ||
      static_cast<std::size_t>(entries_.cols()) != domain_.dimension())
    throw InputError("Fock matrix entries have shape " +
                     std::to_string(entries_.rows()) + "x" +
                     std::to_string(entries_.cols()) + ", bases need " +
                     std::to_string(codomain_.dimension()) + "x" +
                     std::to_string(domain_.dimension()));
  if (codomain_.alphabet_size() != domain_.alphabet_size())
    throw InputError("Fock matrix bases use different alphabets");
}

FockVector FockMatrix::apply(const FockVector& v) const {
  check_same_basis(domain_, v.basis());
  return FockVector(codomain_, entries_ * v.coefficients());
}

FockMatrix FockMatrix::adjoint() const {
  return FockMatrix(domain_, codomain_, entries_.transpose());
}

FockMatrix operator*(const FockMatrix& a, const FockMatrix& b) {
  check_same_basis(a.domain(), b.codomain());
  return FockMatrix(a.codomain(), b.domain(), a.entries() * b.entries());
}

FockVector left_shift(Symbol i, const FockVector& v) {
  const WordIndex& words = v.basis().words();
  check_symbol(i, words.alphabet_size());
  check_shiftable(v, "left shift");
  FockVector out(v.basis());
  const std::size_t n = words.offset(words.max_length());
  for (std::size_t w = 0; w < n; ++w)
    out.coefficients()(as_index(prepend_index(words, i, w))) =
        v.coefficients()(as_index(w));
  return out;
}

FockVector right_shift(Symbol i, const FockVector& v) {
  const WordIndex& words = v.basis().words();
  check_symbol(i, words.alphabet_size());
  check_shiftable(v, "right shift");
  FockVector out(v.basis());
  const std::size_t n = words.offset(words.max_length());
  for (std::size_t w = 0; w < n; ++w)
    out.coefficients()(as_index(append_index(words, w, i))) =
        v.coefficients()(as_index(w));
  return out;
}

FockVector left_shift_adj(Symbol i, const FockVector& v) {
  const WordIndex& words = v.basis().words();
  check_symbol(i, words.alphabet_size());
  FockVector out(v.basis());
  const std::size_t n = words.offset(words.max_length());
  for (std::size_t w = 0; w < n; ++w)
    out.coefficients()(as_index(w)) =
        v.coefficients()(as_index(prepend_index(words, i, w)));
  return out;
}

FockVector right_shift_adj(Symbol i, const FockVector& v) {
  const WordIndex& words = v.basis().words();
  check_symbol(i, words.alphabet_size());
  FockVector out(v.basis());
  const std::size_t n = words.offset(words.max_length());
  for (std::size_t w = 0; w < n; ++w)
    out.coefficients()(as_index(w)) =
        v.coefficients()(as_index(append_index(words, w, i)));
  return out;
}

FockVector flip(const FockVector& v) {
  const std::vector<std::size_t> perm = reversal_permutation(v.basis().words());
  FockVector out(v.basis());
  for (std::size_t w = 0; w < perm.size(); ++w)
    out.coefficients()(as_index(perm[w])) = v.coefficients()(as_index(w));
  return out;
}

FockMatrix left_shift_matrix(const FockBasis& basis, Symbol i) {
  const WordIndex& words = basis.words();
  check_symbol(i, words.alphabet_size());
  const Index n = as_index(basis.dimension());
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t w = 0; w < words.offset(words.max_length()); ++w)
    m(as_index(prepend_index(words, i, w)), as_index(w)) = 1.0;
  return FockMatrix(basis, basis, std::move(m));
}

FockMatrix right_shift_matrix(const FockBasis& basis, Symbol i) {
  const WordIndex& words = basis.words();
  check_symbol(i, words.alphabet_size());
  const Index n = as_index(basis.dimension());
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t w = 0; w < words.offset(words.max_length()); ++w)
    m(as_index(append_index(words, w, i)), as_index(w)) = 1.0;
  return FockMatrix(basis, basis, std::move(m));
}

FockMatrix flip_matrix(const FockBasis& basis) {
  const std::vector<std::size_t> perm = reversal_permutation(basis.words());
  const Index n = as_index(basis.dimension());
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t w = 0; w < perm.size(); ++w) m(as_index(perm[w]), as_index(w)) = 1.0;
  return FockMatrix(basis, basis, std::move(m));
}

FockMatrix identity_matrix(const FockBasis& basis) {
  const Index n = as_index(basis.dimension());
  return FockMatrix(basis, basis, Matrix::Identity(n, n));
}

TwoSidedVector::TwoSidedVector(FockBasis basis)
    : basis_(std::move(basis)),
      negative_(Vector::Zero(as_index(basis_.dimension()) - 1)),
      positive_(Vector::Zero(as_index(basis_.dimension()))) {}

TwoSidedVector::TwoSidedVector(FockBasis basis, Vector negative, Vector positive)
    : basis_(std::move(basis)),
      negative_(std::move(negative)),
      positive_(std::move(positive)) {
  const Index n = as_index(basis_.dimension());
  if (negative_.size() != n - 1 || positive_.size() != n)
    throw InputError("two-sided vector needs " + std::to_string(n - 1) +
                     " negative and " + std::to_string(n) +
                     " positive coefficients");
}

TwoSidedVector TwoSidedVector::from_negative(const FockVector& v) {
  const Index n = v.coefficients().size();
  return TwoSidedVector(v.basis(), v.coefficients().tail(n - 1),
                        Vector::Zero(n));
}

TwoSidedVector TwoSidedVector::from_positive(const FockVector& v) {
  const Index n = v.coefficients().size();
  return TwoSidedVector(v.basis(), Vector::Zero(n - 1), v.coefficients());
}

double TwoSidedVector::squared_norm() const {
  return negative_.squaredNorm() + positive_.squaredNorm();
}

double TwoSidedVector::norm() const { return std::sqrt(squared_norm()); }

TwoSidedVector& TwoSidedVector::operator+=(const TwoSidedVector& other) {
  check_same_basis(basis_, other.basis_);
  negative_ += other.negative_;
  positive_ += other.positive_;
  return *this;
}

TwoSidedVector project_negative(const TwoSidedVector& h) {
  return TwoSidedVector(h.basis(), h.negative(),
                        Vector::Zero(h.positive().size()));
}

TwoSidedVector bilateral_shift(Symbol i, const TwoSidedVector& h) {
  const WordIndex& words = h.basis().words();
  check_symbol(i, words.alphabet_size());
  const std::size_t top = words.offset(words.max_length());
  for (std::size_t w = top; w < words.size(); ++w)
    if (h.positive()(as_index(w)) != 0.0)
      throw TruncationError("bilateral shift of a vector with positive support at degree " +
                            std::to_string(words.max_length()) +
                            " leaves the truncated space");

  TwoSidedVector out(h.basis());
  // Negative part: e_{wi} -> e_w, with w = eps going to the positive part.
  out.positive()(0) = h.negative()(as_index(append_index(words, 0, i)) - 1);
  for (std::size_t w = 1; w < top; ++w)
    out.negative()(as_index(w) - 1) =
        h.negative()(as_index(append_index(words, w, i)) - 1);
  // Positive part: e_w -> e_{wi}.
  for (std::size_t w = 0; w < top; ++w)
    out.positive()(as_index(append_index(words, w, i))) +=
        h.positive()(as_index(w));
  return out;
}

FockMatrix nc_hankel_matrix(const Wfa& wfa, int row_degree, int col_degree) {
  HankelBlock h = build_hankel(wfa, row_degree, col_degree);
  const int d = wfa.alphabet_size();
  return FockMatrix(FockBasis(d, row_degree), FockBasis(d, col_degree),
                    h.entries());
}

FlippedSymbol flipped_symbol_coefficients(const Wfa& wfa, int degree) {
  if (degree < 0) throw InputError("degree must be >= 0");
  return FlippedSymbol{
      FockVector(FockBasis(wfa.alphabet_size(), degree), word_values(wfa, degree)),
      false};
}

FockMatrix right_multiplication_matrix(const FockVector& theta) {
  const FockBasis& basis = theta.basis();
  const WordIndex& words = basis.words();
  const int top = words.max_length();
  const Index n = as_index(basis.dimension());
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t w = 0; w < words.size(); ++w) {
    const std::size_t fit = words.offset(top - words.length(w) + 1);
    for (std::size_t g = 0; g < fit; ++g)
      m(as_index(concat_index(words, words, w, words, g)), as_index(w)) =
          theta.coefficients()(as_index(g));
  }
  return FockMatrix(basis, basis, std::move(m));
}

FockMatrix multiplier_from_symbol(const FockVector& theta) {
  return flip_matrix(theta.basis()) * right_multiplication_matrix(theta);
}

}  // namespace wfa
