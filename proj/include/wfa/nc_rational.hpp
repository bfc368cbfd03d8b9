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
#include <cstdint>
#include <vector>

#include "wfa/wfa.hpp"

namespace wfa {

///
/// NC rational function r(z) = c^T (1 - sum_j A_j z_j)^{-1} b in d
/// noncommuting variables. Its coefficient at a word w is c^T A_w b with
/// A_w = A_{w_1} ... A_{w_k}, so an automaton (alpha, A, beta) gives the
/// realization (alpha, A, beta).
///
class NcRationalRealization {
 public:
  NcRationalRealization(Vector c, std::vector<Matrix> a, Vector b);
  explicit NcRationalRealization(const Wfa& wfa);

  int num_variables() const { return static_cast<int>(a_.size()); }
  int size() const { return static_cast<int>(c_.size()); }
  const Vector& c() const { return c_; }
  const Vector& b() const { return b_; }
  const Matrix& a(int j) const;

  // c^T A_w b.
  double coefficient(std::span<const Symbol> word) const;

 private:
  Vector c_;
  std::vector<Matrix> a_;
  Vector b_;
};

struct NcEvaluation {
  Matrix value;            // m x m
  double spectral_radius;  // of K = sum_j A_j (x) z_j
  double row_norm;         // || sum_j z_j z_j^T ||, < 1 for a row contraction
};

///
/// Evaluates r at square matrices z_1..z_d of size m:
///
///   (c^T (x) 1_m) (1_n (x) 1_m - sum_j A_j (x) z_j)^{-1} (b (x) 1_m).
///
/// Throws DivergenceError if spectral_radius(K) >= 1.
///
NcEvaluation nc_rational_eval(const NcRationalRealization& r,
                              const std::vector<Matrix>& z);

inline constexpr std::size_t kMaxSeriesWords = 1'000'000;

// sum_{|w| <= degree} c^T A_w b z_w, with z_w = z_{w_1} ... z_{w_k}.
// Refuses degrees with more than kMaxSeriesWords words.
Matrix nc_rational_series(const NcRationalRealization& r,
                          const std::vector<Matrix>& z, int degree);

// Bound on ||r(z) - nc_rational_series(r, z, degree)||_2:
// |c| |b| q^{degree+1} / (1 - q) with q = ||K||_2; infinity if q >= 1.
double nc_series_tail_bound(const NcRationalRealization& r,
                            const std::vector<Matrix>& z, int degree);

// d random m x m matrices scaled so that ||sum_j A_j (x) z_j||_2 == norm.
std::vector<Matrix> random_substitution(const NcRationalRealization& r, int m,
                                        double norm, std::uint64_t seed);

}  // namespace wfa
