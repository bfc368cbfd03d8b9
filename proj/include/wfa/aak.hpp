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

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "wfa/hankel.hpp"
#include "wfa/polynomial.hpp"
#include "wfa/wfa.hpp"

namespace wfa {

using Complex = std::complex<double>;

///
/// One-letter automaton read as a rational symbol. The Hankel matrix
/// H(i, j) = f(i + j) holds the negative Fourier coefficients of
///
///   P_-phi(z) = alpha^T (z I - A)^{-1} beta = sum_{k >= 0} f(k) z^{-k-1},
///
/// so f(k) is the coefficient of z^{-k-1}. Requires spectral_radius(A) < 1.
///
class RationalSymbol {
 public:
  explicit RationalSymbol(const Wfa& wfa);  // throws DivergenceError, InputError

  const Vector& alpha() const { return alpha_; }
  const Matrix& a() const { return a_; }
  const Vector& beta() const { return beta_; }

  // alpha^T (z I - A)^{-1} beta.
  Complex operator()(Complex z) const;

 private:
  Vector alpha_;
  Matrix a_;
  Vector beta_;
};

// Coefficients of z^{-1}, ..., z^{-m}, i.e. f(0), ..., f(m-1).
Vector symbol_coefficients(const RationalSymbol& symbol, int m);

// Controllability and observability Gramians of a one-letter automaton:
//   P = A P A^T + beta beta^T,   Q = A^T Q A + alpha alpha^T.
struct GramianPair {
  Matrix p;
  Matrix q;
};

// Solves both equations through the vectorized system (I - A (x) A) vec(X) =
// vec(C). Throws DivergenceError if rho(A) >= 1 and NumericError if a
// residual exceeds `tol` (relative to the right-hand side).
GramianPair gramians(const Wfa& wfa, double tol = 1e-10);

// Hankel singular values sigma_0 >= ... >= sigma_{n-1} > 0 of a minimal
// one-letter automaton, as square roots of the eigenvalues of PQ. Throws
// DegenerateInputError if the automaton is not minimal, i.e. if some
// sigma_i <= rank_tol * sigma_0.
Vector hankel_singular_values(const Wfa& wfa, double rank_tol = kDefaultRankTol);

///
/// Schmidt pair of the i-th Hankel singular value, H v = sigma w and
/// H^T w = sigma v, carried by an eigenvector x of QP (QP x = sigma^2 x):
///
///   v_j = x^T A^j beta,              v(z) = beta^T (I - z A^T)^{-1} x,
///   w_j = alpha^T A^j P x / sigma,   w(z) = alpha^T (z I - A)^{-1} P x / sigma.
///
/// v lives on nonnegative powers of z and w on negative ones.
///
struct SchmidtPair {
  double sigma;
  Vector x;
  Vector px;  // P x

  Vector v_coefficients(const Wfa& wfa, int m) const;
  Vector w_coefficients(const Wfa& wfa, int m) const;
  Complex v_hat(const Wfa& wfa, Complex z) const;
  Complex w_hat(const Wfa& wfa, Complex z) const;
};

SchmidtPair schmidt_pair(const Wfa& wfa, const GramianPair& g, int index);

struct AakOptions {
  // Adaptive truncation stops when successive ||H_N - G_N|| estimates differ
  // by less than this, relative.
  double convergence_tol = 1e-9;
  int initial_size = 0;  // 0: max(4n, 16)
  int max_size = 2048;
  // Relative gap below which sigma_k is treated as a repeated value.
  double tie_tol = 1e-8;
  // Absolute tolerance of the optimality certificate; < 0 means 1e-6 sigma_0.
  double certificate_tol = -1.0;
  double rank_tol = kDefaultRankTol;
};

///
/// Optimal rank-k Hankel approximation of a one-letter automaton.
///
/// With (sigma_k, v, w) the k-th Schmidt pair, the error symbol is
///
///   e(z) = sigma_k w(z) / v(z),
///
/// which has constant modulus sigma_k on the unit circle. The approximant
/// symbol is g = phi - e, so G(i, j) = f(i + j) - e_{i+j} with e_m the
/// coefficient of z^{-m-1} in the Laurent expansion of e on |z| = 1.
///
class AakApproximation {
 public:
  int k() const { return k_; }
  // sigma_k, the optimal spectral-norm error.
  double error() const { return sigmas_(k_); }
  const Vector& singular_values() const { return sigmas_; }
  const SchmidtPair& schmidt() const { return schmidt_; }

  // The k-state automaton recovered from G by the spectral method.
  const Wfa& approximant() const { return approximant_; }

  // Truncation size N chosen adaptively and the achieved ||H_N - G_N||_2.
  int truncation() const { return truncation_; }
  double achieved_norm() const { return achieved_norm_; }
  bool converged() const { return converged_; }
  // |achieved_norm - sigma_k| <= certificate tolerance.
  bool certified() const { return certified_; }
  double certificate_tol() const { return certificate_tol_; }
  // Numerical rank of G_N.
  int approximant_rank() const { return approximant_rank_; }
  // Zeros of v inside the unit disc.
  int inner_zeros() const { return inner_zeros_; }

  const std::vector<std::string>& warnings() const { return warnings_; }

  // e_0, ..., e_{m-1}: negative-power coefficients of the error symbol.
  Vector error_coefficients(int m) const;
  // g_0, ..., g_{m-1} with g_j = f(j) - e_j.
  Vector approximant_coefficients(int m) const;
  // N x N truncation of G.
  HankelBlock approximant_block(int size) const;
  // N x N truncation of H.
  HankelBlock original_block(int size) const;

  // e(z) = alpha^T (zI - A)^{-1} P x / v(z).
  Complex error_function(Complex z) const;

 private:
  friend AakApproximation aak_approximate(const Wfa&, int, const AakOptions&);

  explicit AakApproximation(Wfa original) : original_(std::move(original)),
                                            approximant_(Wfa::zero(1)) {}

  Wfa original_;
  int k_ = 0;
  Vector sigmas_;
  SchmidtPair schmidt_{};
  poly::Poly tail_numerator_;
  poly::Poly tail_denominator_;
  Wfa approximant_;
  int truncation_ = 0;
  double achieved_norm_ = 0.0;
  bool converged_ = false;
  bool certified_ = false;
  double certificate_tol_ = 0.0;
  int approximant_rank_ = 0;
  int inner_zeros_ = 0;
  std::vector<std::string> warnings_;
};

// Throws InputError if k >= n or the alphabet has more than one letter,
// DegenerateInputError for non-minimal input, DivergenceError if
// rho(A) >= 1, NumericError if v has a zero on the unit circle.
AakApproximation aak_approximate(const Wfa& wfa, int k,
                                 const AakOptions& options = {});

struct ModulusRange {
  double min;
  double max;
};

// |e(z)| over `samples` equally spaced points of the unit circle.
ModulusRange error_function_modulus(const AakApproximation& result,
                                    int samples);

// N x N one-letter Hankel block with entries c[i + j]; c needs 2N - 1 terms.
HankelBlock hankel_from_sequence(const Vector& c, int size);

}  // namespace wfa
