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

#include "wfa/aak.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "wfa/errors.hpp"

namespace wfa {

namespace {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

void require_one_letter(const Wfa& wfa, const char* what) {
  if (wfa.alphabet_size() != 1)
    throw InputError(std::string(what) +
                     " is only defined for one-letter automata (alphabet "
                     "size " + std::to_string(wfa.alphabet_size()) + ")");
}

void require_stable(const Matrix& a) {
  const double rho = spectral_radius(a);
  if (!(rho < 1.0))
    throw DivergenceError("spectral radius " + std::to_string(rho) +
                              " >= 1: the Hankel operator is unbounded",
                          rho);
}

// Solves X = M X M^T + C for X.
Matrix stein_solve(const Matrix& m, const Matrix& c, double tol) {
  const auto n = m.rows();
  const Matrix system =
      Matrix::Identity(n * n, n * n) - kronecker(m, m);
  const Eigen::Map<const Vector> rhs(c.data(), n * n);
  const Vector sol = system.partialPivLu().solve(rhs);
  Matrix x = Eigen::Map<const Matrix>(sol.data(), n, n);
  x = 0.5 * (x + x.transpose()).eval();
  const double residual = (x - m * x * m.transpose() - c).norm();
  if (!(residual <= tol * std::max(1.0, c.norm())))
    throw NumericError("Gramian residual " + std::to_string(residual) +
                       " above tolerance");
  return x;
}

struct SingularSystem {
  Vector sigmas;
  Matrix xs;  // column i: eigenvector of QP for sigma_i with x^T P x = 1
};

SingularSystem singular_system(const Wfa& wfa, const GramianPair& g,
                               double rank_tol) {
  Eigen::LLT<Matrix> chol(g.p);
  if (chol.info() != Eigen::Success)
    throw DegenerateInputError(
        "controllability Gramian is singular: the automaton is not minimal");
  const Matrix l = chol.matrixL();
  const Matrix sym = l.transpose() * g.q * l;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (sym + sym.transpose()));
  if (eig.info() != Eigen::Success)
    throw NumericError("eigenvalue computation for PQ did not converge");
  const auto n = static_cast<Eigen::Index>(wfa.num_states());
  SingularSystem out{Vector(n), Matrix(n, n)};
  // Eigen sorts ascending; reverse into sigma_0 >= sigma_1 >= ...
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index j = n - 1 - i;
    out.sigmas(i) = std::sqrt(std::max(0.0, eig.eigenvalues()(j)));
    out.xs.col(i) = l.transpose().triangularView<Eigen::Upper>().solve(
        eig.eigenvectors().col(j));
  }
  if (!(out.sigmas(0) > 0.0) || !(out.sigmas(n - 1) > rank_tol * out.sigmas(0)))
    throw DegenerateInputError(
        "Hankel singular value " + std::to_string(out.sigmas(n - 1)) +
        " is numerically zero: the automaton is not minimal");
  return out;
}

SchmidtPair make_pair(const Wfa& wfa, const GramianPair& g,
                      const SingularSystem& sys, int index) {
  SchmidtPair pair{sys.sigmas(index), sys.xs.col(index), Vector()};
  // Deterministic sign: v(0) = beta^T x >= 0.
  if (wfa.beta().dot(pair.x) < 0.0) pair.x = -pair.x;
  pair.px = g.p * pair.x;
  return pair;
}

// Numerator of a strictly proper series sum_j h_j z^{-j-1} with
// denominator `den` (monic, degree n): p_j = sum_k den_{j+k+1} h_k.
poly::Poly proper_numerator(const poly::Poly& den, const Vector& h) {
  const int n = poly::degree(den);
  poly::Poly p(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k + j + 1 <= n; ++k)
      p[static_cast<std::size_t>(j)] +=
          den[static_cast<std::size_t>(j + k + 1)] * h(k);
  return p;
}

// Numerator of the power series sum_j u_j z^j with denominator `den`:
// the first n coefficients of den * u.
poly::Poly series_numerator(const poly::Poly& den, const Vector& u) {
  const int n = poly::degree(den);
  poly::Poly p(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i)
      p[static_cast<std::size_t>(j)] += den[static_cast<std::size_t>(i)] * u(j - i);
  return p;
}

}  // namespace

RationalSymbol::RationalSymbol(const Wfa& wfa)
    : alpha_(wfa.alpha()), a_(wfa.transitions().front()), beta_(wfa.beta()) {
  require_one_letter(wfa, "a rational symbol");
  require_stable(a_);
}

Complex RationalSymbol::operator()(Complex z) const {
  const auto n = a_.rows();
  const ComplexMatrix m =
      z * ComplexMatrix::Identity(n, n) - a_.cast<Complex>();
  const ComplexVector y = m.partialPivLu().solve(beta_.cast<Complex>());
  return alpha_.cast<Complex>().dot(y);
}

Vector symbol_coefficients(const RationalSymbol& symbol, int m) {
  if (m < 1) throw InputError("number of coefficients must be >= 1");
  Vector out(m);
  // Same accumulation order as evaluate() on the word a^j.
  RowVector row = symbol.alpha().transpose();
  for (int j = 0; j < m; ++j) {
    out(j) = row.dot(symbol.beta().transpose());
    RowVector next = row * symbol.a();
    row = std::move(next);
  }
  return out;
}

GramianPair gramians(const Wfa& wfa, double tol) {
  require_one_letter(wfa, "Gramians");
  const Matrix& a = wfa.transitions().front();
  require_stable(a);
  return {stein_solve(a, wfa.beta() * wfa.beta().transpose(), tol),
          stein_solve(a.transpose(), wfa.alpha() * wfa.alpha().transpose(),
                      tol)};
}

Vector hankel_singular_values(const Wfa& wfa, double rank_tol) {
  return singular_system(wfa, gramians(wfa), rank_tol).sigmas;
}

SchmidtPair schmidt_pair(const Wfa& wfa, const GramianPair& g, int index) {
  if (index < 0 || index >= wfa.num_states())
    throw InputError("Schmidt pair index out of range");
  return make_pair(wfa, g, singular_system(wfa, g, kDefaultRankTol), index);
}

Vector SchmidtPair::v_coefficients(const Wfa& wfa, int m) const {
  Vector out(m);
  Vector col = wfa.beta();
  for (int j = 0; j < m; ++j) {
    out(j) = x.dot(col);
    col = (wfa.transitions().front() * col).eval();
  }
  return out;
}

Vector SchmidtPair::w_coefficients(const Wfa& wfa, int m) const {
  Vector out(m);
  RowVector row = wfa.alpha().transpose();
  for (int j = 0; j < m; ++j) {
    out(j) = row.dot(px.transpose()) / sigma;
    row = (row * wfa.transitions().front()).eval();
  }
  return out;
}

Complex SchmidtPair::v_hat(const Wfa& wfa, Complex z) const {
  const Matrix& a = wfa.transitions().front();
  const auto n = a.rows();
  const ComplexMatrix m = ComplexMatrix::Identity(n, n) -
                          z * a.transpose().cast<Complex>();
  const ComplexVector y = m.partialPivLu().solve(x.cast<Complex>());
  return wfa.beta().cast<Complex>().dot(y);
}

Complex SchmidtPair::w_hat(const Wfa& wfa, Complex z) const {
  const Matrix& a = wfa.transitions().front();
  const auto n = a.rows();
  const ComplexMatrix m =
      z * ComplexMatrix::Identity(n, n) - a.cast<Complex>();
  const ComplexVector y = m.partialPivLu().solve(px.cast<Complex>());
  return wfa.alpha().cast<Complex>().dot(y) / sigma;
}

Vector AakApproximation::error_coefficients(int m) const {
  const auto c = poly::laurent_tail(tail_numerator_, tail_denominator_, m);
  return Eigen::Map<const Vector>(c.data(), m);
}

Vector AakApproximation::approximant_coefficients(int m) const {
  // The only Hankel operator of rank 0 is zero; f - e would leave rounding
  // residue of order eps * sigma_0 instead.
  if (k_ == 0) return Vector::Zero(m);
  return symbol_coefficients(RationalSymbol(original_), m) -
         error_coefficients(m);
}

HankelBlock AakApproximation::approximant_block(int size) const {
  return hankel_from_sequence(approximant_coefficients(2 * size - 1), size);
}

HankelBlock AakApproximation::original_block(int size) const {
  return hankel_from_sequence(
      symbol_coefficients(RationalSymbol(original_), 2 * size - 1), size);
}

Complex AakApproximation::error_function(Complex z) const {
  return schmidt_.sigma * schmidt_.w_hat(original_, z) /
         schmidt_.v_hat(original_, z);
}

AakApproximation aak_approximate(const Wfa& wfa, int k,
                                 const AakOptions& options) {
  require_one_letter(wfa, "AAK approximation");
  const int n = wfa.num_states();
  if (k < 0 || k >= n)
    throw InputError("target size " + std::to_string(k) +
                     " must satisfy 0 <= k < n = " + std::to_string(n));
  const Matrix& a = wfa.transitions().front();
  require_stable(a);

  AakApproximation out(wfa);
  out.k_ = k;
  const GramianPair g = gramians(wfa);
  const SingularSystem sys = singular_system(wfa, g, options.rank_tol);
  out.sigmas_ = sys.sigmas;
  out.schmidt_ = make_pair(wfa, g, sys, k);
  const double sigma0 = out.sigmas_(0);
  const double sigma_k = out.sigmas_(k);

  if ((k > 0 && out.sigmas_(k - 1) - sigma_k <= options.tie_tol * sigma0) ||
      (k + 1 < n && sigma_k - out.sigmas_(k + 1) <= options.tie_tol * sigma0))
    out.warnings_.push_back(
        "sigma_" + std::to_string(k) +
        " is numerically repeated; the optimal approximant may not be unique");

  // e = sigma w / v = [p_w / a] / [p_v / a~] with a = det(zI - A) and
  // a~(z) = z^n a(1/z) = det(I - z A^T).
  Eigen::EigenSolver<Matrix> eig(a, false);
  if (eig.info() != Eigen::Success)
    throw NumericError("eigenvalue computation did not converge");
  std::vector<Complex> poles(eig.eigenvalues().data(),
                             eig.eigenvalues().data() + n);
  const poly::Poly char_poly = poly::from_roots(poles);
  poly::Poly reversed(char_poly.rbegin(), char_poly.rend());

  Vector h(n), u(n);
  {
    RowVector row = wfa.alpha().transpose();
    Vector col = wfa.beta();
    for (int j = 0; j < n; ++j) {
      h(j) = row.dot(out.schmidt_.px.transpose());
      u(j) = out.schmidt_.x.dot(col);
      row = (row * a).eval();
      col = (a * col).eval();
    }
  }
  const poly::Poly num_w = proper_numerator(char_poly, h);
  const poly::Poly num_v = poly::trim(series_numerator(reversed, u), 1e-13);
  if (num_v.empty())
    throw NumericError("Schmidt function v vanishes identically");

  std::vector<Complex> inside = poles;
  std::vector<Complex> outside;
  for (const Complex& r : poly::roots(num_v)) {
    const double modulus = std::abs(r);
    if (std::abs(modulus - 1.0) <= 1e-8)
      throw NumericError("Schmidt function v has a zero on the unit circle (|z| = " +
                         std::to_string(modulus) + ")");
    if (modulus < 1.0) {
      inside.push_back(r);
      ++out.inner_zeros_;
    } else {
      outside.push_back(r);
    }
  }
  poly::Poly outer = poly::from_roots(outside);
  for (double& c : outer) c *= num_v.back();
  out.tail_denominator_ = poly::from_roots(inside);
  out.tail_numerator_ = poly::negative_part_numerator(
      poly::multiply(num_w, reversed), out.tail_denominator_, outer);
  if (out.inner_zeros_ != k)
    out.warnings_.push_back("v has " + std::to_string(out.inner_zeros_) +
                            " zeros in the unit disc, expected " +
                            std::to_string(k));

  // Adaptive truncation of ||H_N - G_N||, whose entries are e_{i+j}.
  int size = options.initial_size > 0 ? options.initial_size
                                      : std::max(4 * n, 16);
  auto error_norm = [&](int m) {
    return spectral_norm(
        hankel_from_sequence(out.error_coefficients(2 * m - 1), m).entries());
  };
  double norm = error_norm(size);
  while (true) {
    if (2 * size > options.max_size) break;
    const double next = error_norm(2 * size);
    size *= 2;
    const bool settled =
        std::abs(next - norm) <= options.convergence_tol * next;
    norm = next;
    if (settled) {
      out.converged_ = true;
      break;
    }
  }
  if (!out.converged_)
    out.warnings_.push_back("truncation did not settle below N = " +
                            std::to_string(options.max_size));
  out.truncation_ = size;
  out.achieved_norm_ = norm;
  out.certificate_tol_ =
      options.certificate_tol >= 0.0 ? options.certificate_tol : 1e-6 * sigma0;
  out.certified_ = std::abs(norm - sigma_k) <= out.certificate_tol_;

  const Vector gcoef = out.approximant_coefficients(2 * size + 1);
  const HankelBlock gblock = hankel_from_sequence(gcoef, size);
  out.approximant_rank_ = hankel_rank(gblock, options.rank_tol);
  if (out.approximant_rank_ != k)
    out.warnings_.push_back("G_N has numerical rank " +
                            std::to_string(out.approximant_rank_) +
                            ", expected " + std::to_string(k));
  if (k > 0) {
    const Series g = [&gcoef](std::span<const Symbol> word) {
      return gcoef(static_cast<Eigen::Index>(word.size()));
    };
    try {
      out.approximant_ = spectral_recover(gblock, k, g, options.rank_tol);
    } catch (const InputError& e) {
      throw NumericError(std::string("spectral recovery of the approximant failed: ") +
                         e.what());
    }
  }
  return out;
}

ModulusRange error_function_modulus(const AakApproximation& result,
                                    int samples) {
  if (samples < 1) throw InputError("need at least one sample");
  ModulusRange range{std::numeric_limits<double>::infinity(), 0.0};
  for (int t = 0; t < samples; ++t) {
    const double theta = 2.0 * std::numbers::pi * t / samples;
    const double m = std::abs(result.error_function(std::polar(1.0, theta)));
    range.min = std::min(range.min, m);
    range.max = std::max(range.max, m);
  }
  return range;
}

HankelBlock hankel_from_sequence(const Vector& c, int size) {
  if (size < 1) throw InputError("Hankel block size must be >= 1");
  if (c.size() < 2 * size - 1)
    throw InputError("sequence too short for the requested Hankel block");
  Matrix m(size, size);
  for (int j = 0; j < size; ++j)
    for (int i = 0; i < size; ++i) m(i, j) = c(i + j);
  return HankelBlock(WordIndex(1, size - 1), WordIndex(1, size - 1),
                     std::move(m));
}

}  // namespace wfa
