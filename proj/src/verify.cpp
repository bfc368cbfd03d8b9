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

#include "wfa/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <tuple>
#include <string>

#include "wfa/errors.hpp"

namespace wfa {

namespace {

using Eigen::Index;

// Random coefficients on the words of length <= degree - 1, zero above.
Vector random_interior(const FockBasis& basis, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector v = Vector::Zero(static_cast<Index>(basis.dimension()));
  const auto interior = static_cast<Index>(basis.words().offset(basis.degree()));
  for (Index j = 0; j < interior; ++j) v(j) = normal(rng);
  return v;
}

Vector random_full(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector v(n);
  for (Index j = 0; j < n; ++j) v(j) = normal(rng);
  return v;
}

// Left and right side of (b) for the given h.
std::pair<double, double> bilateral_sides(const std::vector<TwoSidedVector>& h) {
  TwoSidedVector sum(h[0].basis());
  double rhs = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    sum += bilateral_shift(static_cast<Symbol>(i), h[i]);
    rhs += h[i].squared_norm();
  }
  return {sum.squared_norm(), rhs};
}

// Free group elements of length <= 1: 0 = eps, 1..d = g_i, d+1..2d = g_i^-1.
Vector free_group_shift(int d, int i, const Vector& h) {
  Vector out = Vector::Zero(h.size());
  out(1 + i) += h(0);
  out(0) += h(1 + d + i);
  for (int j = 0; j < d; ++j) {
    const bool leaves = h(1 + j) != 0.0 || (j != i && h(1 + d + j) != 0.0);
    if (leaves)
      throw TruncationError(
          "free-group shift produces an element of length 2");
  }
  return out;
}

std::pair<double, double> free_group_sides(int d, const std::vector<Vector>& h) {
  Vector sum = Vector::Zero(2 * d + 1);
  double rhs = 0.0;
  for (int i = 0; i < static_cast<int>(h.size()); ++i) {
    sum += free_group_shift(d, i, h[static_cast<std::size_t>(i)]);
    rhs += h[static_cast<std::size_t>(i)].squaredNorm();
  }
  return {sum.squaredNorm(), rhs};
}

}  // namespace

HankelEquationReport verify_hankel_equation(const Wfa& wfa, int degree) {
  if (degree < 2) throw InputError("Hankel equation check needs degree >= 2");
  const FockMatrix h = nc_hankel_matrix(wfa, degree, degree);
  const FockBasis& basis = h.domain();
  const auto interior = static_cast<Index>(basis.words().offset(degree));

  HankelEquationReport report;
  report.degree = degree;
  report.rows_checked = static_cast<std::size_t>(interior);
  report.columns_checked = static_cast<std::size_t>(interior);
  for (Symbol i = 0; i < wfa.alphabet_size(); ++i) {
    const Matrix lhs = (h * left_shift_matrix(basis, i)).entries();
    const Matrix rhs = (right_shift_matrix(basis, i).adjoint() * h).entries();
    const double diff = (lhs.topLeftCorner(interior, interior) -
                         rhs.topLeftCorner(interior, interior))
                            .cwiseAbs()
                            .maxCoeff();
    report.discrepancy.push_back(diff);
    report.max_discrepancy = std::max(report.max_discrepancy, diff);
  }
  return report;
}

ShiftInequalityReport verify_shift_inequalities(int alphabet_size, int degree,
                                                int trials, std::uint64_t seed) {
  if (trials < 1) throw InputError("shift inequality check needs trials >= 1");
  if (degree < 1) throw InputError("shift inequality check needs degree >= 1");
  const FockBasis basis(alphabet_size, degree);
  const auto n = static_cast<Index>(basis.dimension());
  const auto d = static_cast<std::size_t>(alphabet_size);
  std::mt19937_64 rng(seed);

  ShiftInequalityReport report;
  report.alphabet_size = alphabet_size;
  report.degree = degree;
  report.trials = trials;
  report.min_excess_a = std::numeric_limits<double>::infinity();
  report.max_excess_b = -std::numeric_limits<double>::infinity();
  report.max_excess_b_positive = -std::numeric_limits<double>::infinity();

  for (int t = 0; t < trials; ++t) {
    FockVector sum(basis);
    double rhs = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      const FockVector y(basis, random_interior(basis, rng));
      sum += left_shift(static_cast<Symbol>(i), y);
      rhs += y.coefficients().squaredNorm();
    }
    const double lhs = sum.coefficients().squaredNorm();
    report.max_deviation_a = std::max(report.max_deviation_a, std::abs(lhs - rhs));
    report.min_excess_a = std::min(report.min_excess_a, lhs - rhs);

    std::vector<TwoSidedVector> full;
    std::vector<TwoSidedVector> positive;
    for (std::size_t i = 0; i < d; ++i) {
      full.emplace_back(basis, random_full(n - 1, rng), random_interior(basis, rng));
      positive.emplace_back(basis, Vector::Zero(n - 1), random_interior(basis, rng));
    }
    const auto [lb, rb] = bilateral_sides(full);
    report.max_deviation_b = std::max(report.max_deviation_b, std::abs(lb - rb));
    report.max_excess_b = std::max(report.max_excess_b, lb - rb);
    const auto [lp, rp] = bilateral_sides(positive);
    report.max_deviation_b_positive =
        std::max(report.max_deviation_b_positive, std::abs(lp - rp));
    report.max_excess_b_positive = std::max(report.max_excess_b_positive, lp - rp);
  }

  std::vector<TwoSidedVector> letters;
  for (std::size_t i = 0; i < d; ++i) {
    const Symbol letter = static_cast<Symbol>(i);
    letters.push_back(TwoSidedVector::from_negative(
        FockVector::basis_vector(basis, std::span<const Symbol>(&letter, 1))));
  }
  std::tie(report.letters_lhs, report.letters_rhs) = bilateral_sides(letters);
  report.max_deviation_b = std::max(report.max_deviation_b,
                                    std::abs(report.letters_lhs - report.letters_rhs));
  report.max_excess_b =
      std::max(report.max_excess_b, report.letters_lhs - report.letters_rhs);
  return report;
}

FreeGroupReport free_group_counterexample(int alphabet_size) {
  if (alphabet_size < 2)
    throw InputError("free-group counterexample needs at least 2 generators");
  const int d = alphabet_size;
  const Index size = 2 * d + 1;
  FreeGroupReport report;
  report.alphabet_size = d;

  std::vector<Vector> h(2, Vector::Zero(size));
  h[0](1 + d) = 1.0;      // e_{g_1^{-1}}
  h[1](1 + d + 1) = 1.0;  // e_{g_2^{-1}}
  std::tie(report.lhs, report.rhs) = free_group_sides(d, h);
  report.violated = report.lhs > report.rhs;

  std::vector<Vector> monoid(2, Vector::Zero(size));
  monoid[0](0) = 1.0;
  monoid[1](0) = 1.0;
  std::tie(report.monoid_lhs, report.monoid_rhs) = free_group_sides(d, monoid);

  std::vector<Vector> degenerate(2, Vector::Zero(size));
  degenerate[1](1 + d + 1) = 1.0;
  std::tie(report.degenerate_lhs, report.degenerate_rhs) =
      free_group_sides(d, degenerate);
  return report;
}

MultiplierReport verify_multiplier_intertwining(const FockMatrix& op) {
  const FockBasis& basis = op.domain();
  if (!(op.codomain() == basis))
    throw InputError("multiplier must map a truncated Fock space to itself");
  const FockMatrix u = flip_matrix(basis);
  const FockMatrix uop = u * op;
  const auto interior = static_cast<Index>(basis.words().offset(basis.degree()));

  MultiplierReport report;
  for (Symbol a = 0; a < basis.alphabet_size(); ++a) {
    const FockMatrix s = left_shift_matrix(basis, a);
    const Matrix diff = (uop * s).entries() - (s * uop).entries();
    const double m = diff.leftCols(interior).cwiseAbs().maxCoeff();
    report.discrepancy.push_back(m);
    report.max_discrepancy = std::max(report.max_discrepancy, m);
  }
  return report;
}

}  // namespace wfa
