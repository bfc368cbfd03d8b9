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
#include <vector>

#include "wfa/fock.hpp"
#include "wfa/wfa.hpp"

namespace wfa {

///
/// H S_i = R*_i H on the truncated NC Hankel matrix with rows and columns
/// of degree <= D. Compared on columns |a| <= D - 1 and rows |b| <= D - 1,
/// where neither side sees the cutoff. Both sides are built from the same
/// table of f values, so the expected discrepancy is exactly 0.
///
struct HankelEquationReport {
  int degree = 0;
  std::vector<double> discrepancy;  // per symbol, max absolute entry
  double max_discrepancy = 0.0;
  std::size_t rows_checked = 0;
  std::size_t columns_checked = 0;
};

HankelEquationReport verify_hankel_equation(const Wfa& wfa, int degree);

///
/// Random-trial check of the two shift inequalities
///
///   (a) ||S_1 y_1 + ... + S_d y_d||^2 >= ||y_1||^2 + ... + ||y_d||^2
///   (b) ||Rb_1 h_1 + ... + Rb_d h_d||^2 <= ||h_1||^2 + ... + ||h_d||^2
///
/// with Rb the bilateral shift. Deviations are |lhs - rhs|; excesses are
/// lhs - rhs for (b) (positive means the inequality is violated). (b) is
/// sampled on the whole two-sided space and separately on the positive
/// part alone. The fixed pair h_i = e_i in the negative part, all other h
/// zero, is also evaluated.
///
struct ShiftInequalityReport {
  int alphabet_size = 0;
  int degree = 0;
  int trials = 0;
  double max_deviation_a = 0.0;
  double min_excess_a = 0.0;  // lhs - rhs, negative means (a) violated
  double max_deviation_b = 0.0;
  double max_excess_b = 0.0;
  double max_deviation_b_positive = 0.0;
  double max_excess_b_positive = 0.0;
  double letters_lhs = 0.0;  // ||Rb_1 e_1 + ... + Rb_d e_d||^2
  double letters_rhs = 0.0;
};

ShiftInequalityReport verify_shift_inequalities(int alphabet_size, int degree,
                                                int trials, std::uint64_t seed);

///
/// Bilateral shift on sequences indexed by the free group, restricted to
/// group elements of length <= 1: e_eps, e_{g_i}, e_{g_i^{-1}}. Rb_i is
/// right multiplication by g_i, so Rb_i e_{g_i^{-1}} = e_eps and the ranges
/// of different Rb_i overlap.
///
struct FreeGroupReport {
  int alphabet_size = 0;
  double lhs = 0.0;  // h_i = e_{g_i^{-1}} for i = 1, 2
  double rhs = 0.0;
  bool violated = false;
  double monoid_lhs = 0.0;  // h_1 = h_2 = e_eps on F^2
  double monoid_rhs = 0.0;
  double degenerate_lhs = 0.0;  // h_1 = 0, h_2 = e_{g_2^{-1}}
  double degenerate_rhs = 0.0;
};

FreeGroupReport free_group_counterexample(int alphabet_size = 2);

///
/// Max entry of U A S_a - S_a U A per symbol a, over the interior columns
/// |w| <= D - 1. Vanishes when U A commutes with the left shifts, e.g. for
/// A = multiplier_from_symbol(theta).
///
struct MultiplierReport {
  std::vector<double> discrepancy;
  double max_discrepancy = 0.0;
};

MultiplierReport verify_multiplier_intertwining(const FockMatrix& op);

}  // namespace wfa
