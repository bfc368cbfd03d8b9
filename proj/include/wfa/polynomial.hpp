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
#include <vector>

namespace wfa::poly {

// Real polynomial, coefficients in increasing degree: p[i] multiplies z^i.
// The zero polynomial is the empty vector.
using Poly = std::vector<double>;
using Complex = std::complex<double>;

int degree(const Poly& p);  // -1 for the zero polynomial

// Drops leading coefficients with |c| <= rel_tol * max|c|.
Poly trim(Poly p, double rel_tol = 0.0);

Poly multiply(const Poly& a, const Poly& b);
Poly add(const Poly& a, const Poly& b);

struct DivMod {
  Poly quotient;
  Poly remainder;
};
DivMod divmod(const Poly& num, const Poly& den);

Complex evaluate(const Poly& p, Complex z);

// Roots via the eigenvalues of the companion matrix.
std::vector<Complex> roots(const Poly& p);

// Monic polynomial with the given roots. Non-real roots must come in
// conjugate pairs; the imaginary rounding residue is discarded.
Poly from_roots(const std::vector<Complex>& roots);

///
/// Splits the strictly negative-power part off a rational function on the
/// unit circle. Given num / (inner * outer), where `inner` is monic with all
/// roots in the open unit disc and `outer` has all roots outside the closed
/// disc, returns r with deg r < deg inner such that the Laurent expansion of
/// num / (inner * outer) on |z| = 1 has negative-power part r / inner.
///
Poly negative_part_numerator(const Poly& num, const Poly& inner,
                             const Poly& outer);

// Coefficients c_0, ..., c_{m-1} of r / inner = sum_j c_j z^{-j-1}, by long
// division (inner monic, deg r < deg inner).
std::vector<double> laurent_tail(const Poly& r, const Poly& inner, int m);

}  // namespace wfa::poly
