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

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "wfa/aak.hpp"
#include "wfa/errors.hpp"
#include "wfa/nc_rational.hpp"

using namespace wfa;

TEST_CASE("realization basics") {
  NcRationalRealization r(fixtures::two_letter());
  CHECK(r.num_variables() == 2);
  CHECK(r.size() == 2);
  for (const Word& w : oracle::words_up_to(2, 4))
    CHECK(r.coefficient(w) == doctest::Approx(oracle::evaluate(fixtures::two_letter(), w)).epsilon(1e-14));
  CHECK_THROWS_AS(NcRationalRealization(Vector::Ones(2), {Matrix::Zero(3, 3)}, Vector::Ones(2)),
                  InputError);
  CHECK_THROWS_AS(NcRationalRealization(Vector::Ones(2), {Matrix::Zero(2, 2)}, Vector::Ones(3)),
                  InputError);
  CHECK_THROWS_AS(r.a(2), InputError);
}

TEST_CASE("zero substitution gives c^T b") {
  for (const Wfa& w : {fixtures::two_letter(), fixtures::nilpotent(), random_stable_wfa(3, 4, 2, 0.9)}) {
    NcRationalRealization r(w);
    std::vector<Matrix> z(static_cast<std::size_t>(w.alphabet_size()), Matrix::Zero(1, 1));
    NcEvaluation ev = nc_rational_eval(r, z);
    CHECK(ev.value(0, 0) == r.c().dot(r.b()));
    CHECK(ev.spectral_radius == 0.0);
    CHECK(ev.row_norm == 0.0);
  }
}

TEST_CASE("one variable, scalar z") {
  for (const Wfa& w : {fixtures::e1(), fixtures::e2(), random_stable_wfa(1, 4, 6, 0.8)}) {
    NcRationalRealization r(w);
    for (double z : {0.3, -0.7, 0.95}) {
      const double got = nc_rational_eval(r, {Matrix::Constant(1, 1, z)}).value(0, 0);
      // c^T (I - z A)^{-1} b by a direct solve.
      const Matrix sys = Matrix::Identity(r.size(), r.size()) - z * r.a(0);
      const double direct = r.c().dot(sys.fullPivLu().solve(r.b()));
      CHECK(got == doctest::Approx(direct).epsilon(1e-12));
      // Resummation of the coefficients: sum_k f(k) z^k.
      const Vector f = symbol_coefficients(RationalSymbol(w), 2000);
      double series = 0.0;
      for (Eigen::Index k = f.size() - 1; k >= 0; --k) series = series * z + f(k);
      CHECK(got == doctest::Approx(series).epsilon(1e-10));
    }
  }
}

TEST_CASE("matrix substitution against the series") {
  for (int d = 1; d <= 3; ++d)
    for (int m = 1; m <= 2; ++m)
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        NcRationalRealization r(random_stable_wfa(d, 3, 100 + seed, 0.9));
        std::vector<Matrix> z = random_substitution(r, m, 0.5, seed);
        NcEvaluation ev = nc_rational_eval(r, z);
        CHECK(ev.spectral_radius < 1.0);
        for (int degree : {4, 8, 12}) {
          const double err = oracle::norm2(ev.value - nc_rational_series(r, z, degree));
          CHECK(err <= nc_series_tail_bound(r, z, degree));
        }
        // Far enough out the two agree to rounding.
        if (d == 1) CHECK(oracle::norm2(ev.value - nc_rational_series(r, z, 50)) <= 1e-12);
      }
}

TEST_CASE("variable order in monomials") {
  // Coefficients only at ab: r(z) = z_a z_b, which differs from z_b z_a.
  NcRationalRealization r(fixtures::nilpotent());
  Matrix za(2, 2), zb(2, 2);
  za << 0.1, 0.2, 0.0, 0.1;
  zb << 0.1, 0.0, 0.3, 0.2;
  const Matrix got = nc_rational_eval(r, {za, zb}).value;
  // f = 1 on a b^k.
  Matrix expect = Matrix::Zero(2, 2);
  Matrix zbk = Matrix::Identity(2, 2);
  for (int k = 0; k < 200; ++k, zbk = zbk * zb) expect += za * zbk;
  CHECK((got - expect).norm() <= 1e-14);
  CHECK((got - zb * za).norm() > 1e-3);
}

TEST_CASE("divergence and shape errors") {
  NcRationalRealization r(fixtures::e1());
  try {
    nc_rational_eval(r, {Matrix::Constant(1, 1, 2.0)});
    FAIL("expected DivergenceError");
  } catch (const DivergenceError& e) {
    CHECK(e.spectral_radius() == doctest::Approx(1.0));
  }
  CHECK(std::isinf(nc_series_tail_bound(r, {Matrix::Constant(1, 1, 2.5)}, 3)));
  CHECK_THROWS_AS(nc_rational_eval(r, {}), InputError);
  NcRationalRealization two(fixtures::nilpotent());
  CHECK_THROWS_AS(nc_rational_eval(two, {Matrix::Zero(2, 2), Matrix::Zero(3, 3)}), InputError);
  CHECK_THROWS_AS(nc_rational_series(two, {Matrix::Zero(1, 1), Matrix::Zero(1, 1)}, -1), InputError);
  CHECK_THROWS_AS(nc_rational_series(two, {Matrix::Zero(1, 1), Matrix::Zero(1, 1)}, 40), InputError);
}

TEST_CASE("row contraction is reported") {
  NcRationalRealization r(fixtures::two_letter());
  Matrix z1 = 0.3 * Matrix::Identity(2, 2);
  Matrix z2 = 0.4 * Matrix::Identity(2, 2);
  NcEvaluation ev = nc_rational_eval(r, {z1, z2});
  CHECK(ev.row_norm == doctest::Approx(0.25));
}
