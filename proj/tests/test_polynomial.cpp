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

#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "wfa/errors.hpp"
#include "wfa/polynomial.hpp"

using namespace wfa::poly;

TEST_CASE("polynomial arithmetic") {
  CHECK(multiply({1, 1}, {-1, 1}) == Poly{-1, 0, 1});
  CHECK(add({1, 2}, {0, 0, 3}) == Poly{1, 2, 3});
  CHECK(degree({}) == -1);
  CHECK(degree({0, 0}) == -1);
  CHECK(degree({1, 2, 0}) == 1);
  CHECK(trim({1, 2, 1e-20}, 1e-15) == Poly{1, 2});

  // (z^3 - 1) = (z - 1)(z^2 + z + 1)
  const DivMod q = divmod({-1, 0, 0, 1}, {-1, 1});
  CHECK(q.quotient == Poly{1, 1, 1});
  CHECK(q.remainder.empty());
  const DivMod r = divmod({2, 0, 1}, {1, 1});  // z^2 + 2 = (z - 1)(z + 1) + 3
  CHECK(r.quotient == Poly{-1, 1});
  CHECK(r.remainder == Poly{3});
  CHECK_THROWS_AS(divmod({1}, {}), wfa::NumericError);
}

TEST_CASE("roots and from_roots") {
  auto rs = roots({2, -3, 1});  // (z - 1)(z - 2)
  std::sort(rs.begin(), rs.end(),
            [](Complex a, Complex b) { return a.real() < b.real(); });
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].real() == doctest::Approx(1.0));
  CHECK(rs[1].real() == doctest::Approx(2.0));

  const Poly p = from_roots({Complex(0.5, 0.2), Complex(0.5, -0.2), -0.3});
  REQUIRE(p.size() == 4);
  CHECK(p[3] == 1.0);
  for (Complex r : {Complex(0.5, 0.2), Complex(-0.3, 0)})
    CHECK(std::abs(evaluate(p, r)) <= 1e-15);
  CHECK(roots({5}).empty());
}

TEST_CASE("laurent_tail: long division of a proper fraction") {
  // 1 / (z - 0.5) = sum 0.5^m z^{-m-1}
  const auto c = laurent_tail({1}, {-0.5, 1}, 6);
  for (int m = 0; m < 6; ++m) CHECK(c[m] == doctest::Approx(std::pow(0.5, m)));
  CHECK_THROWS_AS(laurent_tail({1, 1}, {-0.5, 1}, 3), wfa::InputError);
  CHECK_THROWS_AS(laurent_tail({1}, {-0.5, 2}, 3), wfa::InputError);
}

TEST_CASE("negative_part_numerator matches contour-integral coefficients") {
  struct Case {
    Poly num;
    std::vector<Complex> inner_roots;
    std::vector<Complex> outer_roots;
    double outer_lead;
  };
  const std::vector<Case> cases{
      {{1}, {0.5}, {2.0}, 1.0},
      {{0.3, -1.2, 0.7, 2.0}, {Complex(0.4, 0.3), Complex(0.4, -0.3), -0.6},
       {1.7, -3.0}, -0.4},
      {{1, 2, 3, 4, 5, 6}, {0.2, -0.1}, {Complex(1.1, 1), Complex(1.1, -1)},
       2.5},
  };
  for (const Case& c : cases) {
    const Poly inner = from_roots(c.inner_roots);
    Poly outer = from_roots(c.outer_roots);
    for (double& x : outer) x *= c.outer_lead;
    const Poly r = negative_part_numerator(c.num, inner, outer);
    const auto tail = laurent_tail(r, inner, 12);
    const Poly den = multiply(inner, outer);
    const auto expected = oracle::negative_coefficients(
        [&](Complex z) { return evaluate(c.num, z) / evaluate(den, z); }, 12);
    for (int m = 0; m < 12; ++m)
      CHECK(tail[m] == doctest::Approx(expected[m]).epsilon(1e-9).scale(1.0));
  }
}
