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

#include "wfa/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "wfa/errors.hpp"

namespace wfa::poly {

int degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[static_cast<std::size_t>(i)] != 0.0) return i;
  return -1;
}

Poly trim(Poly p, double rel_tol) {
  double scale = 0.0;
  for (double c : p) scale = std::max(scale, std::abs(c));
  while (!p.empty() && std::abs(p.back()) <= rel_tol * scale) p.pop_back();
  return p;
}

Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

DivMod divmod(const Poly& num, const Poly& den) {
  const int dd = degree(den);
  if (dd < 0) throw NumericError("polynomial division by zero");
  Poly rem = trim(num);
  const int dn = degree(rem);
  if (dn < dd) return {{}, rem};
  Poly quot(static_cast<std::size_t>(dn - dd + 1), 0.0);
  const double lead = den[static_cast<std::size_t>(dd)];
  for (int i = dn; i >= dd; --i) {
    const double c = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -=
          c * den[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {std::move(quot), trim(std::move(rem))};
}

Complex evaluate(const Poly& p, Complex z) {
  Complex acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<Complex> roots(const Poly& p) {
  const int deg = degree(p);
  if (deg < 0) throw NumericError("roots of the zero polynomial");
  if (deg == 0) return {};
  const double lead = p[static_cast<std::size_t>(deg)];
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i)
    companion(i, deg - 1) = -p[static_cast<std::size_t>(i)] / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw NumericError("companion eigenvalue computation did not converge");
  std::vector<Complex> out;
  for (Eigen::Index i = 0; i < deg; ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

Poly from_roots(const std::vector<Complex>& rs) {
  std::vector<Complex> acc{1.0};
  for (const Complex& r : rs) {
    std::vector<Complex> next(acc.size() + 1, 0.0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] -= r * acc[i];
    }
    acc = std::move(next);
  }
  Poly out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = acc[i].real();
  return out;
}

Poly negative_part_numerator(const Poly& num, const Poly& inner,
                             const Poly& outer) {
  const int p = degree(inner);
  const int q = degree(outer);
  if (p < 0 || q < 0) throw NumericError("zero denominator factor");
  if (p == 0) return {};
  // Polynomial part of num / (inner * outer) has only nonnegative powers.
  const Poly reduced = divmod(num, multiply(inner, outer)).remainder;

  // Solve r * outer + s * inner = reduced with deg r < p, deg s < q.
  // Unknowns: r_0..r_{p-1}, s_0..s_{q-1}; equations: coefficients 0..p+q-1.
  const int size = p + q;
  Eigen::MatrixXd sylvester = Eigen::MatrixXd::Zero(size, size);
  for (int j = 0; j < p; ++j)
    for (int i = 0; i <= q; ++i)
      sylvester(i + j, j) = outer[static_cast<std::size_t>(i)];
  for (int j = 0; j < q; ++j)
    for (int i = 0; i <= p; ++i)
      sylvester(i + j, p + j) = inner[static_cast<std::size_t>(i)];
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size);
  for (std::size_t i = 0; i < reduced.size(); ++i)
    rhs(static_cast<Eigen::Index>(i)) = reduced[i];

  Eigen::FullPivLU<Eigen::MatrixXd> lu(sylvester);
  if (!lu.isInvertible())
    throw NumericError("inner and outer denominator factors share a root");
  const Eigen::VectorXd sol = lu.solve(rhs);
  return Poly(sol.data(), sol.data() + p);
}

std::vector<double> laurent_tail(const Poly& r, const Poly& inner, int m) {
  const int p = degree(inner);
  if (p < 0 || inner[static_cast<std::size_t>(p)] != 1.0)
    throw InputError("laurent_tail needs a monic denominator");
  if (degree(r) >= p)
    throw InputError("laurent_tail needs a strictly proper fraction");
  std::vector<double> c(static_cast<std::size_t>(std::max(m, 0)), 0.0);
  auto coef = [&](int j) {
    return j >= 0 && j < static_cast<int>(r.size())
               ? r[static_cast<std::size_t>(j)]
               : 0.0;
  };
  for (int k = 0; k < m; ++k) {
    double v = coef(p - 1 - k);
    for (int j = 1; j <= std::min(p, k); ++j)
      v -= inner[static_cast<std::size_t>(p - j)] *
           c[static_cast<std::size_t>(k - j)];
    c[static_cast<std::size_t>(k)] = v;
  }
  return c;
}

}  // namespace wfa::poly
