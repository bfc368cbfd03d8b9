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

#include "wfa/nc_rational.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "wfa/errors.hpp"
#include "wfa/word_index.hpp"

namespace wfa {

namespace {

Matrix kronecker_sum(const NcRationalRealization& r, const std::vector<Matrix>& z) {
  if (static_cast<int>(z.size()) != r.num_variables())
    throw InputError("substitution has " + std::to_string(z.size()) +
                     " matrices for " + std::to_string(r.num_variables()) +
                     " variables");
  if (z.empty()) throw InputError("substitution needs at least one variable");
  const Eigen::Index m = z[0].rows();
  for (const Matrix& zj : z)
    if (zj.rows() != m || zj.cols() != m)
      throw InputError("substitution matrices must all be square of one size");
  Matrix k = Matrix::Zero(r.size() * m, r.size() * m);
  for (int j = 0; j < r.num_variables(); ++j) k += kronecker(r.a(j), z[j]);
  return k;
}

}  // namespace

NcRationalRealization::NcRationalRealization(Vector c, std::vector<Matrix> a,
                                             Vector b)
    : c_(std::move(c)), a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty()) throw InputError("realization needs at least one variable");
  if (b_.size() != c_.size())
    throw InputError("c and b have different sizes");
  for (const Matrix& m : a_)
    if (m.rows() != c_.size() || m.cols() != c_.size())
      throw InputError("realization matrices must be " +
                       std::to_string(c_.size()) + "x" + std::to_string(c_.size()));
}

NcRationalRealization::NcRationalRealization(const Wfa& wfa)
    : NcRationalRealization(wfa.alpha(), wfa.transitions(), wfa.beta()) {}

const Matrix& NcRationalRealization::a(int j) const {
  if (j < 0 || j >= num_variables())
    throw InputError("variable index " + std::to_string(j) + " out of range");
  return a_[static_cast<std::size_t>(j)];
}

double NcRationalRealization::coefficient(std::span<const Symbol> word) const {
  check_word(word, num_variables());
  RowVector row = c_.transpose();
  for (Symbol s : word) row = row * a_[static_cast<std::size_t>(s)];
  return row.dot(b_);
}

NcEvaluation nc_rational_eval(const NcRationalRealization& r,
                              const std::vector<Matrix>& z) {
  const Matrix k = kronecker_sum(r, z);
  const Eigen::Index m = z[0].rows();
  const double rho = spectral_radius(k);
  Matrix zz = Matrix::Zero(m, m);
  for (const Matrix& zj : z) zz += zj * zj.transpose();
  const double row_norm = spectral_norm(zz);
  if (!(rho < 1.0))
    throw DivergenceError("spectral radius of sum_j A_j (x) z_j is " +
                              std::to_string(rho) + ", series diverges",
                          rho);

  const Matrix id = Matrix::Identity(m, m);
  const Matrix rhs = kronecker(r.b(), id);
  const Matrix system = Matrix::Identity(k.rows(), k.cols()) - k;
  Eigen::PartialPivLU<Matrix> lu(system);
  const Matrix x = lu.solve(rhs);
  // (c^T (x) 1_m) x, contracted with the same dot as c^T b so that z = 0
  // reproduces c^T b bit for bit.
  Matrix value(m, m);
  Vector slice(r.size());
  for (Eigen::Index q = 0; q < m; ++q)
    for (Eigen::Index p = 0; p < m; ++p) {
      for (Eigen::Index i = 0; i < r.size(); ++i) slice(i) = x(i * m + p, q);
      value(p, q) = r.c().dot(slice);
    }
  return NcEvaluation{std::move(value), rho, row_norm};
}

Matrix nc_rational_series(const NcRationalRealization& r,
                          const std::vector<Matrix>& z, int degree) {
  kronecker_sum(r, z);  // shape checks
  if (degree < 0) throw InputError("series degree must be >= 0");
  const int d = r.num_variables();
  const Eigen::Index m = z[0].rows();
  const WordIndex words(d, degree);
  if (words.size() > kMaxSeriesWords)
    throw InputError("series of degree " + std::to_string(degree) + " has " +
                     std::to_string(words.size()) + " words, limit is " +
                     std::to_string(kMaxSeriesWords));

  // c^T A_w and z_w for every word, each from its longest proper prefix.
  std::vector<RowVector> rows(words.size());
  std::vector<Matrix> monomials(words.size());
  rows[0] = r.c().transpose();
  monomials[0] = Matrix::Identity(m, m);
  Matrix sum = r.c().dot(r.b()) * monomials[0];
  for (std::size_t w = 1; w < words.size(); ++w) {
    const std::size_t parent = (w - 1) / static_cast<std::size_t>(d);
    const auto last = static_cast<std::size_t>((w - 1) % static_cast<std::size_t>(d));
    rows[w] = rows[parent] * r.a(static_cast<int>(last));
    monomials[w] = monomials[parent] * z[last];
    sum += rows[w].dot(r.b()) * monomials[w];
  }
  return sum;
}

double nc_series_tail_bound(const NcRationalRealization& r,
                            const std::vector<Matrix>& z, int degree) {
  const double q = spectral_norm(kronecker_sum(r, z));
  if (!(q < 1.0)) return std::numeric_limits<double>::infinity();
  return r.c().norm() * r.b().norm() * std::pow(q, degree + 1) / (1.0 - q);
}

std::vector<Matrix> random_substitution(const NcRationalRealization& r, int m,
                                        double norm, std::uint64_t seed) {
  if (m < 1) throw InputError("substitution size must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Matrix> z;
  for (int j = 0; j < r.num_variables(); ++j) {
    Matrix zj(m, m);
    for (Eigen::Index i = 0; i < zj.size(); ++i) zj.data()[i] = normal(rng);
    z.push_back(std::move(zj));
  }
  const double q = spectral_norm(kronecker_sum(r, z));
  if (q > 0.0)
    for (Matrix& zj : z) zj *= norm / q;
  return z;
}

}  // namespace wfa
