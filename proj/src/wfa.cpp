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

#include "wfa/wfa.hpp"

#include <cmath>
#include <random>
#include <string>

#include "wfa/errors.hpp"

namespace wfa {

Wfa::Wfa(Vector alpha, std::vector<Matrix> transitions, Vector beta)
    : alpha_(std::move(alpha)),
      transitions_(std::move(transitions)),
      beta_(std::move(beta)) {
  const auto n = alpha_.size();
  if (n < 1) throw InputError("automaton needs at least one state");
  if (transitions_.empty())
    throw InputError("automaton needs at least one symbol");
  if (beta_.size() != n)
    throw InputError("alpha has length " + std::to_string(n) +
                     " but beta has length " + std::to_string(beta_.size()));
  for (std::size_t a = 0; a < transitions_.size(); ++a) {
    if (transitions_[a].rows() != n || transitions_[a].cols() != n)
      throw InputError("transition matrix " + std::to_string(a) + " is " +
                       std::to_string(transitions_[a].rows()) + "x" +
                       std::to_string(transitions_[a].cols()) + ", expected " +
                       std::to_string(n) + "x" + std::to_string(n));
  }
}

const Matrix& Wfa::transition(Symbol a) const {
  if (a < 0 || a >= alphabet_size())
    throw InputError("symbol " + std::to_string(a) + " out of range");
  return transitions_[static_cast<std::size_t>(a)];
}

Wfa Wfa::zero(int alphabet_size) {
  if (alphabet_size < 1) throw InputError("alphabet size must be positive");
  return Wfa(Vector::Zero(1),
             std::vector<Matrix>(static_cast<std::size_t>(alphabet_size),
                                 Matrix::Zero(1, 1)),
             Vector::Zero(1));
}

void check_word(std::span<const Symbol> word, int alphabet_size) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 0 || word[i] >= alphabet_size)
      throw InputError("symbol " + std::to_string(word[i]) + " at position " +
                       std::to_string(i) + " is outside the alphabet of size " +
                       std::to_string(alphabet_size));
  }
}

RowVector forward_weights(const Wfa& wfa, std::span<const Symbol> word) {
  RowVector row = wfa.alpha().transpose();
  for (Symbol a : word) {
    RowVector next = row * wfa.transitions()[static_cast<std::size_t>(a)];
    row = std::move(next);
  }
  return row;
}

double evaluate(const Wfa& wfa, std::span<const Symbol> word) {
  check_word(word, wfa.alphabet_size());
  return forward_weights(wfa, word).dot(wfa.beta().transpose());
}

double spectral_radius(const Matrix& m) {
  if (m.rows() != m.cols())
    throw InputError("spectral radius of a non-square matrix");
  if (m.size() == 0) return 0.0;
  Eigen::EigenSolver<Matrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw NumericError("eigenvalue computation did not converge");
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

Matrix kronecker(const Matrix& m, const Matrix& n) {
  Matrix out(m.rows() * n.rows(), m.cols() * n.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out.block(i * n.rows(), j * n.cols(), n.rows(), n.cols()) = m(i, j) * n;
  return out;
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Wfa random_stable_wfa(int alphabet_size, int num_states, std::uint64_t seed,
                      double radius_bound) {
  if (!(radius_bound > 0.0 && radius_bound < 1.0))
    throw InputError("radius bound must lie in (0, 1)");
  if (alphabet_size < 1 || num_states < 1)
    throw InputError("alphabet size and number of states must be positive");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto sample = [&](Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = normal(rng);
    return m;
  };

  Vector alpha = sample(num_states, 1);
  Vector beta = sample(num_states, 1);
  std::vector<Matrix> transitions;
  for (int a = 0; a < alphabet_size; ++a)
    transitions.push_back(sample(num_states, num_states));

  // Both rescalings land slightly inside the bound so it survives rounding.
  if (alphabet_size == 1) {
    const double rho = spectral_radius(transitions[0]);
    if (rho > 0.0) transitions[0] *= radius_bound / rho * (1.0 - 1e-12);
  } else {
    double sum_sq = 0.0;
    for (const auto& a : transitions) sum_sq += std::pow(spectral_norm(a), 2);
    if (sum_sq > 0.0) {
      const double scale = std::sqrt(radius_bound / sum_sq) * (1.0 - 1e-12);
      for (auto& a : transitions) a *= scale;
    }
  }
  return Wfa(std::move(alpha), std::move(transitions), std::move(beta));
}

}  // namespace wfa
