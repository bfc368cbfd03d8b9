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

// Acceptance run: one line per criterion, nonzero exit if any fails.
// Usage: acceptance [criterion-number ...]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "wfa/aak.hpp"
#include "wfa/fock.hpp"
#include "wfa/hankel.hpp"
#include "wfa/nc_rational.hpp"
#include "wfa/verify.hpp"

using namespace wfa;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string g(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Random automata for the rank and recovery criteria.
std::vector<Wfa> rank_fixtures() {
  std::vector<Wfa> out;
  for (int i = 0; i < 20; ++i) {
    const int d = 1 + i % 3;
    const int n = 1 + (i / 3) % 5;
    out.push_back(random_stable_wfa(d, n, 7000 + static_cast<std::uint64_t>(i), 0.9));
  }
  return out;
}

// Ten random one-letter automata, approximated at every k < n.
struct AakCase {
  std::string label;
  Wfa wfa;
  int k;
  AakApproximation result;
};

struct AakCases {
  std::vector<AakCase> cases;
  double seconds;
};

const AakCases& aak_cases() {
  static const AakCases all = [] {
    const auto t0 = Clock::now();
    std::vector<AakCase> out;
    for (int i = 0; i < 10; ++i) {
      const int n = 1 + i % 5;
      const std::uint64_t seed = 8000 + static_cast<std::uint64_t>(i);
      Wfa w = random_stable_wfa(1, n, seed, 0.8);
      for (int k = 0; k < n; ++k)
        out.push_back({"seed " + std::to_string(seed) + " k=" + std::to_string(k), w, k,
                       aak_approximate(w, k)});
    }
    return AakCases{std::move(out), seconds_since(t0)};
  }();
  return all;
}

Outcome fliess_rank() {
  const auto t0 = Clock::now();
  int ok = 0;
  std::string bad;
  for (const Wfa& w : rank_fixtures()) {
    const int n = w.num_states();
    const int r = hankel_rank(build_hankel(w, n, n), 1e-9);
    if (r == n)
      ++ok;
    else
      bad += " [d=" + std::to_string(w.alphabet_size()) + " n=" + std::to_string(n) +
             " rank " + std::to_string(r) + "]";
  }
  const double t = seconds_since(t0);
  return {ok == 20 && t < 5.0,
          std::to_string(ok) + "/20 ranks equal n, " + g(t) + " s" + bad};
}

Outcome spectral_recovery() {
  double worst = 0.0;
  std::size_t words = 0;
  for (const Wfa& w : rank_fixtures()) {
    const int n = w.num_states();
    const Wfa r = spectral_recover(build_hankel(w, n, n), n, w);
    for (const Word& x : oracle::words_up_to(w.alphabet_size(), 2 * n)) {
      worst = std::max(worst, std::abs(evaluate(r, x) - oracle::evaluate(w, x)));
      ++words;
    }
  }
  return {worst <= 1e-8,
          "max |f_hat - f| = " + g(worst) + " over " + std::to_string(words) + " words"};
}

Outcome aak_optimality() {
  const AakApproximation e1 = aak_approximate(fixtures::e1(), 0);
  const double e1_err = std::abs(e1.error() - 4.0 / 3.0);
  bool ok = e1_err <= 1e-9;

  const AakCases& all = aak_cases();
  int hankel_ok = 0, rank_ok = 0, norm_ok = 0;
  double worst_norm = 0.0;
  std::string bad;
  for (const AakCase& c : all.cases) {
    const HankelBlock gb = c.result.approximant_block(64);
    const Matrix h = oracle::one_letter_hankel(c.wfa, 64);
    const double sigma0 = c.result.singular_values()(0);
    const double sigma_k = hankel_singular_values(c.wfa)(c.k);  // Gramians
    const bool is_hankel = check_hankel_property(gb, 0.0).holds;
    const int rank = hankel_rank(gb);
    const double dev = std::abs(oracle::norm2(h - gb.entries()) - sigma_k);
    hankel_ok += is_hankel;
    rank_ok += rank == c.k;
    norm_ok += dev <= 1e-6 * sigma0;
    worst_norm = std::max(worst_norm, dev / sigma0);
    if (!is_hankel || rank != c.k || dev > 1e-6 * sigma0)
      bad += " [" + c.label + ": rank " + std::to_string(rank) + ", dev " + g(dev / sigma0) + "]";
  }
  const int total = static_cast<int>(all.cases.size());
  ok = ok && hankel_ok == total && rank_ok == total && norm_ok == total && all.seconds < 30.0;
  return {ok, "E1 |err - 4/3| = " + g(e1_err) + "; " + std::to_string(total) +
                  " cases: Hankel " + std::to_string(hankel_ok) + ", rank " +
                  std::to_string(rank_ok) + ", max |||H-G|| - sigma_k|/sigma_0 " +
                  g(worst_norm) + "; construction " + g(all.seconds) + " s" + bad};
}

Outcome optimality_certificate() {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> normal;
  double worst_beat = -1e300;  // max over trials of sigma_k(H) - ||H - M||
  bool monotone = true;
  double worst_aak = -1e300;
  for (const AakCase& c : aak_cases().cases) {
    const Matrix h = oracle::one_letter_hankel(c.wfa, 64);
    Eigen::JacobiSVD<Matrix> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Vector s = svd.singularValues();
    const double sigma0 = s(0);
    const double tol = 1e-10 * sigma0;
    for (int t = 0; t < 100; ++t) {
      // Truncated SVD plus a random perturbation that keeps rank k.
      Matrix core = Matrix::Zero(c.k, c.k);
      for (int i = 0; i < c.k; ++i) core(i, i) = s(i);
      Matrix noise(c.k, c.k);
      for (auto& x : noise.reshaped()) x = normal(rng);
      const double scale = std::pow(10.0, -1.0 - (t % 8)) * sigma0;
      const Matrix m = svd.matrixU().leftCols(c.k) * (core + scale * noise) *
                       svd.matrixV().leftCols(c.k).transpose();
      const Matrix far = oracle::random_rank_k(64, 64, c.k, rng) * (sigma0 / 8.0);
      for (const Matrix& mm : {m, far})
        worst_beat = std::max(worst_beat, (s(c.k) - oracle::norm2(h - mm)) / sigma0);
    }
    worst_aak = std::max(
        worst_aak, (s(c.k) - oracle::norm2(h - c.result.approximant_block(64).entries())) / sigma0);
    double prev = -1.0;
    const double sigma_k = c.result.error();
    for (int n : {16, 32, 64}) {
      const double sk = oracle::singular_values(oracle::one_letter_hankel(c.wfa, n))(c.k);
      if (sk < prev - tol || sk > sigma_k + tol) monotone = false;
      prev = sk;
    }
  }
  const bool ok = worst_beat <= 1e-10 && worst_aak <= 1e-10 && monotone;
  return {ok, "max (sigma_k - ||H-M||)/sigma_0 over random rank-k M = " + g(worst_beat) +
                  ", for the AAK approximant " + g(worst_aak) +
                  ", sigma_k(H_N) monotone in N=16,32,64 and <= sigma_k: " +
                  (monotone ? "yes" : "no")};
}

Outcome hankel_equation() {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int d = 2 + i % 2;
    Wfa w = random_stable_wfa(d, 1 + i % 5, 9000 + static_cast<std::uint64_t>(i), 0.9);
    worst = std::max(worst, verify_hankel_equation(w, 5).max_discrepancy);
  }
  // Worked two-letter example: H S_a e_ba and R*_a H e_ba both equal the column
  // (f(aba), f(aaba), f(baba), ...), and likewise for b.
  const Wfa w = fixtures::two_letter();
  const int degree = 5;
  const FockMatrix h = nc_hankel_matrix(w, degree, degree);
  const FockBasis& basis = h.domain();
  bool columns = true;
  std::size_t compared = 0;
  for (Symbol i = 0; i < 2; ++i) {
    const Word ba = {1, 0};
    const FockVector e_ba = FockVector::basis_vector(basis, ba);
    const FockVector lhs = h.apply(left_shift(i, e_ba));
    const FockVector rhs = right_shift_adj(i, h.apply(e_ba));
    for (std::size_t r = 0; r < basis.words().offset(degree); ++r) {
      Word x = basis.word(r);
      x.push_back(i);
      x.push_back(1);
      x.push_back(0);
      const double f = evaluate(w, x);
      const auto ri = static_cast<Eigen::Index>(r);
      columns = columns && lhs.coefficients()(ri) == f && rhs.coefficients()(ri) == f;
      ++compared;
    }
  }
  return {worst == 0.0 && columns,
          "max discrepancy over 20 automata " + g(worst) + "; worked-example columns " +
              (columns ? "equal" : "DIFFER") + " on " + std::to_string(compared) + " entries"};
}

Outcome shift_inequalities() {
  const ShiftInequalityReport r = verify_shift_inequalities(3, 4, 100, 2024);
  const bool a_ok = r.max_deviation_a <= 1e-12;
  const bool b_ok = r.max_deviation_b <= 1e-12;
  return {a_ok && b_ok,
          "(a) max |lhs - rhs| " + g(r.max_deviation_a) + "; (b) max |lhs - rhs| " +
              g(r.max_deviation_b) + ", max lhs - rhs " + g(r.max_excess_b) +
              " (h_i = e_i in the negative part: " + g(r.letters_lhs) + " vs " +
              g(r.letters_rhs) + "); (b) on the positive part only " +
              g(r.max_deviation_b_positive)};
}

Outcome free_group() {
  const FreeGroupReport r = free_group_counterexample(2);
  const bool ok = r.lhs == 4.0 && r.rhs == 2.0 && r.violated;
  return {ok, g(r.lhs) + (r.violated ? " > " : " <= ") + g(r.rhs)};
}

Outcome nc_rational() {
  double worst_ratio = 0.0;
  bool ok = true;
  bool zero_exact = true;
  for (int t = 0; t < 20; ++t) {
    const int d = 2 + t % 2;
    const int m = 1 + t % 2;
    const std::uint64_t seed = 9500 + static_cast<std::uint64_t>(t);
    const NcRationalRealization r(random_stable_wfa(d, 3, seed, 0.9));
    const std::vector<Matrix> z = random_substitution(r, m, 0.5, seed);
    const Matrix closed = nc_rational_eval(r, z).value;
    const double diff = oracle::norm2(closed - nc_rational_series(r, z, 8));
    const double bound = nc_series_tail_bound(r, z, 8);
    ok = ok && diff <= bound;
    worst_ratio = std::max(worst_ratio, diff / bound);
    std::vector<Matrix> zero(static_cast<std::size_t>(d), Matrix::Zero(1, 1));
    zero_exact = zero_exact && nc_rational_eval(r, zero).value(0, 0) == r.c().dot(r.b());
  }
  return {ok && zero_exact, "max error / tail bound " + g(worst_ratio) + "; r(0) == c^T b: " +
                                (zero_exact ? "yes" : "no")};
}

Outcome flipped_symbol() {
  std::vector<Wfa> all = {fixtures::e1(), fixtures::e2(), fixtures::nilpotent(),
                          fixtures::two_letter()};
  for (const Wfa& w : rank_fixtures()) all.push_back(w);
  bool column = true, one_letter = true;
  int letters1 = 0;
  for (const Wfa& w : all) {
    const int degree = w.alphabet_size() == 1 ? 30 : 5;
    const FlippedSymbol s = flipped_symbol_coefficients(w, degree);
    column = column && s.phi.coefficients() == nc_hankel_matrix(w, degree, 0).entries().col(0);
    if (w.alphabet_size() == 1) {
      ++letters1;
      one_letter = one_letter &&
                   s.phi.coefficients() == symbol_coefficients(RationalSymbol(w), degree + 1);
    }
  }
  return {column && one_letter,
          std::to_string(all.size()) + " automata: first column " + (column ? "equal" : "DIFFERS") +
              "; " + std::to_string(letters1) + " one-letter: symbol coefficients " +
              (one_letter ? "equal" : "DIFFER")};
}

Outcome error_modulus() {
  double worst = 0.0;
  int cases = 0;
  for (const AakCase& c : aak_cases().cases) {
    if (c.k == 0) continue;
    const ModulusRange r = error_function_modulus(c.result, 4096);
    worst = std::max(worst, std::abs(r.max - c.result.error()) / c.result.error());
    ++cases;
  }
  return {worst <= 1e-4, std::to_string(cases) + " cases, max |max|e| - sigma_k| / sigma_k = " +
                             g(worst)};
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "Fliess rank", fliess_rank},
      {2, "spectral recovery", spectral_recovery},
      {3, "one-letter AAK optimality", aak_optimality},
      {4, "optimality certificate", optimality_certificate},
      {5, "NC Hankel equation", hankel_equation},
      {6, "shift inequalities", shift_inequalities},
      {7, "free-group counterexample", free_group},
      {8, "NC rational evaluation", nc_rational},
      {9, "flipped symbol", flipped_symbol},
      {10, "error-function modulus", error_modulus},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.count(c.number)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%-4s criterion %2d  %-26s %s\n", o.pass ? "PASS" : "FAIL", c.number, c.name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
