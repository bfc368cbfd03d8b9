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

#include "wfa/cli.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "wfa/aak.hpp"
#include "wfa/document.hpp"
#include "wfa/errors.hpp"
#include "wfa/hankel.hpp"
#include "wfa/nc_rational.hpp"
#include "wfa/verify.hpp"

namespace wfa::cli {

namespace {

constexpr double kShiftTol = 1e-12;
constexpr int kSeriesDegree = 8;
constexpr int kRandomAutomata = 20;
constexpr int kSubstitutions = 20;

std::string num(double x) { return format_double(x); }

// Short form for user-supplied parameters.
std::string param(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

// Runs `body`, mapping library errors to exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DegenerateInputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

// (L, L) block small enough to decompose quickly.
int default_length(const Wfa& w) {
  if (w.alphabet_size() == 1) return 63;
  int len = std::max(1, w.num_states());
  while (len > 1 && WordIndex(w.alphabet_size(), len).size() > 2000) --len;
  return len;
}

std::string sigma_line(const Vector& s) {
  std::string out = "# sigma:";
  for (Eigen::Index i = 0; i < s.size(); ++i) out += " " + num(s(i));
  return out;
}

// ---- verify suites -------------------------------------------------------

std::vector<std::pair<std::string, Wfa>> suite_automata(const VerifyOptions& o,
                                                        int min_letters) {
  std::vector<std::pair<std::string, Wfa>> out;
  if (o.file) {
    WfaDocument doc = read_document(*o.file);
    out.emplace_back(doc.name.empty() ? *o.file : doc.name, doc.wfa);
    return out;
  }
  for (int i = 0; i < kRandomAutomata; ++i) {
    const int d = std::max(min_letters, 2 + i % 2);
    const int n = 1 + i % 5;
    const std::uint64_t seed = o.seed * 1000 + static_cast<std::uint64_t>(i);
    out.emplace_back("random d=" + std::to_string(d) + " n=" + std::to_string(n) +
                         " seed=" + std::to_string(seed),
                     random_stable_wfa(d, n, seed, 0.9));
  }
  return out;
}

bool suite_hankel_eq(const VerifyOptions& o, std::ostream& out) {
  bool ok = true;
  double worst = 0.0;
  for (const auto& [label, w] : suite_automata(o, 1)) {
    const HankelEquationReport rep = verify_hankel_equation(w, o.degree);
    out << "hankel-eq " << label << ": max discrepancy " << num(rep.max_discrepancy)
        << " over " << rep.columns_checked << " columns\n";
    worst = std::max(worst, rep.max_discrepancy);
    ok = ok && rep.max_discrepancy == 0.0;
  }
  out << "hankel-eq: " << (ok ? "pass" : "FAIL") << ", max discrepancy " << num(worst)
      << '\n';
  return ok;
}

bool suite_shifts(const VerifyOptions& o, std::ostream& out) {
  int letters = o.letters;
  if (o.file) letters = read_document(*o.file).wfa.alphabet_size();
  const ShiftInequalityReport r =
      verify_shift_inequalities(letters, o.degree, o.trials, o.seed);
  const bool a_ok = r.max_deviation_a <= kShiftTol;
  const bool b_ok = r.max_deviation_b <= kShiftTol;
  const bool bp_ok = r.max_deviation_b_positive <= kShiftTol;
  out << "shifts: d=" << letters << " D=" << o.degree << " trials=" << o.trials << '\n';
  out << "shifts (a) ||sum S_i y_i||^2 = sum ||y_i||^2: max deviation "
      << num(r.max_deviation_a) << (a_ok ? " pass" : " FAIL") << '\n';
  out << "shifts (b) ||sum Rb_i h_i||^2 = sum ||h_i||^2 on the two-sided space: "
         "max deviation "
      << num(r.max_deviation_b) << ", max excess " << num(r.max_excess_b)
      << (b_ok ? " pass" : " FAIL") << '\n';
  out << "shifts (b) with h_i = e_i in the negative part: " << num(r.letters_lhs)
      << (r.letters_lhs > r.letters_rhs ? " > " : " <= ") << num(r.letters_rhs) << '\n';
  out << "shifts (b) restricted to the positive part: max deviation "
      << num(r.max_deviation_b_positive) << (bp_ok ? " pass" : " FAIL") << '\n';
  const bool ok = a_ok && b_ok;
  out << "shifts: " << (ok ? "pass" : "FAIL") << '\n';
  return ok;
}

bool suite_free_group(const VerifyOptions&, std::ostream& out) {
  const FreeGroupReport r = free_group_counterexample(2);
  out << "free-group: ||Rb_1 h_1 + Rb_2 h_2||^2 = " << num(r.lhs)
      << (r.violated ? " > " : " <= ") << num(r.rhs)
      << " = ||h_1||^2 + ||h_2||^2 for h_i = e_{g_i^-1}\n";
  out << "free-group: monoid contrast h_i = e_eps: " << num(r.monoid_lhs) << " = "
      << num(r.monoid_rhs) << '\n';
  out << "free-group: h_1 = 0: " << num(r.degenerate_lhs) << " <= "
      << num(r.degenerate_rhs) << '\n';
  out << "free-group: " << (r.violated ? "pass, 4 > 2" : "FAIL, no violation") << '\n';
  return r.violated && r.lhs == 4.0 && r.rhs == 2.0;
}

bool suite_nc_rational(const VerifyOptions& o, std::ostream& out) {
  std::optional<Wfa> fixed;
  if (o.file) fixed = read_document(*o.file).wfa;
  bool ok = true;
  double worst_ratio = 0.0;
  for (int t = 0; t < kSubstitutions; ++t) {
    const std::uint64_t seed = o.seed * 1000 + static_cast<std::uint64_t>(t);
    const Wfa w = fixed ? *fixed : random_stable_wfa(2, 3, seed, 0.9);
    const NcRationalRealization r(w);
    const int m = 1 + t % 2;
    const std::vector<Matrix> z = random_substitution(r, m, 0.5, seed);
    const NcEvaluation ev = nc_rational_eval(r, z);
    const double diff = spectral_norm(ev.value - nc_rational_series(r, z, kSeriesDegree));
    const double bound = nc_series_tail_bound(r, z, kSeriesDegree);
    const bool pass = diff <= bound;
    ok = ok && pass;
    if (bound > 0.0) worst_ratio = std::max(worst_ratio, diff / bound);
    out << "nc-rational trial " << t << " m=" << m << ": |closed - series| "
        << num(diff) << " tail bound " << num(bound) << (pass ? "" : " FAIL") << '\n';

    std::vector<Matrix> zero(z.size(), Matrix::Zero(1, 1));
    const double at_zero = nc_rational_eval(r, zero).value(0, 0);
    if (at_zero != r.c().dot(r.b())) {
      ok = false;
      out << "nc-rational trial " << t << ": r(0) = " << num(at_zero)
          << " != c^T b = " << num(r.c().dot(r.b())) << " FAIL\n";
    }
  }
  out << "nc-rational: " << (ok ? "pass" : "FAIL") << ", max error / bound "
      << num(worst_ratio) << '\n';
  return ok;
}

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

int cmd_eval(const std::string& file, const std::string& word, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const WfaDocument doc = read_document(file);
    const Word w = parse_word(doc.alphabet, word);
    out << num(evaluate(doc.wfa, w)) << '\n';
    return kPass;
  });
}

int cmd_approximate(const ApproximateOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const WfaDocument doc = read_document(o.file);
    const Wfa& w = doc.wfa;
    if (o.k < 0 || o.k >= w.num_states())
      throw InputError("k must satisfy 0 <= k < " + std::to_string(w.num_states()) +
                       ", got " + std::to_string(o.k));
    if (o.length < -1 || o.length == 0) throw InputError("--length must be >= 1");
    if (!(o.tol > 0.0)) throw InputError("--tol must be > 0");
    const int length = o.length > 0 ? o.length : default_length(w);

    std::ostringstream report;
    Wfa result = Wfa::zero(w.alphabet_size());
    bool ok = true;
    if (o.mode == "aak") {
      if (w.alphabet_size() != 1)
        throw InputError(
            "mode 'aak' needs a one-letter automaton; constructing the optimal "
            "approximation over several letters is an open problem, use --mode svd");
      const RationalSymbol check(w);  // spectral radius < 1
      AakOptions opts;
      const Vector sigma = hankel_singular_values(w);
      opts.certificate_tol = o.tol * sigma(0);
      const AakApproximation aak = aak_approximate(w, o.k, opts);
      result = aak.approximant();
      report << "# mode: aak\n" << sigma_line(aak.singular_values()) << '\n';
      report << "# error: " << num(aak.error()) << '\n';
      report << "# achieved: " << num(aak.achieved_norm()) << " on a " << aak.truncation()
             << "x" << aak.truncation() << " block\n";
      if (aak.certified()) {
        report << "# certificate: attained sigma_" << o.k << " within " << param(o.tol)
               << '\n';
      } else {
        report << "# certificate: NOT attained, |achieved - sigma_" << o.k << "| = "
               << num(std::abs(aak.achieved_norm() - aak.error())) << '\n';
        ok = false;
      }
      for (const std::string& warning : aak.warnings())
        report << "# warning: " << warning << '\n';
    } else if (o.mode == "svd") {
      const HankelBlock h = build_hankel(w, length, length);
      const Truncation t = svd_truncate(h, o.k);
      report << "# mode: svd\n" << sigma_line(singular_values(h)) << '\n';
      report << "# error: " << num(t.error) << " (sigma_" << o.k << " of the (" << length
             << ", " << length << ") block)\n";
      if (o.k > 0) result = spectral_recover(h, o.k, w);
    } else {
      throw InputError("unknown mode '" + o.mode + "', expected aak or svd");
    }

    const Matrix diff = build_hankel(w, length, length).entries() -
                        build_hankel(result, length, length).entries();
    report << "# block_error: " << num(spectral_norm(diff)) << " (lengths " << length
           << ", " << length << ")\n";

    WfaDocument approx{doc.name.empty() ? "" : doc.name + "-k" + std::to_string(o.k),
                       "rank " + std::to_string(o.k) + " " + o.mode + " approximation",
                       doc.alphabet, result};
    out << report.str();
    if (o.output.empty()) {
      write_document(out, approx);
    } else {
      std::ofstream file(o.output);
      if (!file) throw InputError("cannot write '" + o.output + "'");
      write_document(file, approx);
    }
    return ok ? kPass : kFailure;
  });
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (o.degree < 2) throw InputError("--degree must be >= 2");
    if (o.trials < 1) throw InputError("--trials must be >= 1");
    if (o.letters < 1) throw InputError("--letters must be >= 1");
    const std::vector<std::string> all = {"hankel-eq", "shifts", "free-group",
                                          "nc-rational"};
    std::vector<std::string> suites;
    if (o.suite == "all")
      suites = all;
    else if (std::find(all.begin(), all.end(), o.suite) != all.end())
      suites = {o.suite};
    else
      throw InputError("unknown suite '" + o.suite + "'");

    if (o.timestamp) out << "# time " << utc_now() << '\n';
    bool ok = true;
    for (const std::string& s : suites) {
      bool pass = false;
      if (s == "hankel-eq") pass = suite_hankel_eq(o, out);
      if (s == "shifts") pass = suite_shifts(o, out);
      if (s == "free-group") pass = suite_free_group(o, out);
      if (s == "nc-rational") pass = suite_nc_rational(o, out);
      ok = ok && pass;
    }
    if (suites.size() > 1) out << "all: " << (ok ? "pass" : "FAIL") << '\n';
    return ok ? kPass : kFailure;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted automata: evaluation, Hankel approximation, Fock-space checks",
               "wfa-approx"};
  app.require_subcommand(1);

  std::string eval_file, eval_word;
  CLI::App* eval = app.add_subcommand("eval", "Print f(word)");
  eval->add_option("file", eval_file, "Automaton document")->required();
  eval->add_option("word", eval_word, "Word; empty for the empty word");

  ApproximateOptions ap;
  CLI::App* approx = app.add_subcommand("approximate", "Rank-k approximation");
  approx->add_option("file", ap.file, "Automaton document")->required();
  approx->add_option("k", ap.k, "Target number of states")->required();
  approx->add_option("--mode", ap.mode, "aak (one letter, optimal) or svd")
      ->check(CLI::IsMember({"aak", "svd"}));
  approx->add_option("--length", ap.length, "Evaluation block word length");
  approx->add_option("--tol", ap.tol, "Certificate tolerance relative to sigma_0");
  approx->add_option("--output,-o", ap.output, "Write the automaton here");

  VerifyOptions vo;
  std::string verify_file;
  bool no_timestamp = false;
  CLI::App* verify = app.add_subcommand("verify", "Fock-space verification suites");
  verify->add_option("file", verify_file, "Automaton document (random fixtures otherwise)");
  verify->add_option("--suite", vo.suite, "hankel-eq, shifts, free-group, nc-rational, all")
      ->check(CLI::IsMember({"hankel-eq", "shifts", "free-group", "nc-rational", "all"}));
  verify->add_option("--degree,-D", vo.degree, "Degree bound of the truncated space");
  verify->add_option("--letters", vo.letters, "Alphabet size for the shifts suite");
  verify->add_option("--trials", vo.trials, "Random trials for the shifts suite");
  verify->add_option("--seed", vo.seed, "Random seed");
  verify->add_flag("--no-timestamp", no_timestamp, "Omit the time line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  if (eval->parsed()) return cmd_eval(eval_file, eval_word, out, err);
  if (approx->parsed()) return cmd_approximate(ap, out, err);
  if (!verify_file.empty()) vo.file = verify_file;
  vo.timestamp = !no_timestamp;
  return cmd_verify(vo, out, err);
}

}  // namespace wfa::cli
