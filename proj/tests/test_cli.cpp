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

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "wfa/cli.hpp"
#include "wfa/document.hpp"
#include "wfa/hankel.hpp"

using namespace wfa;

namespace {

const std::string kDir = WFA_FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "wfa-approx");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Value after "# key: " in a report.
double report_value(const std::string& text, const std::string& key) {
  const std::string tag = "# " + key + ": ";
  const std::size_t pos = text.find(tag);
  REQUIRE(pos != std::string::npos);
  return std::stod(text.substr(pos + tag.size()));
}

}  // namespace

TEST_CASE("eval") {
  Run r = run({"eval", kDir + "/nilpotent.wfa", "ab"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  CHECK(run({"eval", kDir + "/nilpotent.wfa", "abbb"}).out == "1\n");
  CHECK(run({"eval", kDir + "/nilpotent.wfa", "ba"}).out == "0\n");
  // Empty word: alpha^T beta.
  CHECK(run({"eval", kDir + "/e2.wfa", ""}).out == "2\n");
  CHECK(run({"eval", kDir + "/e2.wfa"}).out == "2\n");
  Run e = run({"eval", kDir + "/two_letter.wfa", "aba"});
  CHECK(std::stod(e.out) == evaluate(fixtures::two_letter(), Word{0, 1, 0}));
}

TEST_CASE("eval errors") {
  Run r = run({"eval", kDir + "/nilpotent.wfa", "ac"});
  CHECK(r.code == 2);
  CHECK(r.err.find("unknown label 'c'") != std::string::npos);
  CHECK(run({"eval", kDir + "/missing.wfa", "a"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"eval"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("approximate aak") {
  SUBCASE("E1, k = 0") {
    Run r = run({"approximate", kDir + "/e1.wfa", "0"});
    CHECK(r.code == 0);
    CHECK(report_value(r.out, "error") == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(r.out.find("# certificate: attained sigma_0 within 1e-06") != std::string::npos);
  }
  SUBCASE("E2, k = 1") {
    Run r = run({"approximate", kDir + "/e2.wfa", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("# certificate: attained sigma_1 within 1e-06") != std::string::npos);
    WfaDocument doc = parse_document(std::string_view(r.out));
    CHECK(doc.wfa.num_states() == 1);
    // Re-evaluating the written automaton reproduces the reported block error.
    const double reported = report_value(r.out, "block_error");
    const Matrix diff = oracle::hankel(fixtures::e2(), 63, 63) - oracle::hankel(doc.wfa, 63, 63);
    CHECK(std::abs(oracle::norm2(diff) - reported) <= 1e-12);
    CHECK(reported == doctest::Approx(report_value(r.out, "error")).epsilon(1e-6));
  }
  SUBCASE("unsupported") {
    Run r = run({"approximate", kDir + "/nilpotent.wfa", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("open problem") != std::string::npos);
    CHECK(run({"approximate", kDir + "/e2.wfa", "2"}).code == 2);
    CHECK(run({"approximate", kDir + "/e2.wfa", "-1"}).code == 2);
    CHECK(run({"approximate", kDir + "/e2.wfa", "1", "--mode", "best"}).code == 2);
    CHECK(run({"approximate", kDir + "/e2.wfa", "1", "--tol", "0"}).code == 2);
  }
}

TEST_CASE("approximate svd") {
  Run r = run({"approximate", kDir + "/nilpotent.wfa", "1", "--mode", "svd", "--length", "3"});
  CHECK(r.code == 0);
  WfaDocument doc = parse_document(std::string_view(r.out));
  CHECK(doc.wfa.num_states() == 1);
  CHECK(doc.alphabet == std::vector<std::string>{"a", "b"});
  const Vector s = oracle::singular_values(oracle::hankel(fixtures::nilpotent(), 3, 3));
  CHECK(report_value(r.out, "error") == doctest::Approx(s(1)).epsilon(1e-12));
  const double reported = report_value(r.out, "block_error");
  const Matrix diff =
      oracle::hankel(fixtures::nilpotent(), 3, 3) - oracle::hankel(doc.wfa, 3, 3);
  CHECK(std::abs(oracle::norm2(diff) - reported) <= 1e-12);
  CHECK(reported >= s(1) - 1e-12);  // never better than the unstructured optimum
}

TEST_CASE("approximate writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "wfa_cli_test_out.wfa";
  Run r = run({"approximate", kDir + "/e2.wfa", "1", "-o", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("wfa 1") == std::string::npos);
  WfaDocument doc = read_document(path.string());
  CHECK(doc.name == "e2-k1");
  std::filesystem::remove(path);
}

TEST_CASE("verify suites") {
  SUBCASE("hankel-eq on a file") {
    Run r = run({"verify", kDir + "/two_letter.wfa", "--suite", "hankel-eq", "--no-timestamp"});
    CHECK(r.code == 0);
    CHECK(r.out.find("hankel-eq: pass, max discrepancy 0") != std::string::npos);
  }
  SUBCASE("hankel-eq on random automata") {
    CHECK(run({"verify", "--suite", "hankel-eq", "--no-timestamp"}).code == 0);
  }
  SUBCASE("free-group") {
    Run r = run({"verify", "--suite", "free-group", "--no-timestamp"});
    CHECK(r.code == 0);
    CHECK(r.out.find("4 > 2") != std::string::npos);
  }
  SUBCASE("nc-rational") {
    CHECK(run({"verify", "--suite", "nc-rational", "--no-timestamp"}).code == 0);
    CHECK(run({"verify", kDir + "/two_letter.wfa", "--suite", "nc-rational"}).code == 0);
  }
  SUBCASE("shifts") {
    // (a) holds with equality; (b) is checked on the whole two-sided space,
    // where the letters e_i all shift to e_eps, so the suite fails.
    Run r = run({"verify", "--suite", "shifts", "--degree", "4", "--no-timestamp"});
    CHECK(r.code == 1);
    CHECK(r.out.find("shifts (a) ||sum S_i y_i||^2 = sum ||y_i||^2: max deviation") !=
          std::string::npos);
    CHECK(r.out.find("4 > 2") != std::string::npos);
    CHECK(r.out.find("restricted to the positive part: max deviation") != std::string::npos);
  }
  SUBCASE("usage errors") {
    CHECK(run({"verify", "--suite", "nothing"}).code == 2);
    CHECK(run({"verify", "--degree", "1"}).code == 2);
    CHECK(run({"verify", kDir + "/missing.wfa", "--suite", "hankel-eq"}).code == 2);
  }
}

TEST_CASE("verify output is deterministic") {
  Run a = run({"verify", "--seed", "7", "--no-timestamp"});
  Run b = run({"verify", "--seed", "7", "--no-timestamp"});
  CHECK(a.out == b.out);
  CHECK(a.out.find("# time") == std::string::npos);
  Run c = run({"verify", "--suite", "free-group"});
  CHECK(c.out.rfind("# time ", 0) == 0);
  Run d = run({"verify", "--seed", "8", "--no-timestamp"});
  CHECK(a.out != d.out);
}
