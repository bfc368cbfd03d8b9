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
#include <iosfwd>
#include <optional>
#include <string>

namespace wfa::cli {

enum ExitCode : int { kPass = 0, kFailure = 1, kUsage = 2 };

// Prints f(word) with 17 significant digits.
int cmd_eval(const std::string& file, const std::string& word, std::ostream& out,
             std::ostream& err);

struct ApproximateOptions {
  std::string file;
  int k = 0;
  std::string mode = "aak";  // "aak" or "svd"
  int length = -1;           // evaluation block is (length, length); -1 picks one
  double tol = 1e-6;         // aak certificate tolerance, relative to sigma_0
  std::string output;        // empty: write the document to `out`
};

// Writes the k-state automaton and a report. Report lines start with '#',
// so the whole output parses as a document when no --output is given.
int cmd_approximate(const ApproximateOptions& options, std::ostream& out,
                    std::ostream& err);

struct VerifyOptions {
  std::string suite = "all";  // hankel-eq, shifts, free-group, nc-rational, all
  int degree = 5;
  int letters = 2;            // alphabet size of the random shifts suite
  int trials = 100;
  std::uint64_t seed = 1;
  bool timestamp = true;
  std::optional<std::string> file;
};

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

// Full command line, argv[0] included.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wfa::cli
