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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wfa/wfa.hpp"

namespace wfa {

///
/// Text form of an automaton. Blank lines and lines starting with '#' are
/// ignored; everything else is a keyword followed by values:
///
///   wfa 1
///   name e2                    (optional, rest of line)
///   comment two decaying modes (optional, rest of line)
///   alphabet a b
///   states 2
///   alpha 1 1
///   beta 1 1
///   transition a
///   0.5 0
///   0 -0.3
///   transition b
///   ...
///
/// One transition block per label, each followed by `states` rows.
///
struct WfaDocument {
  std::string name;
  std::string comment;
  std::vector<std::string> alphabet;
  Wfa wfa;
};

// Throws InputError with the offending line number on malformed input.
WfaDocument parse_document(std::istream& in);
WfaDocument parse_document(std::string_view text);
WfaDocument read_document(const std::string& path);

// Numbers are written with 17 significant digits, so parsing the output
// gives back the same doubles.
void write_document(std::ostream& out, const WfaDocument& doc);
std::string to_string(const WfaDocument& doc);

// Labels a (single) automaton's alphabet as "a", "b", ... (or s0, s1, ...
// past 26 letters).
std::vector<std::string> default_labels(int alphabet_size);

///
/// Word from text. If every label is one character the text is read one
/// character at a time ("abba"); otherwise labels are separated by spaces
/// or commas ("s0,s1"). The empty string is the empty word. Throws
/// InputError on unknown labels.
///
Word parse_word(const std::vector<std::string>& alphabet, std::string_view text);
std::string format_word(const std::vector<std::string>& alphabet,
                        std::span<const Symbol> word);

// "%.17g".
std::string format_double(double x);

}  // namespace wfa
