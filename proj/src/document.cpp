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

#include "wfa/document.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>

#include "wfa/errors.hpp"

namespace wfa {

namespace {

class LineError {
 public:
  explicit LineError(int line) : line_(line) {}
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("line " + std::to_string(line_) + ": " + what);
  }

 private:
  int line_;
};

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

double parse_number(const std::string& tok, const LineError& err) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(tok, &used);
  } catch (const std::exception&) {
    err.fail("expected a number, got '" + tok + "'");
  }
  if (used != tok.size()) err.fail("expected a number, got '" + tok + "'");
  if (!std::isfinite(x)) err.fail("non-finite number '" + tok + "'");
  return x;
}

Vector parse_row(const std::vector<std::string>& toks, std::size_t first,
                 int expected, const LineError& err) {
  if (static_cast<int>(toks.size() - first) != expected)
    err.fail("expected " + std::to_string(expected) + " numbers, got " +
             std::to_string(toks.size() - first));
  Vector v(expected);
  for (int i = 0; i < expected; ++i)
    v(i) = parse_number(toks[first + static_cast<std::size_t>(i)], err);
  return v;
}

std::string rest_of_line(const std::string& line, const std::string& key) {
  std::size_t pos = line.find(key);
  pos = line.find_first_not_of(" \t", pos + key.size());
  if (pos == std::string::npos) return "";
  std::size_t end = line.find_last_not_of(" \t\r");
  return line.substr(pos, end - pos + 1);
}

}  // namespace

WfaDocument parse_document(std::istream& in) {
  std::string name, comment;
  std::optional<std::vector<std::string>> alphabet;
  std::optional<int> states;
  std::optional<Vector> alpha, beta;
  std::map<std::string, Matrix> transitions;
  bool header = false;

  std::string pending_label;  // transition block being read
  int pending_row = 0;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const LineError err(line_no);
    const std::vector<std::string> toks = split(line);
    if (toks.empty() || toks[0][0] == '#') continue;

    if (!pending_label.empty()) {
      transitions[pending_label].row(pending_row) =
          parse_row(toks, 0, *states, err).transpose();
      if (++pending_row == *states) pending_label.clear();
      continue;
    }

    const std::string& key = toks[0];
    if (!header) {
      if (key != "wfa" || toks.size() != 2 || toks[1] != "1")
        err.fail("expected header 'wfa 1'");
      header = true;
    } else if (key == "name") {
      name = rest_of_line(line, key);
    } else if (key == "comment") {
      comment = rest_of_line(line, key);
    } else if (key == "alphabet") {
      if (alphabet) err.fail("duplicate alphabet");
      if (toks.size() < 2) err.fail("empty alphabet");
      std::vector<std::string> labels(toks.begin() + 1, toks.end());
      for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (labels[i] == labels[j]) err.fail("duplicate label '" + labels[i] + "'");
      for (const std::string& l : labels)
        if (l.find(',') != std::string::npos) err.fail("label '" + l + "' contains a comma");
      alphabet = std::move(labels);
    } else if (key == "states") {
      if (states) err.fail("duplicate states");
      if (toks.size() != 2) err.fail("expected 'states <n>'");
      const double n = parse_number(toks[1], err);
      if (n < 1 || n != std::floor(n) || n > 100000) err.fail("invalid state count");
      states = static_cast<int>(n);
    } else if (key == "alpha" || key == "beta") {
      if (!states) err.fail(key + " before states");
      std::optional<Vector>& slot = key == "alpha" ? alpha : beta;
      if (slot) err.fail("duplicate " + key);
      slot = parse_row(toks, 1, *states, err);
    } else if (key == "transition") {
      if (!alphabet || !states) err.fail("transition before alphabet and states");
      if (toks.size() != 2) err.fail("expected 'transition <label>'");
      const std::string& label = toks[1];
      bool known = false;
      for (const std::string& l : *alphabet) known = known || l == label;
      if (!known) err.fail("unknown label '" + label + "'");
      if (transitions.count(label)) err.fail("duplicate transition '" + label + "'");
      transitions[label] = Matrix::Zero(*states, *states);
      pending_label = label;
      pending_row = 0;
    } else {
      err.fail("unknown keyword '" + key + "'");
    }
  }
  const LineError end(line_no);
  if (!header) end.fail("empty document");
  if (!pending_label.empty()) end.fail("transition '" + pending_label + "' is incomplete");
  if (!alphabet) end.fail("missing alphabet");
  if (!states) end.fail("missing states");
  if (!alpha) end.fail("missing alpha");
  if (!beta) end.fail("missing beta");
  std::vector<Matrix> mats;
  for (const std::string& l : *alphabet) {
    auto it = transitions.find(l);
    if (it == transitions.end()) end.fail("missing transition '" + l + "'");
    mats.push_back(it->second);
  }
  return WfaDocument{std::move(name), std::move(comment), std::move(*alphabet),
                     Wfa(std::move(*alpha), std::move(mats), std::move(*beta))};
}

WfaDocument parse_document(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_document(in);
}

WfaDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return parse_document(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_document(std::ostream& out, const WfaDocument& doc) {
  const Wfa& w = doc.wfa;
  if (static_cast<int>(doc.alphabet.size()) != w.alphabet_size())
    throw InputError("document has " + std::to_string(doc.alphabet.size()) +
                     " labels for an alphabet of size " +
                     std::to_string(w.alphabet_size()));
  auto row = [&](const auto& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) out << ' ' << format_double(v(i));
  };
  out << "wfa 1\n";
  if (!doc.name.empty()) out << "name " << doc.name << '\n';
  if (!doc.comment.empty()) out << "comment " << doc.comment << '\n';
  out << "alphabet";
  for (const std::string& l : doc.alphabet) out << ' ' << l;
  out << "\nstates " << w.num_states() << "\nalpha";
  row(w.alpha());
  out << "\nbeta";
  row(w.beta());
  out << '\n';
  for (int a = 0; a < w.alphabet_size(); ++a) {
    out << "transition " << doc.alphabet[static_cast<std::size_t>(a)] << '\n';
    const Matrix& m = w.transition(a);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      std::ostringstream line;
      for (Eigen::Index c = 0; c < m.cols(); ++c)
        line << (c ? " " : "") << format_double(m(r, c));
      out << line.str() << '\n';
    }
  }
}

std::string to_string(const WfaDocument& doc) {
  std::ostringstream out;
  write_document(out, doc);
  return out.str();
}

std::vector<std::string> default_labels(int alphabet_size) {
  std::vector<std::string> out;
  for (int a = 0; a < alphabet_size; ++a)
    out.push_back(alphabet_size <= 26 ? std::string(1, static_cast<char>('a' + a))
                                      : "s" + std::to_string(a));
  return out;
}

Word parse_word(const std::vector<std::string>& alphabet, std::string_view text) {
  auto lookup = [&](std::string_view label) {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
      if (alphabet[i] == label) return static_cast<Symbol>(i);
    throw InputError("unknown label '" + std::string(label) + "'");
  };
  bool single = true;
  for (const std::string& l : alphabet) single = single && l.size() == 1;

  Word out;
  if (single) {
    for (char c : text) out.push_back(lookup(std::string_view(&c, 1)));
    return out;
  }
  std::string token;
  for (char c : std::string(text) + " ") {
    if (c == ' ' || c == ',' || c == '\t') {
      if (!token.empty()) out.push_back(lookup(token));
      token.clear();
    } else {
      token.push_back(c);
    }
  }
  return out;
}

std::string format_word(const std::vector<std::string>& alphabet,
                        std::span<const Symbol> word) {
  bool single = true;
  for (const std::string& l : alphabet) single = single && l.size() == 1;
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!single && i > 0) out += ' ';
    out += alphabet.at(static_cast<std::size_t>(word[i]));
  }
  return out;
}

}  // namespace wfa
