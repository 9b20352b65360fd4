#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

#include "soft7/torsion.hpp"

namespace soft7 {

namespace {

const char* const kAppendixText =
#include "appendix_table.inc"
    ;

[[noreturn]] void malformed(int line_no, const std::string& why) {
  throw std::invalid_argument("appendix line " + std::to_string(line_no) + ": " + why);
}

// "pN" -> N
int read_coord(std::istringstream& in, int line_no) {
  char p = 0;
  int n = -1;
  if (!(in >> p) || p != 'p' || !(in >> n) || n < 0 || n > 7) malformed(line_no, "expected pN");
  return n;
}

AppendixTerm read_term(std::istringstream& in, int coefficient, int line_no) {
  AppendixTerm t;
  t.coefficient = coefficient;
  t.a = read_coord(in, line_no);
  char op = 0;
  if (!(in >> op)) malformed(line_no, "truncated term");
  if (op == '^') {
    int power = 0;
    if (!(in >> power) || power != 2) malformed(line_no, "only squares are allowed");
    t.b = t.a;
  } else if (op == '*') {
    t.b = read_coord(in, line_no);
  } else {
    malformed(line_no, "expected ^2 or *pN");
  }
  return t;
}

}  // namespace

std::vector<AppendixEntry> parse_appendix(const std::string& text) {
  std::vector<AppendixEntry> entries;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream in(line);
    AppendixEntry e;
    std::string sign;
    char colon = 0;
    if (!(in >> sign >> e.printed.i >> e.printed.j >> e.printed.k >> colon) || colon != ':')
      malformed(line_no, "expected '<sign> i j k :'");
    if (sign == "+")
      e.sign = Sign::Plus;
    else if (sign == "-")
      e.sign = Sign::Minus;
    else
      malformed(line_no, "sign must be + or -");
    if (!canonicalize(e.printed.i, e.printed.j, e.printed.k)) malformed(line_no, "degenerate triple");

    char open = 0;
    if (!(in >> e.factor >> open) || open != '(') malformed(line_no, "expected '<factor> ('");

    int coefficient = 1;
    bool expect_term = true;
    char c = 0;
    while (in >> c) {
      if (c == ')') break;
      if (c == '+' || c == '-') {
        coefficient = (c == '+') ? 1 : -1;
        expect_term = true;
        continue;
      }
      if (!expect_term) malformed(line_no, "missing operator between terms");
      in.putback(c);
      e.terms.push_back(read_term(in, coefficient, line_no));
      coefficient = 1;
      expect_term = false;
    }
    if (c != ')') malformed(line_no, "missing ')'");
    if (e.terms.empty()) malformed(line_no, "empty polynomial");
    entries.push_back(std::move(e));
  }
  return entries;
}

const std::vector<AppendixEntry>& appendix_entries() {
  static const std::vector<AppendixEntry> entries = [] {
    auto parsed = parse_appendix(kAppendixText);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      std::array<int, 35> seen{};
      for (const auto& e : parsed)
        if (e.sign == s) ++seen[static_cast<std::size_t>(canonicalize(e.printed.i, e.printed.j, e.printed.k)->index)];
      for (int n : seen)
        if (n != 1) throw std::logic_error("appendix table must list every triple exactly once per sign");
    }
    return parsed;
  }();
  return entries;
}

}  // namespace soft7
