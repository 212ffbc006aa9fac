#pragma once

#include <cctype>
#include <cstddef>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ncspan/errors.hpp"
#include "ncspan/matrix.hpp"
#include "ncspan/polynomial.hpp"
#include "ncspan/rational.hpp"

// Surface syntax for polynomials:
//
//   expr     := term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := ('+' | '-') factor | atom ('^' uint)?
//   atom     := rational | var | '(' expr ')' | '[' expr ',' expr ']'
//   var      := 'X' uint            (uint >= 1)
//   rational := uint ('/' uint)?
//
// Whitespace between tokens is ignored. There is no implicit multiplication.

namespace ncspan {

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  NcPolynomial parse_all() {
    NcPolynomial f = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    auto [line, col] = location(at);
    throw SyntaxError(what, line, col);
  }
  std::pair<std::size_t, std::size_t> location(std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < at && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }
  void expect(char ch) {
    if (!accept(ch)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + ch + "' before end of input");
      fail(std::string("expected '") + ch + "'");
    }
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an unsigned integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned long small_uint(std::size_t limit, const char* what) {
    std::size_t at = (skip_ws(), pos_);
    std::string s = digits();
    if (s.size() > 9 || std::stoul(s) > limit) fail_at(std::string(what) + " is too large", at);
    return std::stoul(s);
  }

  NcPolynomial expr() {
    NcPolynomial acc = term();
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  NcPolynomial term() {
    NcPolynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  NcPolynomial factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    NcPolynomial base = atom();
    if (accept('^')) {
      if (peek() == '-') throw ExponentNegative(location(pos_).first, location(pos_).second);
      auto k = small_uint(std::numeric_limits<unsigned>::max(), "exponent");
      return pow(base, static_cast<unsigned>(k));
    }
    return base;
  }

  NcPolynomial atom() {
    char ch = peek();
    if (ch == '\0') fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num = digits();
      std::string den = "1";
      if (accept('/')) {
        std::size_t at = (skip_ws(), pos_);
        den = digits();
        if (mpz_class(den) == 0) fail_at("zero denominator", at);
      }
      Coefficient c{mpz_class(num), mpz_class(den)};
      c.canonicalize();
      return NcPolynomial(c);
    }
    if (ch == 'X') {
      std::size_t at = pos_;
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected a variable index after 'X'");
      auto idx = small_uint(std::numeric_limits<VarIndex>::max() - 1, "variable index");
      if (idx == 0) fail_at("variable indices start at 1", at);
      return NcPolynomial::variable(static_cast<VarIndex>(idx));
    }
    if (accept('(')) {
      NcPolynomial inner = expr();
      expect(')');
      return inner;
    }
    if (accept('[')) {
      NcPolynomial a = expr();
      expect(',');
      NcPolynomial b = expr();
      expect(']');
      return commutator(a, b);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::string word_text(const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size();) {
    std::size_t run = 1;
    while (k + run < w.size() && w[k + run] == w[k]) ++run;
    if (!out.empty()) out += '*';
    out += 'X' + std::to_string(w[k]);
    if (run > 1) out += '^' + std::to_string(run);
    k += run;
  }
  return out;
}

}  // namespace detail

inline NcPolynomial parse(std::string_view text) { return detail::PolyParser(text).parse_all(); }

/// Canonical text in graded-lex term order; parse(print(f)) == f.
inline std::string print(const NcPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    const bool negative = c < 0;
    const Coefficient mag = negative ? Coefficient(-c) : c;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    if (w.empty()) out += mag.get_str();
    else if (mag == 1) out += detail::word_text(w);
    else out += mag.get_str() + "*" + detail::word_text(w);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const NcPolynomial& f) { return os << print(f); }

/// Rows separated by ';', entries by ','; e.g. "1,0;0,-1".
inline MatrixQ parse_matrix(std::string_view text) {
  std::vector<std::vector<Coefficient>> rows;
  std::size_t row_start = 0;
  while (true) {
    std::size_t row_end = text.find(';', row_start);
    std::string_view row = text.substr(row_start, row_end == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : row_end - row_start);
    std::vector<Coefficient> entries;
    std::size_t cell_start = 0;
    while (true) {
      std::size_t cell_end = row.find(',', cell_start);
      std::string_view cell = row.substr(cell_start, cell_end == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : cell_end - cell_start);
      std::size_t lead = 0;
      while (lead < cell.size() && std::isspace(static_cast<unsigned char>(cell[lead]))) ++lead;
      std::size_t trail = cell.size();
      while (trail > lead && std::isspace(static_cast<unsigned char>(cell[trail - 1]))) --trail;
      auto value = parse_rational(cell.substr(lead, trail - lead));
      if (!value) throw SyntaxError("bad matrix entry", 1, row_start + cell_start + lead + 1);
      entries.push_back(*value);
      if (cell_end == std::string_view::npos) break;
      cell_start = cell_end + 1;
    }
    rows.push_back(std::move(entries));
    if (row_end == std::string_view::npos) break;
    row_start = row_end + 1;
  }
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw SyntaxError("matrix literal is not square", 1, 1);
  return MatrixQ::from_rows(rows);
}

inline std::string print_matrix(const MatrixQ& m) {
  std::string out;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    if (r) out += ';';
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c) out += ',';
      out += m(r, c).get_str();
    }
  }
  return out;
}

/// One polynomial per line; '#' starts a comment; blank lines are skipped.
/// Syntax errors report the corpus line number.
inline std::vector<NcPolynomial> parse_corpus(std::string_view text) {
  std::vector<NcPolynomial> out;
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char ch : line) blank = blank && std::isspace(static_cast<unsigned char>(ch));
    if (!blank) {
      try {
        out.push_back(parse(line));
      } catch (const SyntaxError& e) {
        throw SyntaxError(e.reason, line_no, e.column);
      }
    }
    start = end + 1;
  }
  return out;
}

}  // namespace ncspan
