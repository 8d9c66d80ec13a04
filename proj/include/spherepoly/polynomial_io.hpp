#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "spherepoly/polynomial.hpp"

namespace spherepoly {

/// Syntax error in polynomial text; `position` is the 0-based offset of the
/// offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

// Recursive-descent parser for the grammar
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := coeff | coeff '*' powers | powers
//   coeff  := integer | integer '/' positive-integer
//   powers := power ('*' power)*
//   power  := 'x' index ['^' exponent]
// Whitespace is ignored everywhere.
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial out;
    skip_ws();
    bool negative = consume_sign();
    out += parse_term(negative);
    skip_ws();
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      skip_ws();
      out += parse_term(c == '-');
      skip_ws();
    }
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume_sign() {
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      const bool neg = text_[pos_] == '-';
      ++pos_;
      skip_ws();
      return neg;
    }
    return false;
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string parse_digits() {
    if (!at_digit()) throw ParseError("expected a number", pos_);
    std::string digits;
    while (at_digit()) digits.push_back(text_[pos_++]);
    return digits;
  }

  std::uint64_t parse_bounded(const char* what, std::uint64_t limit) {
    const std::size_t start = pos_;
    const std::string digits = parse_digits();
    std::uint64_t value = 0;
    try {
      if (digits.size() > 20) throw std::out_of_range(digits);
      value = std::stoull(digits);
    } catch (const std::out_of_range&) {
      throw ParseError(std::string(what) + " out of range", start);
    }
    if (value < 1 || value > limit) throw ParseError(std::string(what) + " out of range", start);
    return value;
  }

  Monomial parse_power(Monomial base) {
    ++pos_;  // consume 'x'
    skip_ws();
    const std::size_t at = pos_;
    const auto index = static_cast<VarIndex>(parse_bounded("variable index", exponent_limit()));
    skip_ws();
    Exponent exp = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      exp = static_cast<Exponent>(parse_bounded("exponent", exponent_limit()));
    }
    const std::uint64_t total = std::uint64_t(base.exponent_of(index)) + exp;
    if (total > exponent_limit()) throw ParseError("exponent out of range", at);
    return base.with_exponent(index, static_cast<Exponent>(total));
  }

  Polynomial parse_term(bool negative) {
    skip_ws();
    Rational coeff(1);
    bool have_coeff = false;
    if (at_digit()) {
      const mpz_class num(parse_digits());
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        const mpz_class den(parse_digits());
        if (den == 0) throw ParseError("denominator must be positive", at);
        coeff = Rational(num, den);
      } else {
        coeff = Rational(num);
      }
      have_coeff = true;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != 'x')
          throw ParseError("expected a variable after '*'", pos_);
      }
    }
    Monomial m;
    if (pos_ < text_.size() && text_[pos_] == 'x') {
      m = parse_power(m);
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != 'x')
          throw ParseError("expected a variable after '*'", pos_);
        m = parse_power(m);
        skip_ws();
      }
    } else if (!have_coeff) {
      throw ParseError("expected a term", pos_);
    }
    if (negative) coeff = -coeff;
    return Polynomial::monomial(m, coeff);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::string format_monomial(const Monomial& m) {
  std::string out;
  for (const auto& [var, exp] : m.factors()) {
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(var);
    if (exp != 1) {
      out += '^';
      out += std::to_string(exp);
    }
  }
  return out;
}

}  // namespace detail

/// Parses the ASCII polynomial grammar; throws ParseError with a position on
/// malformed input.
inline Polynomial parse_poly(std::string_view text) {
  return detail::PolyParser(text).parse();
}

/// Canonical text: graded-lex descending terms, signs folded into '+'/'-'
/// separators, unit coefficients omitted.  parse_poly(format_poly(p)) == p.
inline std::string format_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool first = out.empty();
    const bool negative = c.sign() < 0;
    if (!first)
      out += negative ? " - " : " + ";
    else if (negative)
      out += '-';
    const Rational mag = abs(c);
    if (m.is_constant()) {
      out += mag.str();
    } else {
      if (mag != Rational(1)) {
        out += mag.str();
        out += '*';
      }
      out += detail::format_monomial(m);
    }
  }
  return out;
}

}  // namespace spherepoly
