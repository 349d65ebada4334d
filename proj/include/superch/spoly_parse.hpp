#pragma once

// Parser for SPoly expressions written the way identities are usually typed:
//   "1/4*(-S1^4 + S2^2)", "-2*(S1^4-4*S1*S3+3*S2^2)*(S1^3*S2-3*S1*S4+2*S2*S3)"
// Supports + - * ^, parentheses, integer literals and division by constants.

#include <cctype>
#include <string>
#include <string_view>

#include "superch/errors.hpp"
#include "superch/spoly.hpp"

namespace superch {

namespace detail {

class SPolyParser {
 public:
  SPolyParser(std::string_view text, int num_symbols) : s_(text), n_(num_symbols) {}

  SPoly parse() {
    SPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p.with_symbols(n_);
  }

 private:
  SPoly expr() {
    SPoly acc = term();
    while (true) {
      skip_ws();
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  SPoly term() {
    SPoly acc = unary();
    while (true) {
      skip_ws();
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        SPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = Rational(1 / d.leading_coeff()) * acc;
      } else {
        return acc;
      }
    }
  }

  SPoly unary() {
    skip_ws();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  SPoly power() {
    SPoly base = primary();
    skip_ws();
    if (accept('^')) {
      skip_ws();
      return pow(base, static_cast<unsigned>(integer()));
    }
    return base;
  }

  SPoly primary() {
    skip_ws();
    if (accept('(')) {
      SPoly inner = expr();
      skip_ws();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (accept('S')) {
      const unsigned long j = integer();
      if (j < 1 || j > static_cast<unsigned long>(n_)) fail("symbol S" + std::to_string(j) + " out of range");
      return SPoly::symbol(n_, static_cast<int>(j));
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return SPoly(n_, Rational(Integer(std::string(s_.substr(start, pos_ - start)), 10)));
    }
    fail("expected a term");
  }

  unsigned long integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline SPoly parse_spoly(std::string_view text, int num_symbols) {
  return detail::SPolyParser(text, num_symbols).parse();
}

}  // namespace superch
