/*
   Copyright 2026 The bifurcata Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Recursive-descent parser for polynomials in x, y.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('-' | '+') unary | power
//   power  := atom ('^' INT)?
//   atom   := INT ('/' INT)? | 'x' | 'y' | '(' expr ')'

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bifurcata/bipoly.hpp"
#include "bifurcata/rational.hpp"

namespace bifurcata {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& msg)
      : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + msg), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace parser_detail {

constexpr int kMaxExponent = 256;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  BiPoly<Rational> run() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty input");
    BiPoly<Rational> p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPoly<Rational> expr() {
    BiPoly<Rational> acc = term();
    while (true) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  BiPoly<Rational> term() {
    BiPoly<Rational> acc = unary();
    while (eat('*')) acc = acc * unary();
    return acc;
  }

  BiPoly<Rational> unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  BiPoly<Rational> power() {
    BiPoly<Rational> base = atom();
    if (eat('^')) {
      skip();
      const std::size_t at = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError(at, "exponent must be a nonnegative integer literal");
      Integer e = integer();
      if (e > kMaxExponent) throw ParseError(at, "exponent too large");
      return pow(base, static_cast<int>(e.get_si()));
    }
    return base;
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  BiPoly<Rational> atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q(integer());
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          throw ParseError(pos_, "expected denominator");
        const std::size_t at = pos_;
        Integer den = integer();
        if (den == 0) throw ParseError(at, "zero denominator");
        q /= Rational(den);
      }
      return BiPoly<Rational>(q);
    }
    if (c == '(') {
      ++pos_;
      BiPoly<Rational> inner = expr();
      if (!eat(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view id = s_.substr(start, pos_ - start);
      if (id == "x") return BiPoly<Rational>::x();
      if (id == "y") return BiPoly<Rational>::y();
      throw ParseError(start, "unknown identifier '" + std::string(id) + "'");
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace parser_detail

/// Parse and expand a polynomial in x, y with rational coefficients.
inline BiPoly<Rational> parse_polynomial(std::string_view text) {
  return parser_detail::Parser(text).run();
}

}  // namespace bifurcata
