#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "moplab/core/param_scalar.hpp"

namespace moplab {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Recursive-descent reader for rational expressions in the formal parameters:
// integers, symbols, I (imaginary unit), + - * / ^, parentheses and
// juxtaposition of parenthesized factors, e.g. "(a+b)(a+c)/(a+b+c+d)".
class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  ParamScalar parse() {
    ParamScalar r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at " + std::to_string(pos_) + " in '" + std::string(s_) + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParamScalar expr() {
    ParamScalar r;
    bool first = true;
    for (;;) {
      int sign = 1;
      if (eat('+')) sign = 1;
      else if (eat('-')) sign = -1;
      else if (!first) break;
      ParamScalar t = term();
      r = sign > 0 ? r + t : r - t;
      first = false;
      skip();
      if (!(peek('+') || peek('-'))) break;
    }
    return r;
  }

  ParamScalar term() {
    ParamScalar r = power();
    for (;;) {
      if (eat('*')) r = r * power();
      else if (eat('/')) r = r / power();
      else if (peek('(')) r = r * power();
      else break;
    }
    return r;
  }

  ParamScalar power() {
    if (eat('-')) return -power();
    ParamScalar b = primary();
    if (eat('^')) {
      bool neg = eat('-');
      skip();
      size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (st == pos_) fail("exponent expected");
      int k = std::stoi(std::string(s_.substr(st, pos_ - st)));
      b = b.pow(neg ? -k : k);
    }
    return b;
  }

  ParamScalar primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ParamScalar r = expr();
      if (!eat(')')) fail("')' expected");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ParamScalar(Rational::parse(s_.substr(st, pos_ - st)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t st = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(st, pos_ - st));
      if (name == "I") return ParamScalar::i();
      return ParamScalar::symbol(name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

inline ParamScalar parse_scalar(std::string_view s) { return ExprParser(s).parse(); }

}  // namespace moplab
