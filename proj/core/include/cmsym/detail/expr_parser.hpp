#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "cmsym/errors.hpp"
#include "cmsym/poly.hpp"

namespace cmsym::detail {

// Recursive-descent parser for  expr := term {(+|-) term},
// term := unary {(*|/) unary}, unary := -unary | power,
// power := atom [^ integer], atom := integer | name | ( expr ).
// `Value` needs Value(Rational), +, -, *, unary -.
template <class Value, class AtomFn, class DivFn>
class ExprParser {
 public:
  ExprParser(std::string_view text, AtomFn atom, DivFn div) : text_(text), atom_(atom), div_(div) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value v = term();
    while (true) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    while (true) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        v = div_(v, unary());
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Value power() {
    Value base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      Value r(Rational(1));
      for (unsigned i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Value atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Value(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return atom_(std::string(text_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  AtomFn atom_;
  DivFn div_;
};

template <class Value, class AtomFn, class DivFn>
Value parse_expression(std::string_view text, AtomFn atom, DivFn div) {
  return ExprParser<Value, AtomFn, DivFn>(text, atom, div).parse();
}

}  // namespace cmsym::detail
