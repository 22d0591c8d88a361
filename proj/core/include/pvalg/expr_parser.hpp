#pragma once

// Small recursive-descent parser shared by every textual front end
// (polynomials, words in T, Smith and quotient words).
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'] factor | '/' number)*   juxtaposition is a product
//   factor  := primary ['^' ['-'] digits]
//   primary := number | atom | '(' expr ')' | '[' expr ',' expr ']'
//   number  := digits ['/' digits]
//
// Atoms are recognised by a caller-supplied matcher so each algebra can
// decide how identifiers are split ("XY" is two atoms for words in T).

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "pvalg/errors.hpp"
#include "pvalg/rational.hpp"

namespace pvalg {

template <class T>
struct ExprGrammar {
  /// Returns the atom value and the number of characters consumed.
  std::function<std::optional<std::pair<T, std::size_t>>(std::string_view)> atom;
  std::function<T(const Rational&)> scalar;
  std::function<T(const T&, const T&)> mul;
  std::function<T(const T&, int)> pow;
  bool allow_brackets = false;
};

namespace detail {

template <class T>
class ExprParser {
 public:
  ExprParser(std::string_view text, const ExprGrammar<T>& g) : text_(text), g_(g) {}

  T parse_all() {
    T value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    if (c == '(' || (c == '[' && g_.allow_brackets) || std::isdigit(static_cast<unsigned char>(c)))
      return true;
    return g_.atom(text_.substr(pos_)).has_value();
  }

  T expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    T value = term();
    if (negate) value = -value;
    while (true) {
      if (accept('+')) value = value + term();
      else if (accept('-')) value = value - term();
      else break;
    }
    return value;
  }

  T term() {
    T value = factor();
    while (true) {
      if (accept('*')) {
        value = g_.mul(value, factor());
      } else if (accept('/')) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("expected a number after '/'");
        const Rational q = number();
        if (q.is_zero()) fail("division by zero");
        value = g_.mul(value, g_.scalar(Rational(1) / q));
      } else if (starts_factor()) {
        value = g_.mul(value, factor());
      } else {
        break;
      }
    }
    return value;
  }

  T factor() {
    T base = primary();
    if (accept('^')) {
      bool neg = accept('-');
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      base = g_.pow(base, neg ? -e : e);
    }
    return base;
  }

  T primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      T value = expr();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (g_.allow_brackets && accept('[')) {
      T a = expr();
      if (!accept(',')) fail("expected ','");
      T b = expr();
      if (!accept(']')) fail("expected ']'");
      return g_.mul(a, b) - g_.mul(b, a);
    }
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) return g_.scalar(number());
    if (auto m = g_.atom(text_.substr(pos_))) {
      pos_ += m->second;
      return std::move(m->first);
    }
    fail("unknown symbol");
  }

  Rational number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      digits();
    }
    return Rational::parse(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  const ExprGrammar<T>& g_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class T>
T parse_expression(std::string_view text, const ExprGrammar<T>& grammar) {
  return detail::ExprParser<T>(text, grammar).parse_all();
}

/// Length of the identifier ([A-Za-z_][A-Za-z0-9_]*) at the start of `s`, 0 if none.
inline std::size_t identifier_length(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return 0;
  std::size_t i = 1;
  while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
  return i;
}

}  // namespace pvalg
