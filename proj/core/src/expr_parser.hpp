#pragma once

// Small recursive-descent parser for ring expressions such as
// "X^4 - X^2 - (t+1)Z^2" or "(Z^2+1)/(Z-1)". Evaluation is delegated to a
// Ring policy:
//
//   using value_type = ...;
//   value_type from_int(std::int64_t) const;
//   std::optional<value_type> variable(char name) const;
//   value_type add/sub/mul/div(const value_type&, const value_type&) const;
//   value_type neg(const value_type&) const;
//   value_type pow(const value_type&, std::uint64_t) const;
//
// Single letters are variables, so "tZ" is t*Z. Juxtaposition multiplies.
// U+2212 MINUS SIGN is accepted as '-'.

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "aslab/error.hpp"

namespace aslab::detail {

template <class Ring>
class ExprParser {
 public:
  using T = typename Ring::value_type;

  ExprParser(const Ring& ring, std::string_view text) : ring_(ring), text_(normalize(text)) {}

  T parse() {
    T v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  static std::string normalize(std::string_view in) {
    std::string out;
    out.reserve(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (i + 2 < in.size() && static_cast<unsigned char>(in[i]) == 0xE2 &&
          static_cast<unsigned char>(in[i + 1]) == 0x88 && static_cast<unsigned char>(in[i + 2]) == 0x92) {
        out.push_back('-');
        i += 2;
      } else {
        out.push_back(in[i]);
      }
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  T expr() {
    const char c = peek();
    if (c == '-' || c == '+') ++pos_;
    T acc = c == '-' ? ring_.neg(term()) : term();
    for (;;) {
      const char op = peek();
      if (op == '+') {
        ++pos_;
        acc = ring_.add(acc, term());
      } else if (op == '-') {
        ++pos_;
        acc = ring_.sub(acc, term());
      } else {
        return acc;
      }
    }
  }

  T term() {
    T acc = factor();
    for (;;) {
      const char op = peek();
      if (op == '*') {
        ++pos_;
        acc = ring_.mul(acc, factor());
      } else if (op == '/') {
        ++pos_;
        acc = ring_.div(acc, factor());
      } else if (starts_primary()) {
        acc = ring_.mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  T factor() {
    T base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      return ring_.pow(base, integer());
    }
    return base;
  }

  std::uint64_t integer() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (UINT64_MAX - 9) / 10) fail("integer too large");
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  T primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = integer();
      if (v > static_cast<std::uint64_t>(INT64_MAX)) fail("integer too large");
      return ring_.from_int(static_cast<std::int64_t>(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      auto v = ring_.variable(c);
      if (!v) {
        --pos_;
        fail(std::string("unknown variable '") + c + "'");
      }
      return *v;
    }
    fail("expected a term");
  }

  const Ring& ring_;
  std::string text_;
  std::size_t pos_ = 0;
};

template <class Ring>
typename Ring::value_type parse_expression(const Ring& ring, std::string_view text) {
  return ExprParser<Ring>(ring, text).parse();
}

}  // namespace aslab::detail
