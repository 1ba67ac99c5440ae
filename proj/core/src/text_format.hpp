#pragma once

// Shared printer for sums of monomials c_k V^k. The output is accepted by
// ExprParser, so printing and parsing round-trip.

#include <cstddef>
#include <string>
#include <vector>

namespace aslab::detail {

struct TermCoeff {
  std::string plain;    // text of c
  std::string negated;  // text of -c
  bool negative = false;         // print as "- (text of -c)"
  bool self_negating = false;    // c == -c (characteristic 2)
  bool plain_is_one = false;
  bool negated_is_one = false;
};

// True when `s` needs parentheses before being multiplied by a variable or
// after a leading minus: it is a sum or a quotient at top level.
inline bool is_sum(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (depth == 0 && (c == '+' || c == '-') && i > 0) return true;
  }
  return false;
}

inline bool is_compound(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (depth == 0 && ((c == '+' || c == '-') && i > 0)) return true;
    else if (depth == 0 && c == '/') return true;
  }
  return false;
}

inline std::string monomial_body(const std::string& coeff, bool is_one, std::size_t power, char var,
                                 bool after_minus) {
  std::string out;
  if (power == 0) {
    if (after_minus && (is_sum(coeff) || (!coeff.empty() && coeff[0] == '-'))) return "(" + coeff + ")";
    return coeff;
  }
  if (!is_one) {
    if (is_compound(coeff) || (!coeff.empty() && coeff[0] == '-')) out = "(" + coeff + ")";
    else out = coeff;
  }
  out.push_back(var);
  if (power > 1) out += "^" + std::to_string(power);
  return out;
}

struct Term {
  TermCoeff coeff;
  std::size_t power = 0;
};

// `terms` must be ordered from highest to lowest power; empty means zero.
inline std::string join_terms(const std::vector<Term>& terms, char var) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    const bool leading = i == 0;
    const bool minus = t.coeff.negative && !(leading && t.coeff.self_negating);
    if (minus) {
      out += "-";
      out += monomial_body(t.coeff.negated, t.coeff.negated_is_one, t.power, var, true);
    } else {
      if (!leading) out += "+";
      out += monomial_body(t.coeff.plain, t.coeff.plain_is_one, t.power, var, false);
    }
  }
  return out;
}

}  // namespace aslab::detail
