#pragma once

// Dense univariate polynomials over any supported field.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aslab/field.hpp"

namespace aslab {

class Poly {
 public:
  explicit Poly(Field field);
  // Coefficients low degree first; trailing zeros are trimmed.
  Poly(Field field, std::vector<Value> coeffs);

  static Poly constant(Field field, Value c);
  static Poly x(Field field);
  static Poly monomial(Field field, Value c, std::size_t k);
  // Integer coefficients reduced mod p, low degree first.
  static Poly from_ints(Field field, std::initializer_list<std::int64_t> coeffs);

  const Field& field() const noexcept { return field_; }
  const std::vector<Value>& coeffs() const noexcept { return coeffs_; }
  // nullopt is the degree of the zero polynomial (minus infinity).
  std::optional<std::size_t> degree() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept;
  bool is_monic() const noexcept;
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const Value& leading() const;
  Value coeff(std::size_t k) const;

  Poly monic() const;
  Poly derivative() const;
  Poly scaled(const Value& c) const;
  Value evaluate(const Value& x) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);
  // Total order used for deterministic output: degree, then coefficients.
  friend bool operator<(const Poly& a, const Poly& b);

 private:
  void trim();

  Field field_;
  std::vector<Value> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

// Euclidean division; b must be nonzero.
DivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
// a / b, throwing ConsistencyError if the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
Poly pow(const Poly& a, std::uint64_t k);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& mod);
Poly pow_mod(const Poly& a, std::uint64_t k, const Poly& mod);
// f(g(X)).
Poly compose(const Poly& f, const Poly& g);
// f(X^k).
Poly inflate(const Poly& f, std::uint64_t k);

// Text in the variable `var` ('X' by default); coefficients use the field
// element format, so "X^2-X-Z" over GF(2)(Z). Printing and parsing round-trip.
std::string format_poly(const Poly& f, char var = 'X');
Poly parse_poly(const Field& field, std::string_view text, char var = 'X');

// h(X) = q(X^{p^e}) with e maximal.
struct SeparableDecomposition {
  Poly q;
  unsigned e = 0;
};

bool is_separable(const Poly& f);
// Requires h monic of degree >= 1 over a field of characteristic p. q is
// obtained by reindexing coefficients, so no p-th roots are taken. q is
// separable whenever h is irreducible; callers needing separability of q for
// arbitrary h should check is_separable(q).
SeparableDecomposition separable_part(const Poly& h);

struct Factor {
  Poly factor;  // monic irreducible
  unsigned multiplicity = 0;
};

// Complete factorization over a finite field (deg f <= 64), factors sorted by
// (degree, coefficients). The product of the factors with multiplicity, times
// the leading coefficient, equals f.
std::vector<Factor> factor_finite(const Poly& f);
bool is_irreducible_finite(const Poly& f);

// Monic minimal polynomial over F of the class of u in F[X]/(q): the first
// linear dependence among 1, u, u^2, ... reduced mod q.
Poly min_poly_in_quotient(const Poly& u, const Poly& q);

// Whether every coefficient of g is a p-th power in its coefficient field.
// Always true over finite (perfect) fields; kept so the irreducibility
// criterion evaluates its third condition literally.
bool is_pth_power_coeffs(const Poly& g);

// Roots of f in its field, without multiplicity, sorted by Value. Finite
// fields are searched exhaustively; over K(Z) candidate roots u/v come from
// the monic divisors of the cleared constant and leading coefficients.
std::vector<Value> roots_in_field(const Poly& f);
// Multiplicity of x as a root of f (f nonzero).
unsigned root_multiplicity(const Poly& f, const Value& x);

}  // namespace aslab
