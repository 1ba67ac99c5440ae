#pragma once

// Irreducibility of h(X,Z) = X^{p^{n+e}} - X^{p^e} - g(Z^r) over K(Z), by the
// criterion and by exhaustive bivariate factor search.

#include <optional>
#include <string>
#include <vector>

#include "aslab/field.hpp"
#include "aslab/poly.hpp"

namespace aslab {

struct GasInstance {
  Field K;        // finite, characteristic p
  unsigned n = 1;
  unsigned e = 0;
  unsigned r = 1;
  Poly g;         // over K, in Z; deg g >= 1 and coprime to p
};

// h as a polynomial in X over K(Z).
Poly gas_polynomial(const GasInstance& inst);
// Throws PreconditionError unless K is finite, n, r >= 1 and gcd(deg g, p) = 1.
void validate(const GasInstance& inst);

struct GasVerdict {
  bool irreducible = false;
  // Satisfied conditions among "i" (p does not divide r), "ii" (e = 0) and
  // "iii" (g not in K^p[Z]); empty when reducible.
  std::vector<std::string> conditions;
  unsigned r0 = 1;  // r = r0 p^s with p not dividing r0
  unsigned s = 0;
  // Reducible case: Q with Q^p = h, and its text "(Q)^p".
  std::optional<Poly> witness_root;
  std::string witness;
  std::string reason;
};

GasVerdict gas_irreducible(const GasInstance& inst);

// Caps for the exhaustive search.
inline constexpr unsigned kOracleMaxTotalDegree = 12;
inline constexpr std::uint32_t kOracleMaxFieldSize = 9;

// Total degree of a polynomial in X over K(Z) whose coefficients are
// polynomials in Z.
std::size_t total_degree(const Poly& h);

// A monic (in X) proper factor of h over K(Z) of X-degree <= deg_X(h)/2, or
// nullopt if h is irreducible. h is a polynomial in X over K(Z) with
// K finite; denominators and the content in K[Z] are cleared first, and a
// non-monic h is replaced by lc^{P-1} h(X/lc). Factors of the transformed
// polynomial are searched among monic divisors of h(X,0) lifted with
// Z-degrees bounded by the Newton slope of h, filtered at the other points
// of K and confirmed by exact division. Throws CapExceeded beyond total
// degree 12 or |K| > 9.
std::optional<Poly> bivariate_factor(const Poly& h);
bool bivariate_irreducible_oracle(const Poly& h);

// f in K[X], g in K[Z] (both as polynomials over K) with gcd(deg f, deg g) = 1;
// returns the oracle verdict on f(X) - g(Z).
bool nhg1_property_check(const Poly& f, const Poly& g);

// All instances with p in {2,3}, K in {GF(p), GF(p^2)}, n in {1,2}, e in {0,1},
// r in {1,2,3,p,2p}, g in {Z, Z+1, cZ} (c a primitive element of K), with
// total degree of h at most 12, in a fixed order.
std::vector<GasInstance> irreducibility_grid();

std::string format_instance(const GasInstance& inst);

}  // namespace aslab
