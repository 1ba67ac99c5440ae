#pragma once

// Intermediate fields of K = F[α], q(α) = 0, q = X^{p^n} - X - a: subspaces R
// of E_{p^n}, Dickson forms, primitive elements α_H and property P.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "aslab/field.hpp"
#include "aslab/poly.hpp"

namespace aslab {

// Sparse polynomial over F_p in A, B_1, ..., B_k. Exponent vectors are indexed
// with A first.
struct MPoly {
  std::uint32_t p = 2;
  std::size_t nvars = 1;
  std::map<std::vector<std::uint32_t>, std::uint32_t> terms;  // nonzero coefficients

  bool is_zero() const noexcept { return terms.empty(); }
  // Value at (A, B_1, ...) = point, computed in the finite field E.
  std::uint32_t evaluate(const FieldDescriptor& E, const std::vector<std::uint32_t>& point) const;
  std::string to_string() const;
  friend bool operator==(const MPoly&, const MPoly&) = default;
};

// Φ_m(A, B) = A^{p^m} + sum_j f_j(B) A^{p^j}.
struct DicksonForm {
  unsigned m = 0;
  std::uint32_t p = 2;
  MPoly phi;               // in A, B_1..B_m
  std::vector<MPoly> f;    // f_0..f_{m-1}, in A, B_1..B_m with A-degree 0
};

inline constexpr std::size_t kMaxDicksonTerms = 200000;

// Φ_0 = A and Φ_i = Φ_{i-1}(A)^p - Φ_{i-1}(B_i)^{p-1} Φ_{i-1}(A). Requires
// 0 <= m <= 4 and p in {2, 3}; throws CapExceeded past kMaxDicksonTerms.
DicksonForm dickson_phi(unsigned m, std::uint32_t p);

// prod over s in F_p^m of (A + s_1 B_1 + ... + s_m B_m), by direct expansion.
MPoly dickson_product(unsigned m, std::uint32_t p);

// c_0..c_{m-1} with Φ_m(A, b) = A^{p^m} + sum c_j A^{p^j}, from the same
// recursion carried out on linearized polynomials over E.
std::vector<std::uint32_t> dickson_coefficients(const FieldDescriptor& E, const std::vector<std::uint32_t>& basis);

struct SubspaceR {
  Field ambient;                          // GF(p^n)
  std::vector<Value> basis;               // reduced echelon rows over F_p
  std::vector<Value> elements;            // all p^m elements, sorted
  std::size_t dimension() const noexcept { return basis.size(); }
};

// F_p-span of `gens` in the finite field E; the basis is the reduced echelon
// form of the generators.
SubspaceR span(const Field& E, const std::vector<Value>& gens);

inline constexpr std::uint32_t kMaxSubspaceField = 729;
// All m-dimensional F_p-subspaces of E, sorted by element list. Requires
// |E| <= 729 and n <= 4, or p = 3, n = 6 and m <= 2.
std::vector<SubspaceR> enumerate_subspaces(const Field& E, unsigned m);
// Number of m-dimensional subspaces of F_p^n.
std::uint64_t gaussian_binomial(unsigned n, unsigned m, std::uint32_t p);

// prod over b in R of (Y + b), over the ambient field.
struct FRPolynomial {
  Poly f;
  bool prime_coefficients = false;  // all coefficients in F_p
};
FRPolynomial f_R_polynomial(const SubspaceR& R);

// Whether R^p = R.
bool property_P(const SubspaceR& R);

// Index map from the ambient field of R into the constant field of F.
std::vector<std::uint32_t> constant_embedding(const Field& ambient, const Field& F);

struct PrimitiveElementResult {
  Poly alpha_H;                        // reduced mod q, in X
  std::vector<Value> coefficients;     // c_0..c_{m-1}, in the ambient field
  std::size_t degree_over_F = 0;
  bool property_P = false;             // all c_j in F_p
  Poly min_poly;                       // of alpha_H over F
};

// Parameters (p^n, a) of q = X^{p^n} - X - a; PreconditionError otherwise.
struct GasShape {
  std::uint64_t pn = 0;
  Value a;
};
GasShape gas_shape(const Poly& q);

// α_H = prod over b in R of (α + b), computed as that product mod q and as
// Φ_m(α, basis); the two must agree and α_H must have degree p^{n-m} over F
// (ConsistencyError otherwise). Unless `assume_irreducible`, q is certified
// irreducible first: by the criterion when a is a polynomial in Z of degree
// prime to p, by factor_finite when F is finite.
PrimitiveElementResult primitive_element(const SubspaceR& R, const Poly& q, bool assume_irreducible = false);

// Polynomials in Y whose coefficients are classes in F[X]/(q).
using QuotientPoly = std::vector<Poly>;

struct MinpolyProductReport {
  QuotientPoly mu;                       // prod over b in R of (Y - (α + b)), monic
  std::vector<Poly> mu_in_alpha_H;       // coefficient k as a polynomial in α_H over F
  std::size_t cosets = 0;
  bool coefficients_in_F_alpha_H = false;
  bool reconstructs_q = false;
};
// Also checks that the product of the conjugates μ(Y)^{σ_c}, c over coset
// representatives of E/R, equals q(Y); ConsistencyError on failure.
MinpolyProductReport intermediate_minpoly_product(const SubspaceR& R, const Poly& q);

// σ_b(u) = u(X + b) mod q, b an element of F (a constant in E_{p^n}).
Poly galois_action(const Poly& u, const Value& b, const Poly& q);

struct LatticeNode {
  SubspaceR R;
  Poly alpha_H;
  std::size_t degree_over_F = 0;
  bool property_P = false;
};
struct SubfieldLattice {
  std::vector<LatticeNode> nodes;                          // by dimension of R, then R
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (i, j): node i is a maximal subfield of node j
};
// Intermediate fields of F[α]/F, one per subspace R of E_{p^n}.
SubfieldLattice subfield_lattice(const Poly& q, const Field& E);
std::string lattice_dot(const SubfieldLattice& lattice);

std::string format_subspace(const SubspaceR& R);

}  // namespace aslab
