#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "aslab/dickson.hpp"
#include "aslab/error.hpp"

using namespace aslab;

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= b;
  return r;
}

Poly gas_q(const Field& F, std::uint64_t pn) { return parse_poly(F, "X^" + std::to_string(pn) + "-X-Z"); }

std::vector<std::uint32_t> idx(const std::vector<Value>& xs) {
  std::vector<std::uint32_t> out;
  for (const auto& x : xs) out.push_back(x.index);
  return out;
}

// Subspaces found as spans of every m-tuple of elements.
std::set<std::vector<Value>> spans_by_brute_force(const Field& E, unsigned m) {
  std::set<std::vector<Value>> out;
  const std::uint32_t q = E->size();
  std::vector<std::uint32_t> t(m, 0);
  for (std::uint64_t k = 0; k < ipow(q, m); ++k) {
    std::uint64_t r = k;
    std::vector<Value> gens;
    for (unsigned i = 0; i < m; ++i, r /= q) gens.push_back(E->element(static_cast<std::uint32_t>(r % q)));
    auto R = span(E, gens);
    if (R.dimension() == m) out.insert(R.elements);
  }
  return out;
}

}  // namespace

TEST(Dickson, PhiZeroAndOne) {
  for (std::uint32_t p : {2u, 3u}) {
    const auto f0 = dickson_phi(0, p);
    EXPECT_EQ(f0.phi.to_string(), "A");
    EXPECT_TRUE(f0.f.empty());
    const auto f1 = dickson_phi(1, p);
    ASSERT_EQ(f1.f.size(), 1u);
    MPoly expected{p, 2, {{{0, p - 1}, p - 1}}};
    EXPECT_EQ(f1.f[0], expected);
  }
  EXPECT_EQ(dickson_phi(1, 3).phi.to_string(), "A^3-A*B1^2");
}

TEST(Dickson, RecursionMatchesProduct) {
  for (auto [p, m] : {std::pair{2u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 1u}, {3u, 2u}})
    EXPECT_EQ(dickson_phi(m, p).phi, dickson_product(m, p)) << "p=" << p << " m=" << m;
}

TEST(Dickson, CapsAndPreconditions) {
  EXPECT_THROW(dickson_phi(5, 2), PreconditionError);
  EXPECT_THROW(dickson_phi(2, 5), PreconditionError);
  EXPECT_NO_THROW(dickson_phi(4, 3));
}

TEST(Dickson, NumericCoefficientsMatchForm) {
  const Field E = extension_field(3, 3);
  const auto form = dickson_phi(3, 3);
  for (const auto& R : enumerate_subspaces(E, 3)) {
    const auto c = dickson_coefficients(*E, idx(R.basis));
    std::vector<std::uint32_t> point{0};
    for (auto b : idx(R.basis)) point.push_back(b);
    for (unsigned j = 0; j < 3; ++j) EXPECT_EQ(c[j], form.f[j].evaluate(*E, point));
  }
  const Field E16 = extension_field(2, 4);
  const auto form2 = dickson_phi(2, 2);
  for (const auto& R : enumerate_subspaces(E16, 2)) {
    const auto c = dickson_coefficients(*E16, idx(R.basis));
    std::vector<std::uint32_t> point{0, R.basis[0].index, R.basis[1].index};
    for (unsigned j = 0; j < 2; ++j) EXPECT_EQ(c[j], form2.f[j].evaluate(*E16, point));
  }
}

TEST(Dickson, CoefficientsDependOnlyOnSpan) {
  const Field E = extension_field(3, 2);
  for (const auto& R : enumerate_subspaces(E, 2)) {
    const auto ref = dickson_coefficients(*E, idx(R.basis));
    // Every ordered basis of R.
    for (const auto& x : R.elements)
      for (const auto& y : R.elements) {
        if (span(E, {x, y}).dimension() != 2) continue;
        EXPECT_EQ(dickson_coefficients(*E, {x.index, y.index}), ref);
      }
  }
}

TEST(Subspaces, SmallCases) {
  const Field E4 = extension_field(2, 2);
  const auto lines = enumerate_subspaces(E4, 1);
  ASSERT_EQ(lines.size(), 3u);
  std::set<std::string> texts;
  for (const auto& R : lines) texts.insert(format_subspace(R));
  EXPECT_EQ(texts, (std::set<std::string>{"span{1}", "span{t}", "span{t+1}"}));
  const auto zero = enumerate_subspaces(E4, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].elements, std::vector<Value>{E4->zero()});
  EXPECT_EQ(enumerate_subspaces(extension_field(2, 3), 1).size(), 7u);
}

TEST(Subspaces, CountsMatchBruteForceSpans) {
  for (auto [p, n] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}}) {
    const Field E = extension_field(p, n);
    for (unsigned m = 0; m <= std::min(n, 2u); ++m) {
      const auto subs = enumerate_subspaces(E, m);
      std::set<std::vector<Value>> got;
      for (const auto& R : subs) got.insert(R.elements);
      EXPECT_EQ(got.size(), subs.size());
      EXPECT_EQ(got, spans_by_brute_force(E, m)) << "p=" << p << " n=" << n << " m=" << m;
      EXPECT_EQ(subs.size(), gaussian_binomial(n, m, p));
      EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end(),
                                 [](const SubspaceR& a, const SubspaceR& b) { return a.elements < b.elements; }));
    }
  }
}

TEST(Subspaces, Caps) {
  EXPECT_THROW(enumerate_subspaces(extension_field(2, 5), 1), CapExceeded);
  EXPECT_THROW(enumerate_subspaces(extension_field(3, 6), 3), CapExceeded);
  EXPECT_EQ(enumerate_subspaces(extension_field(3, 6), 1).size(), 364u);
  EXPECT_THROW(enumerate_subspaces(extension_field(2, 2), 3), PreconditionError);
}

TEST(FR, ZeroAndSubfields) {
  const Field E = extension_field(2, 4);
  const auto zero = f_R_polynomial(span(E, {}));
  EXPECT_EQ(format_poly(zero.f, 'Y'), "Y");
  for (unsigned m : {1u, 2u, 4u}) {
    const auto R = span(E, subfield_elements(*E, m));
    const auto fr = f_R_polynomial(R);
    EXPECT_EQ(format_poly(fr.f, 'Y'), "Y^" + std::to_string(ipow(2, m)) + "-Y");
    EXPECT_TRUE(fr.prime_coefficients);
    EXPECT_TRUE(property_P(R));
  }
}

TEST(FR, ArtinSchreierProductPlane) {
  const Field E = extension_field(3, 6);
  const Poly w = parse_poly(E, "Y^3-Y", 'Y');
  Poly prod = Poly::constant(E, E->one());
  for (int j = 0; j < 3; ++j) prod = prod * (w - Poly::constant(E, E->from_int(j)));
  // prod over j of (W - j) = W^3 - W.
  EXPECT_EQ(prod, pow(w, 3) - w);
  const auto roots = roots_in_field(prod);
  ASSERT_EQ(roots.size(), 9u);
  const auto R = span(E, roots);
  EXPECT_EQ(R.dimension(), 2u);
  EXPECT_EQ(R.elements, roots);
  const auto fr = f_R_polynomial(R);
  EXPECT_EQ(format_poly(fr.f, 'Y'), "Y^9+Y^3+Y");
  EXPECT_TRUE(fr.prime_coefficients);
  EXPECT_TRUE(property_P(R));
  // Not a subfield: the plane is closed under Frobenius but not multiplication.
  EXPECT_FALSE(std::includes(R.elements.begin(), R.elements.end(), subfield_elements(*E, 2).begin(),
                             subfield_elements(*E, 2).end()));
  // Y^9 - Y^3 - Y has no nonzero root in GF(3^6).
  EXPECT_EQ(roots_in_field(parse_poly(E, "Y^9-Y^3-Y", 'Y')).size(), 1u);
}

TEST(PropertyP, LineExamplesOverGF9) {
  const Field E = extension_field(3, 2);
  const Field F = rational_function_field(E);
  const Poly q = gas_q(F, 9);
  // Roots of Y^3 - cY, c = 2 the only value with c != 0, 1.
  const auto roots = roots_in_field(parse_poly(E, "Y^3-2Y", 'Y'));
  ASSERT_EQ(roots.size(), 3u);
  const auto R = span(E, roots);
  EXPECT_TRUE(property_P(R));
  EXPECT_NE(R.elements, subfield_elements(*E, 1));
  EXPECT_TRUE(primitive_element(R, q).property_P);

  std::size_t non_invariant = 0;
  for (const auto& L : enumerate_subspaces(E, 1)) {
    const auto pe = primitive_element(L, q);
    EXPECT_EQ(pe.property_P, property_P(L));
    if (!property_P(L)) {
      ++non_invariant;
      EXPECT_GE(pe.coefficients[0].index, 3u);
    }
  }
  EXPECT_EQ(non_invariant, 2u);
}

TEST(PropertyP, ThreeWayEquivalence) {
  for (auto [p, n] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}}) {
    const Field E = extension_field(p, n);
    const Poly q = gas_q(rational_function_field(E), ipow(p, n));
    for (unsigned m = 0; m <= n; ++m)
      for (const auto& R : enumerate_subspaces(E, m)) {
        const bool frob = property_P(R);
        EXPECT_EQ(f_R_polynomial(R).prime_coefficients, frob);
        EXPECT_EQ(primitive_element(R, q, true).property_P, frob);
      }
  }
}

TEST(PrimitiveElement, FullSubfieldAndBasisIdentities) {
  const Field E = extension_field(2, 4);
  const Field F = rational_function_field(E);
  const Poly q = gas_q(F, 16);
  const auto full = primitive_element(span(E, subfield_elements(*E, 4)), q);
  EXPECT_EQ(format_poly(full.alpha_H), "Z");
  EXPECT_EQ(full.degree_over_F, 1u);
  for (unsigned m : {1u, 2u}) {
    const auto sub = subfield_elements(*E, m);
    const auto pe = primitive_element(span(E, sub), q);
    EXPECT_EQ(format_poly(pe.alpha_H), "X^" + std::to_string(ipow(2, m)) + "-X");
    EXPECT_EQ(pe.degree_over_F, ipow(2, 4 - m));
    // Any F_p-basis of the subfield gives c_0 = -1 and c_j = 0 otherwise.
    const auto c = dickson_coefficients(*E, idx(span(E, sub).basis));
    EXPECT_EQ(c[0], E->fneg(1));
    for (unsigned j = 1; j < m; ++j) EXPECT_EQ(c[j], 0u);
  }
  const auto zero = primitive_element(span(E, {}), q);
  EXPECT_EQ(format_poly(zero.alpha_H), "X");
  EXPECT_EQ(zero.degree_over_F, 16u);
}

TEST(PrimitiveElement, DegreeLawOverFiniteBase) {
  // Over a finite base only n = 1 can be irreducible: the group generated by
  // Frobenius is cyclic while E_{p^n} has exponent p.
  const Field E = extension_field(3, 1);
  const Field K = extension_field(3, 2);
  std::size_t irreducible = 0;
  for (std::uint32_t c = 1; c < 9; ++c) {
    std::vector<Value> coeffs(4, K->zero());
    coeffs[3] = K->one();
    coeffs[1] = K->neg(K->one());
    coeffs[0] = K->neg(K->element(c));
    const Poly q(K, coeffs);
    if (!is_irreducible_finite(q)) {
      EXPECT_THROW(primitive_element(span(E, {}), q), PreconditionError);
      continue;
    }
    ++irreducible;
    for (unsigned m = 0; m <= 1; ++m)
      for (const auto& R : enumerate_subspaces(E, m)) EXPECT_EQ(primitive_element(R, q).degree_over_F, ipow(3, 1 - m));
  }
  EXPECT_EQ(irreducible, 6u);
}

TEST(PrimitiveElement, Preconditions) {
  const Field E = extension_field(2, 2);
  const Field F = rational_function_field(E);
  EXPECT_THROW(primitive_element(span(E, {}), parse_poly(F, "X^4-X^2-Z")), PreconditionError);
  EXPECT_THROW(primitive_element(span(E, {}), gas_q(F, 8)), PreconditionError);
  EXPECT_THROW(primitive_element(span(E, {}), parse_poly(F, "X^4-X-Z^2")), PreconditionError);
  EXPECT_NO_THROW(primitive_element(span(E, {}), parse_poly(F, "X^4-X-Z^2"), true));
  const Field G = rational_function_field(extension_field(2, 1));
  EXPECT_THROW(primitive_element(span(E, {}), gas_q(G, 4)), PreconditionError);
}

TEST(MinpolyProduct, TrivialAndFull) {
  const Field E = extension_field(2, 2);
  const Field F = rational_function_field(E);
  const Poly q = gas_q(F, 4);
  const auto lin = intermediate_minpoly_product(span(E, {}), q);
  ASSERT_EQ(lin.mu.size(), 2u);
  EXPECT_EQ(format_poly(lin.mu[0]), "X");  // Y - α in characteristic 2
  EXPECT_EQ(lin.cosets, 4u);
  EXPECT_TRUE(lin.reconstructs_q);
  const auto full = intermediate_minpoly_product(span(E, subfield_elements(*E, 2)), q);
  ASSERT_EQ(full.mu.size(), 5u);
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(full.mu[k], Poly::constant(F, q.coeff(k)));
  EXPECT_EQ(full.cosets, 1u);
}

TEST(MinpolyProduct, PrimeFieldLineOverGF4) {
  const Field E = extension_field(2, 2);
  const Field F = rational_function_field(E);
  const Poly q = gas_q(F, 4);
  const auto rep = intermediate_minpoly_product(span(E, {E->one()}), q);
  ASSERT_EQ(rep.mu.size(), 3u);
  EXPECT_EQ(format_poly(rep.mu[0]), "X^2-X");
  EXPECT_EQ(format_poly(rep.mu[1]), "1");
  EXPECT_EQ(format_poly(rep.mu[2]), "1");
  EXPECT_TRUE(rep.coefficients_in_F_alpha_H);
  EXPECT_EQ(format_poly(rep.mu_in_alpha_H[0]), "X");
  EXPECT_EQ(rep.cosets, 2u);
  EXPECT_TRUE(rep.reconstructs_q);
}

TEST(MinpolyProduct, AllSubspacesOfGF9) {
  const Field E = extension_field(3, 2);
  const Poly q = gas_q(rational_function_field(E), 9);
  for (unsigned m = 0; m <= 2; ++m)
    for (const auto& R : enumerate_subspaces(E, m)) {
      const auto rep = intermediate_minpoly_product(R, q);
      EXPECT_EQ(rep.mu.size(), ipow(3, m) + 1);
      EXPECT_EQ(rep.cosets, ipow(3, 2 - m));
    }
}

TEST(Galois, ShiftsComposeAdditively) {
  const Field E = extension_field(2, 2);
  const Field F = rational_function_field(E);
  const Poly q = gas_q(F, 4);
  const Poly x = Poly::x(F);
  for (std::uint32_t b = 0; b < 4; ++b)
    for (std::uint32_t c = 0; c < 4; ++c) {
      const Poly lhs = galois_action(galois_action(x, F->constant(c), q), F->constant(b), q);
      EXPECT_EQ(lhs, x + Poly::constant(F, F->constant(E->fadd(b, c))));
    }
  // σ_b fixes α_H exactly when b lies in R.
  const auto R = span(E, {E->generator()});
  const auto pe = primitive_element(R, q);
  for (std::uint32_t b = 0; b < 4; ++b) {
    const bool in_R = std::binary_search(R.elements.begin(), R.elements.end(), E->element(b));
    EXPECT_EQ(galois_action(pe.alpha_H, F->constant(b), q) == pe.alpha_H, in_R);
  }
}

TEST(Lattice, GF4) {
  const Field E = extension_field(2, 2);
  const auto lat = subfield_lattice(gas_q(rational_function_field(E), 4), E);
  ASSERT_EQ(lat.nodes.size(), 5u);
  EXPECT_EQ(lat.edges.size(), 6u);
  EXPECT_EQ(lat.nodes.front().degree_over_F, 4u);
  EXPECT_EQ(lat.nodes.back().degree_over_F, 1u);
  const auto dot = lattice_dot(lat);
  EXPECT_NE(dot.find("digraph subfields"), std::string::npos);
  EXPECT_NE(dot.find("n4 -> n1"), std::string::npos);
}
