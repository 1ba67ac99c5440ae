#include <gtest/gtest.h>

#include <map>
#include <random>

#include "aslab/poly.hpp"

using namespace aslab;

namespace {

Poly random_poly(const Field& F, std::size_t deg, std::mt19937_64& rng) {
  std::vector<Value> c;
  for (std::size_t i = 0; i <= deg; ++i) c.push_back(F->element(static_cast<std::uint32_t>(rng() % F->size())));
  c.back() = F->one();
  return Poly(F, c);
}

// Irreducibility by trial division through every monic polynomial of degree
// up to deg/2.
bool brute_irreducible(const Poly& f) {
  const auto& F = f.field();
  const std::size_t n = *f.degree();
  if (n == 0) return false;
  const std::uint64_t q = F->size();
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= q;
    for (std::uint64_t k = 0; k < total; ++k) {
      std::vector<Value> c;
      std::uint64_t r = k;
      for (std::size_t i = 0; i < d; ++i, r /= q) c.push_back(F->element(static_cast<std::uint32_t>(r % q)));
      c.push_back(F->one());
      if ((f % Poly(F, c)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Poly, FormatMinusRule) {
  auto F = make_field("GF(2)(Z)");
  const Poly h = parse_poly(F, "X^2 + X + Z");
  EXPECT_EQ(format_poly(h), "X^2-X-Z");
  EXPECT_EQ(format_poly(pow(h, 2)), "X^4-X^2-Z^2");
  auto G = make_field("GF(4)");
  EXPECT_EQ(format_poly(parse_poly(G, "X^2 + tX + t+1")), "X^2+tX+t+1");
  auto H = make_field("GF(3)(Z)");
  EXPECT_EQ(format_poly(parse_poly(H, "X^3 - X - (Z^2+1)/Z")), "X^3-X-(Z^2+1)/Z");
  EXPECT_EQ(format_poly(Poly(H)), "0");
}

TEST(Poly, ParseRoundTripRandom) {
  std::mt19937_64 rng(7);
  for (const char* spec : {"GF(5)", "GF(9)", "GF(8)"}) {
    auto F = make_field(spec);
    for (int i = 0; i < 30; ++i) {
      const Poly f = random_poly(F, rng() % 7, rng);
      EXPECT_EQ(parse_poly(F, format_poly(f)), f) << format_poly(f);
    }
  }
}

TEST(Poly, DivModIdentity) {
  std::mt19937_64 rng(11);
  auto F = make_field("GF(27)");
  for (int i = 0; i < 50; ++i) {
    const Poly a = random_poly(F, rng() % 12, rng);
    const Poly b = random_poly(F, 1 + rng() % 5, rng).scaled(F->element(2));
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_TRUE(r.is_zero() || *r.degree() < *b.degree());
  }
}

TEST(Poly, GcdDividesAndBezoutFree) {
  std::mt19937_64 rng(3);
  auto F = make_field("GF(7)");
  for (int i = 0; i < 30; ++i) {
    const Poly c = random_poly(F, 1 + rng() % 3, rng);
    const Poly a = c * random_poly(F, rng() % 4, rng);
    const Poly b = c * random_poly(F, rng() % 4, rng);
    const Poly g = gcd(a, b);
    EXPECT_TRUE((a % g).is_zero());
    EXPECT_TRUE((b % g).is_zero());
    EXPECT_TRUE((g % c.monic()).is_zero());
  }
}

TEST(Poly, FactorizationMatchesBruteForce) {
  std::mt19937_64 rng(5);
  for (const char* spec : {"GF(2)", "GF(3)", "GF(4)", "GF(9)", "GF(8)"}) {
    auto F = make_field(spec);
    for (int i = 0; i < 25; ++i) {
      const Poly f = random_poly(F, 1 + rng() % 7, rng);
      const auto fs = factor_finite(f);
      Poly prod = Poly::constant(F, F->one());
      for (const auto& [g, m] : fs) {
        EXPECT_TRUE(g.is_monic());
        EXPECT_TRUE(brute_irreducible(g)) << format_poly(g);
        prod = prod * pow(g, m);
      }
      EXPECT_EQ(prod, f);
      EXPECT_EQ(is_irreducible_finite(f), brute_irreducible(f)) << spec << " " << format_poly(f);
    }
  }
}

TEST(Poly, FactorizationWithPthPowers) {
  auto F = make_field("GF(3)");
  const Poly f = parse_poly(F, "(X^2+1)^3 (X+1)^4 (X^2+X+2)^9");
  const auto fs = factor_finite(f);
  std::map<std::string, unsigned> got;
  for (const auto& [g, m] : fs) got[format_poly(g)] = m;
  EXPECT_EQ(got, (std::map<std::string, unsigned>{{"X+1", 4}, {"X^2+1", 3}, {"X^2+X-1", 9}}));
}

TEST(Poly, SeparablePart) {
  auto F = make_field("GF(2)(Z)");
  const Poly h = parse_poly(F, "X^8 + X^2 + Z");
  const auto [q, e] = separable_part(h);
  EXPECT_EQ(e, 1u);
  EXPECT_EQ(format_poly(q), "X^4-X-Z");
  EXPECT_TRUE(is_separable(q));
  EXPECT_EQ(inflate(q, 2), h);
  EXPECT_THROW(separable_part(parse_poly(F, "2X")), PreconditionError);
}

TEST(Poly, MinPolyInQuotient) {
  auto F = make_field("GF(2)");
  const Poly q = parse_poly(F, "X^6+X+1");
  // X^3 generates a degree-2 or degree-6 extension element; check it annihilates.
  for (const char* u : {"X", "X^3", "X^2+X", "1", "X^5+X^3"}) {
    const Poly up = parse_poly(F, u);
    const Poly m = min_poly_in_quotient(up, q);
    EXPECT_TRUE(m.is_monic());
    EXPECT_TRUE((compose(m, up) % q).is_zero()) << u;
    EXPECT_EQ(6u % *m.degree(), 0u);
  }
  EXPECT_EQ(*min_poly_in_quotient(Poly::x(F), q).degree(), 6u);
}

TEST(Poly, RootsFinite) {
  auto F = make_field("GF(9)");
  const Poly f = parse_poly(F, "X^9 - X");
  EXPECT_EQ(roots_in_field(f).size(), 9u);
  const Poly g = parse_poly(F, "(X-t)^3 (X^2+t)");
  const auto r = roots_in_field(g);
  ASSERT_FALSE(r.empty());
  EXPECT_EQ(root_multiplicity(g, F->parse("t")), 3u);
}

TEST(Poly, RootsRationalFunctionField) {
  auto F = make_field("GF(3)(Z)");
  const Poly f = parse_poly(F, "(X - Z)(X - 1/(Z+1))(X - (Z^2+2)/Z)(X^2 - Z)");
  const auto r = roots_in_field(f);
  ASSERT_EQ(r.size(), 3u);
  for (const auto& x : r) EXPECT_TRUE(F->is_zero(f.evaluate(x)));
  EXPECT_TRUE(roots_in_field(parse_poly(F, "X^3 - X - Z")).empty());
  const auto r0 = roots_in_field(parse_poly(F, "X^2 - Z X"));
  EXPECT_EQ(r0.size(), 2u);
}
