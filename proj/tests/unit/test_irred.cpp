#include <gtest/gtest.h>

#include <map>

#include "aslab/irred.hpp"

using namespace aslab;

namespace {

GasInstance instance(const char* K, unsigned n, unsigned e, unsigned r, const char* g) {
  Field k = make_field(K);
  return {k, n, e, r, parse_poly(k, g, 'Z')};
}

}  // namespace

TEST(Irred, NamedInstances) {
  const auto v1 = gas_irreducible(instance("GF(2)", 1, 0, 1, "Z"));
  EXPECT_TRUE(v1.irreducible);
  EXPECT_EQ(v1.conditions, (std::vector<std::string>{"i", "ii"}));
  const auto v2 = gas_irreducible(instance("GF(2)", 1, 1, 2, "Z"));
  EXPECT_FALSE(v2.irreducible);
  EXPECT_EQ(v2.witness, "(X^2-X-Z)^2");
  EXPECT_EQ(v2.s, 1u);
  const auto v3 = gas_irreducible(instance("GF(4)", 2, 0, 3, "Z"));
  EXPECT_TRUE(v3.irreducible);
  EXPECT_EQ(v3.conditions, (std::vector<std::string>{"i", "ii"}));
  EXPECT_THROW(gas_irreducible(instance("GF(2)", 1, 0, 1, "Z^2+Z")), PreconditionError);
  EXPECT_THROW(gas_irreducible(instance("GF(3)", 1, 0, 1, "1")), PreconditionError);
}

TEST(Irred, OracleExamples) {
  auto F = make_field("GF(2)(Z)");
  EXPECT_TRUE(bivariate_irreducible_oracle(parse_poly(F, "X^2 - X - Z")));
  const auto f = bivariate_factor(parse_poly(F, "X^2 - X - (Z^2 - Z)"));
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(*f == parse_poly(F, "X - Z") || *f == parse_poly(F, "X + Z + 1")) << format_poly(*f);
  EXPECT_FALSE(bivariate_irreducible_oracle(parse_poly(F, "X^4 - X^2 - Z^2")));
  for (const char* spec : {"GF(2)(Z)", "GF(4)(Z)", "GF(3)(Z)"}) {
    auto G = make_field(spec);
    const Poly h = parse_poly(G, "X^" + std::to_string(G->constant_field().size()) + " - X - Z");
    EXPECT_TRUE(bivariate_irreducible_oracle(h)) << spec;
  }
  EXPECT_THROW(bivariate_irreducible_oracle(parse_poly(F, "X^13 - Z")), CapExceeded);
}

TEST(Irred, OracleFindsPlantedFactors) {
  // Products of two known factors, including non-monic leading coefficients.
  auto F = make_field("GF(3)(Z)");
  const char* pairs[][2] = {{"X^2 + Z X + 1", "X^3 - Z^2"},
                            {"X - Z^2 - 1", "X^2 + X + Z"},
                            {"Z X + 1", "X^2 - Z"},
                            {"X^2 + Z", "X^2 + 2Z + 1"}};
  for (const auto& pr : pairs) {
    const Poly a = parse_poly(F, pr[0]), b = parse_poly(F, pr[1]);
    const auto f = bivariate_factor(a * b);
    ASSERT_TRUE(f.has_value()) << pr[0];
    EXPECT_TRUE(((a * b) % *f).is_zero());
    EXPECT_GE(*f->degree(), 1u);
    EXPECT_LT(*f->degree(), *(a * b).degree());
  }
  // Content in K[Z] alone does not make h reducible over K(Z).
  EXPECT_TRUE(bivariate_irreducible_oracle(parse_poly(F, "Z X^2 + Z^2 X + Z^2")));
}

TEST(Irred, Nhg1) {
  auto G5 = make_field("GF(5)");
  EXPECT_TRUE(nhg1_property_check(parse_poly(G5, "X^2-X"), parse_poly(G5, "Z^3", 'Z')));
  auto G2 = make_field("GF(2)");
  EXPECT_TRUE(nhg1_property_check(parse_poly(G2, "X^4-X^2"), parse_poly(G2, "Z^3", 'Z')));
  auto G3 = make_field("GF(3)");
  EXPECT_THROW(nhg1_property_check(parse_poly(G3, "X^2"), parse_poly(G3, "Z^2", 'Z')), PreconditionError);
}

TEST(Irred, GridShape) {
  const auto grid = irreducibility_grid();
  EXPECT_GE(grid.size(), 120u);
  std::map<bool, int> verdicts;
  for (const auto& inst : grid) {
    const auto v = gas_irreducible(inst);
    ++verdicts[v.irreducible];
    if (!v.irreducible) {
      ASSERT_TRUE(v.witness_root.has_value());
      EXPECT_EQ(pow(*v.witness_root, inst.K->characteristic()), gas_polynomial(inst));
    }
  }
  EXPECT_GT(verdicts[false], 0);
  EXPECT_GT(verdicts[true], 0);
}

TEST(Irred, FactorDegreesOfArtinSchreier) {
  for (const char* spec : {"GF(4)", "GF(9)"}) {
    auto F = make_field(spec);
    const std::uint32_t q = F->size();
    for (std::uint32_t a = 0; a < q; ++a) {
      std::vector<Value> c(q + 1, F->zero());
      c[q] = F->one();
      c[1] = F->neg(F->one());
      c[0] = F->neg(F->element(a));
      const auto fs = factor_finite(Poly(F, c));
      for (const auto& fac : fs) {
        EXPECT_EQ(*fac.factor.degree(), *fs[0].factor.degree());
        EXPECT_EQ(fac.multiplicity, 1u);
      }
      const std::size_t d = *fs[0].factor.degree();
      EXPECT_TRUE(d == 1 || d == F->characteristic() || d == q);
    }
  }
}
