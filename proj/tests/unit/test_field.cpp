#include <gtest/gtest.h>

#include "aslab/field.hpp"

using namespace aslab;

TEST(Field, PrimeFieldArithmetic) {
  auto F = prime_field(7);
  EXPECT_EQ(F->size(), 7u);
  for (std::uint32_t a = 1; a < 7; ++a) {
    const Value x = F->element(a);
    EXPECT_TRUE(F->is_one(F->mul(x, F->inv(x))));
    EXPECT_EQ(F->pow(x, 6), F->one());
  }
  EXPECT_EQ(F->format(F->from_int(-1)), "6");
}

TEST(Field, DefaultModulusIsSmallestLowFirst) {
  EXPECT_EQ(default_modulus(2, 3), (std::vector<std::uint32_t>{1, 0, 1, 1}));
  EXPECT_EQ(default_modulus(3, 2), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(default_modulus(2, 2), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(Field, EnumerationOrderGF4) {
  auto F = make_field("GF(4)");
  std::vector<std::string> names;
  for (const auto& e : enumerate_elements(F)) names.push_back(e.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"0", "1", "t", "t+1"}));
}

TEST(Field, ExtensionAxiomsExhaustive) {
  for (const char* spec : {"GF(8)", "GF(9)", "GF(25)", "GF(27)"}) {
    auto F = make_field(spec);
    const auto q = F->size();
    for (std::uint32_t a = 0; a < q; ++a) {
      const Value x = F->element(a);
      EXPECT_EQ(F->pth_root(F->frobenius(x)), x);
      EXPECT_EQ(F->pow(x, q), x);
      if (a != 0) EXPECT_TRUE(F->is_one(F->mul(x, F->inv(x))));
      for (std::uint32_t b = 0; b < q; b += 3) {
        const Value y = F->element(b);
        EXPECT_EQ(F->mul(x, y), F->mul(y, x));
        EXPECT_EQ(F->sub(F->add(x, y), y), x);
      }
    }
  }
}

TEST(Field, ParseFormatRoundTrip) {
  auto F = make_field("GF(3^3)");
  for (std::uint32_t a = 0; a < F->size(); ++a) {
    const Value x = F->element(a);
    EXPECT_EQ(F->parse(F->format(x)), x) << F->format(x);
  }
  EXPECT_EQ(F->spec(), "GF(27)");
}

TEST(Field, RationalFunctions) {
  auto F = make_field("GF(3)(Z)");
  EXPECT_FALSE(F->is_finite());
  const Value z = F->generator();
  const Value a = F->parse("(Z^2+1)/(Z-1)");
  EXPECT_TRUE(F->is_canonical(a));
  EXPECT_EQ(F->mul(a, F->sub(z, F->one())), F->parse("Z^2+1"));
  EXPECT_EQ(F->parse(F->format(a)), a);
  EXPECT_EQ(F->format(F->neg(z)), "-Z");
  EXPECT_EQ(F->div(F->mul(z, z), z), z);
  EXPECT_THROW(F->inv(F->zero()), PreconditionError);
  EXPECT_THROW(F->size(), PreconditionError);
}

TEST(Field, RationalFunctionsOverExtension) {
  auto F = make_field("GF(4)(Z)");
  const Value a = F->parse("tZ + t^2");
  EXPECT_EQ(F->format(a), "tZ+t+1");
  EXPECT_EQ(F->parse(F->format(F->inv(a))), F->inv(a));
}

TEST(Field, ParseErrors) {
  EXPECT_THROW(make_field("GF(6)"), PreconditionError);
  EXPECT_THROW(make_field("GF(1024)"), PreconditionError);
  EXPECT_THROW(make_field("GF(7"), ParseError);
  auto F = make_field("GF(5)");
  EXPECT_THROW(F->parse("2+"), ParseError);
}

TEST(Field, SubfieldEmbeddingIsHomomorphism) {
  auto small = make_field("GF(4)");
  auto large = make_field("GF(64)");
  const auto emb = subfield_embedding(small, large);
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) {
      EXPECT_EQ(emb[small->fadd(a, b)], large->fadd(emb[a], emb[b]));
      EXPECT_EQ(emb[small->fmul(a, b)], large->fmul(emb[a], emb[b]));
    }
  EXPECT_TRUE(contains_subfield(*large, 3));
  EXPECT_FALSE(contains_subfield(*large, 4));
  EXPECT_EQ(subfield_elements(*large, 2).size(), 4u);
}
