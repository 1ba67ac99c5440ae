#include <gtest/gtest.h>

#include <map>

#include "aslab/tensor.hpp"

using namespace aslab;

namespace {

std::map<std::string, std::size_t> as_map(const std::vector<ElementaryDivisor>& d) {
  std::map<std::string, std::size_t> out;
  for (const auto& x : d) out[format_poly(x.divisor)] += x.multiplicity;
  return out;
}

TensorInstance inst(const char* spec, std::size_t n, std::size_t m, std::uint32_t a = 0, std::uint32_t b = 0) {
  auto F = make_field(spec);
  return {F, n, m, F->element(a), F->element(b)};
}

}  // namespace

TEST(Tensor, FormulaExamples) {
  EXPECT_EQ(tensor_jordan_type_formula(inst("GF(2)", 1, 4, 0, 1)).sizes(), (std::vector<std::size_t>{4}));
  const auto jt = tensor_jordan_type_formula(inst("GF(2)", 1, 4, 0, 1));
  EXPECT_EQ(jt.blocks[0].eigenvalue, make_field("GF(2)")->one());
  EXPECT_EQ(tensor_jordan_type_formula(inst("GF(2)", 2, 4)).sizes(), (std::vector<std::size_t>{4, 4}));
  EXPECT_EQ(tensor_jordan_type_formula(inst("GF(3)", 3, 9)).sizes(), (std::vector<std::size_t>{9, 9, 9}));
  EXPECT_THROW(tensor_jordan_type_formula(inst("GF(2)", 2, 3)), PreconditionError);
  EXPECT_THROW(tensor_jordan_type_formula(inst("GF(2)", 5, 4)), PreconditionError);
}

TEST(Tensor, OracleExamples) {
  EXPECT_EQ(tensor_jordan_type_oracle(inst("GF(2)", 2, 3)).sizes(), (std::vector<std::size_t>{4, 2}));
  EXPECT_EQ(tensor_jordan_type_oracle(inst("GF(2)", 2, 2)).sizes(), (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(tensor_jordan_type_oracle(inst("GF(3)", 1, 1, 1, 1)).sizes(), (std::vector<std::size_t>{1}));
  EXPECT_THROW(tensor_jordan_type_oracle(inst("GF(2)", 17, 16)), CapExceeded);
}

TEST(Tensor, FormulaMatchesOracleAndShiftIndependence) {
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t m = 1; m <= 9; m *= p)
      for (std::size_t n = 1; n <= m; ++n) {
        auto F = prime_field(p);
        const auto ref = tensor_jordan_type_oracle({F, n, m, F->zero(), F->zero()}).sizes();
        for (std::uint32_t a = 0; a < p; ++a)
          for (std::uint32_t b = 0; b < p; ++b) {
            const TensorInstance t{F, n, m, F->element(a), F->element(b)};
            EXPECT_EQ(tensor_jordan_type_formula(t), tensor_jordan_type_oracle(t)) << p << " " << n << " " << m;
            EXPECT_EQ(tensor_jordan_type_oracle(t).sizes(), ref);
          }
      }
}

TEST(Tensor, BinomialDivisibility) {
  // Exact binomials for small cases cross-check the Pascal row.
  EXPECT_EQ(binomial_mod(10, 3, 7), 120u % 7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    std::uint64_t pe = 1;
    for (unsigned e = 1; e <= 3; ++e) {
      pe *= p;
      for (std::uint64_t i = 1; i < pe; ++i) EXPECT_EQ(binomial_mod(pe, i, p), 0u);
    }
  }
}

TEST(Tensor, AdElementaryDivisorExamples) {
  auto F = make_field("GF(2)");
  const Value zero = F->zero(), one = F->one();
  EXPECT_EQ(as_map(ad_elementary_divisors_blocksum(F, {zero}, 1)), (std::map<std::string, std::size_t>{{"X^2", 2}}));
  EXPECT_EQ(as_map(ad_elementary_divisors_blocksum(F, {zero, one}, 0)),
            (std::map<std::string, std::size_t>{{"X", 2}, {"X-1", 2}}));
  EXPECT_EQ(as_map(ad_elementary_divisors_blocksum(F, {zero, one}, 1)),
            (std::map<std::string, std::size_t>{{"X^2", 4}, {"X^2-1", 4}}));
  EXPECT_EQ(as_map(ad_elementary_divisors_direct(F, {zero, one}, 1)),
            as_map(ad_elementary_divisors_blocksum(F, {zero, one}, 1)));
}

TEST(Tensor, ElementaryDivisorRoundTrip) {
  auto F = make_field("GF(3)");
  const Matrix m = direct_sum({jordan_block(F, F->zero(), 2), jordan_block(F, F->one(), 3),
                               companion(parse_poly(F, "X^2+1")), jordan_block(F, F->zero(), 1)});
  const auto inv = invariant_factors(m);
  EXPECT_EQ(invariant_factors_from_elementary(elementary_divisors(inv)), inv);
}
