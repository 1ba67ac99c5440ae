#include <gtest/gtest.h>

#include <random>

#include "aslab/ad_analyzer.hpp"

using namespace aslab;

namespace {

std::vector<std::string> names(const InvariantFactorList& l) {
  std::vector<std::string> out;
  for (const auto& f : l.factors) out.push_back(format_poly(f));
  return out;
}

}  // namespace

TEST(AdAnalyzer, ArtinSchreierCompanion) {
  auto F = make_field("GF(2)(Z)");
  const Matrix a = companion(parse_poly(F, "X^2 - X - Z"));
  const auto rep = analyze(a, 1);
  EXPECT_TRUE(rep.c1 && rep.c2 && rep.c3);
  EXPECT_EQ(rep.eigenvalues, (std::vector<Value>{F->zero(), F->one()}));
  for (const auto& [x, d] : rep.eigenspace_dims) EXPECT_EQ(d, 2u);
  EXPECT_EQ(names(rep.ad_invariant_factors), (std::vector<std::string>{"X^2-X", "X^2-X"}));
  EXPECT_TRUE(rep.diagonalizable);
  ASSERT_TRUE(rep.recovered.has_value());
  EXPECT_EQ(rep.recovered->n, 1u);
  EXPECT_EQ(rep.recovered->e, 0u);
  EXPECT_EQ(F->format(rep.recovered->a), "Z");
  EXPECT_TRUE(rep.inconsistencies.empty());
  ASSERT_TRUE(rep.eigenvector_invertibility.has_value());
  EXPECT_TRUE(rep.eigenvector_invertibility->all_invertible);
  EXPECT_GT(rep.eigenvector_invertibility->checked, 0u);
}

TEST(AdAnalyzer, InseparableCase) {
  auto F = make_field("GF(2)(Z)");
  const auto rep = analyze(build_gas_companion(F, 1, 1, F->generator()), 2);
  EXPECT_TRUE(rep.c1 && rep.c2 && rep.c3);
  for (const auto& [x, d] : rep.eigenspace_dims) EXPECT_EQ(d, 4u);
  EXPECT_EQ(names(rep.ad_invariant_factors), std::vector<std::string>(4, "X^4-X^2"));
  EXPECT_FALSE(rep.diagonalizable);
  ASSERT_TRUE(rep.recovered.has_value());
  EXPECT_EQ(rep.recovered->e, 1u);
  EXPECT_EQ(format_poly(rep.recovered->q), "X^2-X-Z");
  EXPECT_TRUE(rep.inconsistencies.empty());
}

TEST(AdAnalyzer, ScalarMatrixFailsC3) {
  auto F = make_field("GF(2)");
  const auto rep = analyze(Matrix::identity(F, 2));
  EXPECT_FALSE(rep.c3);
  EXPECT_FALSE(rep.recovered.has_value());
  bool named = false;
  for (const auto& w : rep.witnesses) named |= w.condition == "C3";
  EXPECT_TRUE(named);
}

TEST(AdAnalyzer, ReducibleDiagonal) {
  auto F = make_field("GF(2)");
  Matrix a(F, 2, 2);
  a(1, 1) = F->one();
  const auto rep = analyze(a);
  EXPECT_FALSE(rep.c3);
  const auto v = check_eigenvector_invertibility(a, rep, 0);
  EXPECT_FALSE(v.all_invertible);
}

TEST(AdAnalyzer, BuildGasCompanion) {
  auto F = make_field("GF(2)(Z)");
  EXPECT_EQ(build_gas_companion(F, 1, 0, F->generator()), companion(parse_poly(F, "X^2-X-Z")));
  EXPECT_EQ(build_gas_companion(F, 1, 1, F->generator()), companion(parse_poly(F, "X^4-X^2-Z")));
  auto G = make_field("GF(4)(Z)");
  EXPECT_EQ(build_gas_companion(G, 2, 0, G->generator()).rows(), 4u);
  EXPECT_THROW(build_gas_companion(F, 2, 0, F->generator()), PreconditionError);
}

TEST(AdAnalyzer, SimilarityShift) {
  auto F = make_field("GF(2)(Z)");
  const Matrix a = companion(parse_poly(F, "X^2 - X - Z"));
  EXPECT_TRUE(check_similarity_shift(a, F->one()));
  EXPECT_TRUE(check_similarity_shift(a, F->zero()));
  auto G = make_field("GF(3)");
  EXPECT_THROW(check_similarity_shift(jordan_block(G, G->zero(), 2), G->one()), PreconditionError);
}

TEST(AdAnalyzer, CentralizerIsField) {
  // Nonzero elements of the 0-eigenspace (the centralizer F[A]) are invertible.
  auto F = make_field("GF(3)");
  const Matrix a = companion(parse_poly(F, "X^3 - X - 1"));
  const auto basis = eigenspace(ad_matrix(a), F->zero());
  ASSERT_EQ(basis.size(), 3u);
  for (std::uint32_t c0 = 0; c0 < 3; ++c0)
    for (std::uint32_t c1 = 0; c1 < 3; ++c1)
      for (std::uint32_t c2 = 0; c2 < 3; ++c2) {
        if (c0 + c1 + c2 == 0) continue;
        Vector v(9, F->zero());
        const std::uint32_t cs[3] = {c0, c1, c2};
        for (int k = 0; k < 3; ++k)
          for (int i = 0; i < 9; ++i) v[i] = F->add(v[i], F->mul(F->element(cs[k]), basis[k][i]));
        EXPECT_TRUE(is_invertible(Matrix(F, 3, 3, v)));
      }
}

TEST(AdAnalyzer, ConverseOnRandomMatrices) {
  std::mt19937_64 rng(9);
  auto F = make_field("GF(3)");
  int recovered = 0;
  for (int i = 0; i < 60; ++i) {
    const std::size_t m = 2 + rng() % 3;
    Matrix a(F, m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) a(r, c) = F->element(static_cast<std::uint32_t>(rng() % 3));
    const auto rep = analyze(a, i);
    EXPECT_TRUE(rep.inconsistencies.empty());
    if (rep.recovered) {
      ++recovered;
      EXPECT_TRUE(is_irreducible_finite(rep.recovered->q));
    } else {
      EXPECT_FALSE(rep.witnesses.empty());
    }
  }
  EXPECT_GT(recovered, 0);
}
