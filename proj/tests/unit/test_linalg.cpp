#include <gtest/gtest.h>

#include <random>
#include <set>

#include "aslab/linalg.hpp"

using namespace aslab;

namespace {

Matrix random_matrix(const Field& F, std::size_t n, std::mt19937_64& rng, unsigned zero_bias = 0) {
  Matrix m(F, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng() % (zero_bias + 1) == 0) m(i, j) = F->element(static_cast<std::uint32_t>(rng() % F->size()));
  return m;
}

Matrix from_rows(const Field& F, std::vector<std::vector<const char*>> rows) {
  Matrix m(F, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = F->parse(rows[i][j]);
  return m;
}

std::vector<std::string> names(const InvariantFactorList& l) {
  std::vector<std::string> out;
  for (const auto& f : l.factors) out.push_back(format_poly(f));
  return out;
}

// Dimension of the centralizer from invariant factors d_1 | ... | d_s:
// sum over i of (2(s - i) + 1) deg d_i.
std::size_t centralizer_dim(const InvariantFactorList& l) {
  const std::size_t s = l.factors.size();
  std::size_t dim = 0;
  for (std::size_t i = 0; i < s; ++i) dim += (2 * (s - 1 - i) + 1) * *l.factors[i].degree();
  return dim;
}

}  // namespace

TEST(Linalg, CompanionConvention) {
  auto F = make_field("GF(2)(Z)");
  const Matrix c = companion(parse_poly(F, "X^2 - X - Z"));
  EXPECT_EQ(c, from_rows(F, {{"0", "Z"}, {"1", "1"}}));
  auto G = make_field("GF(5)");
  EXPECT_EQ(companion(parse_poly(G, "X - 3")), from_rows(G, {{"3"}}));
  EXPECT_THROW(companion(parse_poly(G, "2X+1")), PreconditionError);
}

TEST(Linalg, CompanionCharacteristicPolynomial) {
  std::mt19937_64 rng(1);
  for (const char* spec : {"GF(2)", "GF(9)", "GF(3)(Z)"}) {
    auto F = make_field(spec);
    for (int i = 0; i < 10; ++i) {
      std::vector<Value> c;
      const std::size_t deg = 1 + rng() % 5;
      for (std::size_t k = 0; k < deg; ++k)
        c.push_back(F->is_finite() ? F->element(static_cast<std::uint32_t>(rng() % F->size()))
                                   : F->add(F->from_int(static_cast<std::int64_t>(rng() % 3)),
                                            F->mul(F->from_int(static_cast<std::int64_t>(rng() % 3)), F->generator())));
      c.push_back(F->one());
      const Poly f(F, c);
      EXPECT_EQ(characteristic_polynomial(companion(f)), f);
      EXPECT_EQ(minimal_polynomial(companion(f)), f);
    }
  }
}

TEST(Linalg, AdMatrix) {
  auto F = make_field("GF(2)");
  EXPECT_TRUE(ad_matrix(Matrix(F, 3, 3)).is_zero());
  EXPECT_TRUE(ad_matrix(Matrix::identity(F, 3)).is_zero());
  const Matrix j = jordan_block(F, F->zero(), 2);
  EXPECT_EQ(rank(ad_matrix(j)), 2u);
  // ad(A) applied to vec(B) equals vec(AB - BA).
  std::mt19937_64 rng(2);
  auto G = make_field("GF(7)");
  const Matrix a = random_matrix(G, 3, rng), b = random_matrix(G, 3, rng);
  EXPECT_EQ(ad_matrix(a).apply(b.entries()), (a * b - b * a).entries());
  EXPECT_THROW(ad_matrix(Matrix(G, 2, 3)), PreconditionError);
}

TEST(Linalg, Eigenspaces) {
  auto F = make_field("GF(3)");
  EXPECT_EQ(eigenspace(Matrix::identity(F, 3), F->one()).size(), 3u);
  EXPECT_EQ(eigenspace(jordan_block(F, F->zero(), 2), F->zero()).size(), 1u);
  EXPECT_TRUE(eigenspace(Matrix::identity(F, 3), F->zero()).empty());
  auto K = make_field("GF(2)(Z)");
  const Matrix ad = ad_matrix(companion(parse_poly(K, "X^2 - X - Z")));
  EXPECT_EQ(eigenspace(ad, K->one()).size(), 2u);
  for (const auto& v : eigenspace(ad, K->one())) EXPECT_EQ(ad.apply(v), v);
}

TEST(Linalg, InvariantFactorExamples) {
  auto F = make_field("GF(2)");
  const Matrix m = direct_sum({jordan_block(F, F->zero(), 2), jordan_block(F, F->zero(), 1)});
  EXPECT_EQ(names(invariant_factors(m)), (std::vector<std::string>{"X", "X^2"}));
  const Poly f = parse_poly(F, "X^3 + X + 1");
  EXPECT_EQ(names(invariant_factors(companion(f))), (std::vector<std::string>{"X^3-X-1"}));
  auto K = make_field("GF(2)(Z)");
  const Matrix ad = ad_matrix(companion(parse_poly(K, "X^2 - X - Z")));
  EXPECT_EQ(names(invariant_factors(ad)), (std::vector<std::string>{"X^2-X", "X^2-X"}));
}

TEST(Linalg, KrylovRouteMatchesDirectSmithForm) {
  std::mt19937_64 rng(3);
  for (const char* spec : {"GF(2)", "GF(3)", "GF(4)", "GF(5)"}) {
    auto F = make_field(spec);
    for (int i = 0; i < 40; ++i) {
      const std::size_t n = 1 + rng() % 6;
      Matrix m = random_matrix(F, n, rng, i % 3);
      if (i % 4 == 0) m = direct_sum({m, m});
      const auto krylov = invariant_factors(m);
      EXPECT_EQ(krylov, smith_invariant_factors(characteristic_matrix(m)));
      std::size_t total = 0;
      for (std::size_t k = 0; k < krylov.factors.size(); ++k) {
        total += *krylov.factors[k].degree();
        if (k > 0) EXPECT_TRUE((krylov.factors[k] % krylov.factors[k - 1]).is_zero());
      }
      EXPECT_EQ(total, m.rows());
      EXPECT_TRUE(evaluate(minimal_polynomial(m), m).is_zero());
    }
  }
}

TEST(Linalg, KrylovRouteOverRationalFunctions) {
  auto K = make_field("GF(3)(Z)");
  const Matrix a = from_rows(K, {{"Z", "1", "0"}, {"0", "Z", "0"}, {"1/Z", "0", "2"}});
  const Matrix m = direct_sum({a, companion(parse_poly(K, "X^2 - Z"))});
  EXPECT_EQ(invariant_factors(m), smith_invariant_factors(characteristic_matrix(m)));
  EXPECT_TRUE(evaluate(characteristic_polynomial(m), m).is_zero());
}

TEST(Linalg, CentralizerDimensionEqualsAdKernel) {
  std::mt19937_64 rng(4);
  for (const char* spec : {"GF(2)", "GF(3)"}) {
    auto F = make_field(spec);
    for (int i = 0; i < 30; ++i) {
      const Matrix a = random_matrix(F, 1 + rng() % 4, rng, i % 2);
      EXPECT_EQ(eigenspace(ad_matrix(a), F->zero()).size(), centralizer_dim(invariant_factors(a)));
    }
  }
}

TEST(Linalg, AdEigenvaluesAreDifferences) {
  std::mt19937_64 rng(5);
  auto F = make_field("GF(5)");
  for (int i = 0; i < 20; ++i) {
    // Triangular matrices split over F.
    const std::size_t n = 2 + rng() % 2;
    Matrix a = random_matrix(F, n, rng);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < r; ++c) a(r, c) = F->zero();
    std::set<Value> diffs;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) diffs.insert(F->sub(a(r, r), a(c, c)));
    const auto roots = roots_in_field(minimal_polynomial(ad_matrix(a)));
    EXPECT_EQ(std::set<Value>(roots.begin(), roots.end()), diffs);
  }
}

TEST(Linalg, Similarity) {
  std::mt19937_64 rng(6);
  auto F = make_field("GF(7)");
  const Matrix a = random_matrix(F, 4, rng);
  EXPECT_TRUE(similar(a, a));
  const Matrix j = jordan_block(F, F->zero(), 2);
  EXPECT_FALSE(similar(j, Matrix(F, 2, 2)));
  // Conjugation by a random invertible matrix.
  Matrix p = random_matrix(F, 4, rng);
  while (!is_invertible(p)) p = random_matrix(F, 4, rng);
  EXPECT_TRUE(similar(a, inverse(p) * a * p));
  EXPECT_EQ(inverse(p) * p, Matrix::identity(F, 4));
  const Poly f = parse_poly(F, "X^3 + 2X + 5");
  const Value b = F->from_int(3);
  const Poly fb = compose(f, parse_poly(F, "X + 3"));
  EXPECT_TRUE(similar(companion(f), companion(fb) + Matrix::scalar(F, 3, b)));
  EXPECT_THROW(similar(a, j), PreconditionError);
}

TEST(Linalg, PascalSimilarity) {
  auto F = make_field("GF(5)");
  const Matrix s = pascal_similarity(parse_poly(F, "X^3 + X + 2"), F->one());
  EXPECT_EQ(s, from_rows(F, {{"1", "1", "1"}, {"0", "1", "2"}, {"0", "0", "1"}}));
  EXPECT_EQ(pascal_similarity(parse_poly(F, "X^3"), F->zero()), Matrix::identity(F, 3));
  // f = X^3, b = 1: direct multiplication.
  const Matrix s1 = pascal_similarity(parse_poly(F, "X^3"), F->one());
  const Matrix lhs = companion(parse_poly(F, "(X+1)^3")) + Matrix::identity(F, 3);
  EXPECT_EQ(lhs * s1, s1 * companion(parse_poly(F, "X^3")));
  std::mt19937_64 rng(8);
  auto K = make_field("GF(3)(Z)");
  EXPECT_NO_THROW(pascal_similarity(parse_poly(K, "X^4 - Z X + 1/Z"), K->parse("Z+1")));
}

TEST(Linalg, Ind2) {
  auto F = make_field("GF(5)");
  EXPECT_TRUE(verify_ind2(parse_poly(F, "X^2+1"), parse_poly(F, "X^2")));
  EXPECT_TRUE(verify_ind2(parse_poly(F, "X^2+1"), parse_poly(F, "X")));
  EXPECT_TRUE(verify_ind2(parse_poly(F, "X^2+2"), parse_poly(F, "3X^3+X+1")));
  auto K = make_field("GF(2)(Z)");
  EXPECT_TRUE(verify_ind2(parse_poly(K, "X^2 - X - Z"), parse_poly(K, "X^2")));
}

TEST(Linalg, NilpotentJordanType) {
  auto F = make_field("GF(2)");
  EXPECT_EQ(nilpotent_jordan_type(Matrix(F, 3, 3)).sizes(), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(nilpotent_jordan_type(jordan_block(F, F->zero(), 4)).sizes(), (std::vector<std::size_t>{4}));
  const Matrix j2 = jordan_block(F, F->zero(), 2), j3 = jordan_block(F, F->zero(), 3);
  const Matrix n = kronecker(j2, Matrix::identity(F, 3)) + kronecker(Matrix::identity(F, 2), j3);
  EXPECT_EQ(nilpotent_jordan_type(n).sizes(), (std::vector<std::size_t>{4, 2}));
  EXPECT_THROW(nilpotent_jordan_type(Matrix::identity(F, 2)), PreconditionError);
}
