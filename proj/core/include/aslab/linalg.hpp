#pragma once

// Dense exact linear algebra over the supported fields.

#include <cstddef>
#include <vector>

#include "aslab/field.hpp"
#include "aslab/poly.hpp"

namespace aslab {

using Vector = std::vector<Value>;

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  // Row-major entries; throws PreconditionError on a size mismatch.
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Value> entries);

  static Matrix identity(Field field, std::size_t n);
  static Matrix scalar(Field field, std::size_t n, const Value& c);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Value& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Value& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  FieldElement element(std::size_t i, std::size_t j) const { return {field_, (*this)(i, j)}; }
  const std::vector<Value>& entries() const noexcept { return data_; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix scaled(const Value& c) const;
  Vector apply(const Vector& v) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Value> data_;
};

// Largest admissible dimensions.
inline constexpr std::size_t kMaxRationalMatrixDim = 100;
inline constexpr std::size_t kMaxFiniteMatrixDim = 1024;
// Throws CapExceeded if M is larger than the cap for its field.
void check_size_cap(const Matrix& m);

// 1s on the subdiagonal, last column -f_0, ..., -f_{m-1}. f monic, deg >= 1.
Matrix companion(const Poly& f);
// Upper triangular: alpha on the diagonal, 1s on the superdiagonal.
Matrix jordan_block(const Field& field, const Value& alpha, std::size_t n);
// Upper triangular, (i,j) entry C(j-1, i-1) b^{j-i} (1-based).
Matrix pascal_matrix(const Field& field, const Value& b, std::size_t m);
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix direct_sum(const std::vector<Matrix>& blocks);
// Matrix of B -> AB - BA on matrix units E_ij ordered row-major.
Matrix ad_matrix(const Matrix& a);
Matrix pow(const Matrix& m, std::uint64_t k);
// f(M) by Horner's rule.
Matrix evaluate(const Poly& f, const Matrix& m);

std::size_t rank(const Matrix& m);
// Reduced row echelon form and pivot columns.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
RowEchelon rref(const Matrix& m);
// Basis of {v : M v = 0}, one vector per free column.
std::vector<Vector> kernel(const Matrix& m);
// Basis of ker(M - lambda I); empty iff lambda is not an eigenvalue.
std::vector<Vector> eigenspace(const Matrix& m, const Value& lambda);
bool is_invertible(const Matrix& m);
// Throws PreconditionError on a singular matrix.
Matrix inverse(const Matrix& m);

// Square matrix over F[X].
using PolyMatrix = std::vector<std::vector<Poly>>;

struct InvariantFactorList {
  std::vector<Poly> factors;  // nontrivial, monic, each dividing the next
  friend bool operator==(const InvariantFactorList&, const InvariantFactorList&) = default;
};

// Nontrivial invariant factors of a square matrix over F[X]: Smith form with
// a minimal-degree pivot (leftmost-topmost among ties), diagonal made monic,
// ascending degree.
InvariantFactorList smith_invariant_factors(PolyMatrix m);
// X I - M.
PolyMatrix characteristic_matrix(const Matrix& m);
// Invariant factors of M, from the relation matrix of a cyclic flag of
// Krylov subspaces. Agrees with smith_invariant_factors(characteristic_matrix(M)).
InvariantFactorList invariant_factors(const Matrix& m);
Poly minimal_polynomial(const Matrix& m);
Poly characteristic_polynomial(const Matrix& m);
// Same size, same field, same invariant factors.
bool similar(const Matrix& a, const Matrix& b);

// Prime-power elementary divisor with multiplicity.
struct ElementaryDivisor {
  Poly divisor;  // monic power of a monic irreducible
  std::size_t multiplicity = 0;
  friend bool operator==(const ElementaryDivisor&, const ElementaryDivisor&) = default;
};
// Elementary divisors of an invariant factor list over a finite field, with
// equal divisors merged, sorted by polynomial.
std::vector<ElementaryDivisor> elementary_divisors(const InvariantFactorList& inv);
// Inverse conversion: the i-th largest invariant factor is the product of the
// i-th largest powers of each irreducible.
InvariantFactorList invariant_factors_from_elementary(const std::vector<ElementaryDivisor>& divs);

struct JordanBlock {
  Value eigenvalue;
  std::size_t size = 0;
  friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};
// Blocks sorted by eigenvalue, then by decreasing size.
struct JordanType {
  std::vector<JordanBlock> blocks;
  std::size_t dimension() const;
  std::vector<std::size_t> sizes() const;
  void normalize();
  friend bool operator==(const JordanType&, const JordanType&) = default;
};
// Block sizes of a nilpotent N from its rank sequence.
JordanType nilpotent_jordan_type(const Matrix& n);

// Builds the Pascal matrix S for (f, b) and checks
// S^{-1} (C_{f(X+b)} + b I) S = C_{f(X)}; throws ConsistencyError otherwise.
Matrix pascal_similarity(const Poly& f, const Value& b);
// Whether g(C) ~ C_f (+) ... (+) C_f (deg g copies), C = companion(a^{-m} f(g)).
bool verify_ind2(const Poly& f, const Poly& g);

}  // namespace aslab
