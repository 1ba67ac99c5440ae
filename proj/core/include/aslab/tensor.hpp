#pragma once

// Jordan types of tensor products J_n(alpha) (x) J_m(beta) in characteristic p
// and elementary divisors of ad on sums of equal-size Jordan blocks.

#include <cstdint>
#include <vector>

#include "aslab/linalg.hpp"

namespace aslab {

struct TensorInstance {
  Field field;  // finite, characteristic p
  std::size_t n = 1;
  std::size_t m = 1;
  Value alpha;
  Value beta;
};

inline constexpr std::size_t kMaxTensorDim = 256;

// n blocks of size m with eigenvalue alpha + beta. Requires m = p^e and n <= m.
JordanType tensor_jordan_type_formula(const TensorInstance& inst);
// Rank sequence of J_n(alpha) (x) I + I (x) J_m(beta) - (alpha + beta) I.
JordanType tensor_jordan_type_oracle(const TensorInstance& inst);
// Whether m is a power of p (and n <= m), so the formula applies.
bool formula_applies(const TensorInstance& inst);

// Elementary divisors of ad A for A = J_{p^e}(alpha_1) (+) ... (+) J_{p^e}(alpha_s):
// (X - gamma)^{p^e} with multiplicity p^e * #{(i, j) : alpha_i - alpha_j = gamma}.
// Divisors are merged by polynomial, so X - 1 and X + 1 coincide over GF(2).
std::vector<ElementaryDivisor> ad_elementary_divisors_blocksum(const Field& field, const std::vector<Value>& eigs,
                                                               unsigned e);
// The same data read off the explicit ad matrix.
std::vector<ElementaryDivisor> ad_elementary_divisors_direct(const Field& field, const std::vector<Value>& eigs,
                                                             unsigned e);

// C(n, k) mod p from a row of Pascal's triangle.
std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

}  // namespace aslab
