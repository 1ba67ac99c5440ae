#include "aslab/tensor.hpp"

#include <algorithm>

namespace aslab {

namespace {

void check_instance(const TensorInstance& inst) {
  if (!inst.field || !inst.field->is_finite()) throw PreconditionError("tensor instance needs a finite field");
  if (inst.n < 1 || inst.m < 1) throw PreconditionError("block sizes must be at least 1");
}

}  // namespace

bool formula_applies(const TensorInstance& inst) {
  const std::uint32_t p = inst.field->characteristic();
  std::size_t m = inst.m;
  while (m % p == 0) m /= p;
  return m == 1 && inst.n <= inst.m;
}

JordanType tensor_jordan_type_formula(const TensorInstance& inst) {
  check_instance(inst);
  if (!formula_applies(inst))
    throw PreconditionError("the closed formula needs m = p^e and n <= m; use the oracle");
  JordanType jt;
  const Value gamma = inst.field->add(inst.alpha, inst.beta);
  for (std::size_t i = 0; i < inst.n; ++i) jt.blocks.push_back({gamma, inst.m});
  return jt;
}

JordanType tensor_jordan_type_oracle(const TensorInstance& inst) {
  check_instance(inst);
  if (inst.n * inst.m > kMaxTensorDim) throw CapExceeded("tensor oracle supports n*m <= 256");
  const Field& F = inst.field;
  const Matrix x = kronecker(jordan_block(F, inst.alpha, inst.n), Matrix::identity(F, inst.m)) +
                   kronecker(Matrix::identity(F, inst.n), jordan_block(F, inst.beta, inst.m));
  const Value gamma = F->add(inst.alpha, inst.beta);
  JordanType jt = nilpotent_jordan_type(x - Matrix::scalar(F, inst.n * inst.m, gamma));
  for (auto& b : jt.blocks) b.eigenvalue = gamma;
  jt.normalize();
  return jt;
}

std::vector<ElementaryDivisor> ad_elementary_divisors_blocksum(const Field& field, const std::vector<Value>& eigs,
                                                               unsigned e) {
  if (!field->is_finite()) throw PreconditionError("eigenvalues must lie in a finite field");
  if (eigs.empty()) throw PreconditionError("need at least one block");
  std::uint64_t pe = 1;
  for (unsigned i = 0; i < e; ++i) pe *= field->characteristic();
  std::vector<ElementaryDivisor> out;
  for (const auto& ai : eigs)
    for (const auto& aj : eigs) {
      const Value gamma = field->sub(ai, aj);
      Poly d = pow(Poly(field, {field->neg(gamma), field->one()}), pe);
      auto it = std::find_if(out.begin(), out.end(), [&](const ElementaryDivisor& x) { return x.divisor == d; });
      if (it == out.end()) out.push_back({std::move(d), pe});
      else it->multiplicity += pe;
    }
  std::sort(out.begin(), out.end(),
            [](const ElementaryDivisor& a, const ElementaryDivisor& b) { return a.divisor < b.divisor; });
  return out;
}

std::vector<ElementaryDivisor> ad_elementary_divisors_direct(const Field& field, const std::vector<Value>& eigs,
                                                             unsigned e) {
  std::size_t pe = 1;
  for (unsigned i = 0; i < e; ++i) pe *= field->characteristic();
  std::vector<Matrix> blocks;
  for (const auto& a : eigs) blocks.push_back(jordan_block(field, a, pe));
  return elementary_divisors(invariant_factors(ad_matrix(direct_sum(blocks))));
}

std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::vector<std::uint32_t> row{1 % p};
  for (std::uint64_t r = 1; r <= n; ++r) {
    std::vector<std::uint32_t> next(r + 1);
    next[0] = next[r] = 1 % p;
    for (std::uint64_t c = 1; c < r; ++c) next[c] = (row[c - 1] + row[c]) % p;
    row = std::move(next);
  }
  return row[k];
}

}  // namespace aslab
