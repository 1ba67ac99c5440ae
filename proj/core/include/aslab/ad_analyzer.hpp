#pragma once

// Conditions (C1)-(C3) on ad A, recovery of the Artin-Schreier data, and the
// structural conclusions that follow from them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aslab/linalg.hpp"

namespace aslab {

// Named evidence that a condition fails or a conclusion does not hold.
struct Witness {
  std::string condition;  // "C1", "C2", "C3", "recovery", ...
  std::string detail;
};

struct Recovered {
  std::uint32_t p = 0;
  unsigned n = 0;
  unsigned e = 0;
  Value a;
  Poly q;  // X^{p^n} - X - a
  Poly h;  // q(X^{p^e}) = minimal polynomial of A
};

struct InvertibilityVerdict {
  bool all_invertible = true;
  std::size_t checked = 0;
  std::vector<Witness> failures;
};

struct AdReport {
  Field field;
  std::size_t size = 0;  // m for A in M_m(F)
  bool c1 = false;       // minimal polynomial of ad A splits over F
  bool c2 = false;       // eigenvalues of ad A form a subfield
  bool c3 = false;       // A cyclic with irreducible minimal polynomial
  std::vector<Value> eigenvalues;  // sorted
  bool eigenvalue_set_is_subfield = false;
  std::map<Value, std::size_t> eigenspace_dims;
  InvariantFactorList ad_invariant_factors;
  InvariantFactorList invariant_factors;  // of A
  bool diagonalizable = false;
  std::optional<Recovered> recovered;
  std::optional<InvertibilityVerdict> eigenvector_invertibility;
  std::vector<Witness> witnesses;       // why C1-C3 fail
  std::vector<Witness> inconsistencies; // conclusions that failed although C1-C3 hold
};

inline constexpr std::size_t kMaxAnalyzeRational = 9;
inline constexpr std::size_t kMaxAnalyzeFinite = 32;

// Full analysis. When C1-C3 hold, every conclusion is checked and eigenvector
// invertibility is sampled with `seed`.
AdReport analyze(const Matrix& a, std::uint64_t seed = 0);

// Companion matrix of h = X^{p^{n+e}} - X^{p^e} - a. F must contain E_{p^n},
// checked by counting the roots of X^{p^n} - X in F.
Matrix build_gas_companion(const Field& field, unsigned n, unsigned e, const Value& a);

// Every basis eigenvector of ad A for each nonzero eigenvalue, plus 10 seeded
// random nonzero combinations per eigenspace, reshaped to m x m, must be
// invertible.
InvertibilityVerdict check_eigenvector_invertibility(const Matrix& a, const AdReport& report, std::uint64_t seed);

// A ~ A + bI; requires mu_A(X) = mu_A(X + b).
bool check_similarity_shift(const Matrix& a, const Value& b);

// Irreducibility over the field of f: factor_finite for finite fields and the
// bivariate oracle for K(Z).
bool is_irreducible_over_field(const Poly& f);

}  // namespace aslab
