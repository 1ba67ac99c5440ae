#pragma once

// Conversions between K(Z) values and polynomials over K in Z.

#include <cstdint>
#include <vector>

#include "aslab/poly.hpp"

namespace aslab::detail {

inline Poly kpoly(const Field& K, const std::vector<std::uint32_t>& idx) {
  std::vector<Value> v;
  v.reserve(idx.size());
  for (auto i : idx) v.push_back(K->element(i));
  return Poly(K, std::move(v));
}

inline std::vector<std::uint32_t> indices(const Poly& f) {
  std::vector<std::uint32_t> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(c.index);
  return v;
}

// The K(Z) element n/d; d nonzero.
inline Value rational_value(const Field& F, const Poly& n, const Poly& d) {
  Value num{0, indices(n), {1}};
  Value den{0, indices(d), {1}};
  return F->div(num, den);
}

inline Value polynomial_value(const Field&, const Poly& n) { return Value{0, indices(n), {1}}; }

inline bool is_polynomial(const Value& x) { return x.den.size() == 1; }

}  // namespace aslab::detail
