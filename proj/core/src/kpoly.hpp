#pragma once

// Dense univariate polynomials over a finite field, stored as index vectors
// (low degree first, no trailing zeros). Used for the numerators and
// denominators of K(Z) elements.

#include <cstdint>
#include <utility>
#include <vector>

#include "aslab/field.hpp"

namespace aslab::detail {

using KPoly = std::vector<std::uint32_t>;

inline void trim(KPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline bool is_one_poly(const KPoly& a) { return a.size() == 1 && a[0] == 1; }

inline KPoly kadd(const FieldDescriptor& k, const KPoly& a, const KPoly& b) {
  const KPoly& big = a.size() >= b.size() ? a : b;
  const KPoly& small = a.size() >= b.size() ? b : a;
  KPoly r = big;
  for (std::size_t i = 0; i < small.size(); ++i) r[i] = k.fadd(r[i], small[i]);
  trim(r);
  return r;
}

inline KPoly kneg(const FieldDescriptor& k, KPoly a) {
  for (auto& c : a) c = k.fneg(c);
  return a;
}

inline KPoly ksub(const FieldDescriptor& k, const KPoly& a, const KPoly& b) {
  KPoly r = a;
  if (r.size() < b.size()) r.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.fsub(r[i], b[i]);
  trim(r);
  return r;
}

inline KPoly kscale(const FieldDescriptor& k, const KPoly& a, std::uint32_t c) {
  if (c == 0) return {};
  KPoly r = a;
  if (c == 1) return r;
  for (auto& x : r) x = k.fmul(x, c);
  return r;
}

inline KPoly kmul(const FieldDescriptor& k, const KPoly& a, const KPoly& b) {
  if (a.empty() || b.empty()) return {};
  if (is_one_poly(a)) return b;
  if (is_one_poly(b)) return a;
  KPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] = k.fadd(r[i + j], k.fmul(a[i], b[j]));
    }
  }
  trim(r);
  return r;
}

// a = q*b + r with deg r < deg b; b nonzero.
inline std::pair<KPoly, KPoly> kdivmod(const FieldDescriptor& k, const KPoly& a, const KPoly& b) {
  if (a.size() < b.size()) return {{}, a};
  KPoly r = a;
  KPoly q(a.size() - b.size() + 1, 0);
  const std::uint32_t lead_inv = k.finv(b.back());
  for (std::size_t top = a.size(); top >= b.size(); --top) {
    const std::size_t shift = top - b.size();
    const std::uint32_t c = k.fmul(r[top - 1], lead_inv);
    q[shift] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = k.fsub(r[shift + j], k.fmul(c, b[j]));
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
  return {std::move(q), std::move(r)};
}

inline KPoly kmonic(const FieldDescriptor& k, const KPoly& a) {
  if (a.empty()) return a;
  return kscale(k, a, k.finv(a.back()));
}

inline KPoly kgcd(const FieldDescriptor& k, KPoly a, KPoly b) {
  while (!b.empty()) {
    KPoly r = kdivmod(k, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return kmonic(k, a);
}

inline KPoly kderivative(const FieldDescriptor& k, const KPoly& a) {
  KPoly r;
  if (a.size() <= 1) return r;
  r.resize(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = k.fmul(a[i], static_cast<std::uint32_t>(i % k.characteristic()));
  trim(r);
  return r;
}

inline std::uint32_t keval(const FieldDescriptor& k, const KPoly& a, std::uint32_t x) {
  std::uint32_t acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = k.fadd(k.fmul(acc, x), a[i]);
  return acc;
}

}  // namespace aslab::detail
