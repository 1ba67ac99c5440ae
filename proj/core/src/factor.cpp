#include <algorithm>

#include "aslab/poly.hpp"
#include "zpoly.hpp"

namespace aslab {

using detail::kpoly;

namespace {

constexpr std::size_t kMaxFactorDegree = 64;
constexpr std::size_t kMaxRootCandidates = 2'000'000;

Poly one_poly(const Field& f) { return Poly::constant(f, f->one()); }

// Coefficient-wise p-th root of f(X^p).
Poly pth_root_poly(const Poly& f) {
  const auto& F = *f.field();
  const std::uint32_t p = F.characteristic();
  std::vector<Value> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(F.pth_root(f.coeffs()[i]));
  return Poly(f.field(), std::move(v));
}

void squarefree(const Poly& f, unsigned mult, std::vector<Factor>& out) {
  const std::uint32_t p = f.field()->characteristic();
  Poly c = gcd(f, f.derivative());
  Poly w = exact_div(f, c);
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly z = exact_div(w, y);
    if (!z.is_one()) out.push_back({z.monic(), i * mult});
    ++i;
    w = std::move(y);
    c = exact_div(c, w);
  }
  if (!c.is_one()) squarefree(pth_root_poly(c), mult * p, out);
}

std::vector<std::pair<Poly, std::size_t>> distinct_degree(Poly f) {
  const std::uint64_t q = f.field()->size();
  std::vector<std::pair<Poly, std::size_t>> out;
  const Poly x = Poly::x(f.field());
  Poly h = x % f;
  for (std::size_t d = 1; f.degree() && 2 * d <= *f.degree(); ++d) {
    h = pow_mod(h, q, f);
    Poly g = gcd(f, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = exact_div(f, g);
      h = h % f;
    }
  }
  if (f.degree() && *f.degree() > 0) out.emplace_back(f.monic(), *f.degree());
  return out;
}

// Deterministic sequence of nonconstant trial polynomials of degree < deg f.
Poly trial_poly(const Field& field, std::uint64_t counter) {
  const std::uint64_t q = field->size();
  std::vector<Value> v;
  std::uint64_t c = counter + q;
  while (c > 0) {
    v.push_back(field->element(static_cast<std::uint32_t>(c % q)));
    c /= q;
  }
  return Poly(field, std::move(v));
}

// A polynomial whose gcd with f splits the equal-degree product f for a
// positive fraction of trial elements u.
Poly splitting_witness(const Poly& u, const Poly& f, std::size_t d) {
  const auto& F = *f.field();
  const std::uint64_t q = F.size();
  if (F.characteristic() == 2) {
    // Absolute trace to F_2 of u in F_{q^d}: sum of u^{2^i}, i < k d.
    const std::uint64_t steps = static_cast<std::uint64_t>(F.degree()) * d;
    Poly t = u % f;
    Poly acc = t;
    for (std::uint64_t i = 1; i < steps; ++i) {
      t = mul_mod(t, t, f);
      acc = acc + t;
    }
    return acc;
  }
  // u^{(q^d-1)/2} = prod_{i<d} (u^{(q-1)/2})^{q^i}.
  Poly a = pow_mod(u, (q - 1) / 2, f);
  Poly acc = a;
  for (std::size_t i = 1; i < d; ++i) {
    a = pow_mod(a, q, f);
    acc = mul_mod(acc, a, f);
  }
  return acc - one_poly(f.field());
}

void equal_degree(const Poly& f, std::size_t d, std::vector<Poly>& out) {
  if (*f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  for (std::uint64_t counter = 0;; ++counter) {
    Poly u = trial_poly(f.field(), counter);
    if (*u.degree() >= *f.degree()) throw ConsistencyError("equal-degree splitting exhausted trial polynomials");
    Poly g = gcd(f, splitting_witness(u, f, d));
    if (!g.is_one() && g.degree() && *g.degree() < *f.degree()) {
      equal_degree(g, d, out);
      equal_degree(exact_div(f, g), d, out);
      return;
    }
  }
}

std::vector<Poly> monic_divisors(const std::vector<Factor>& factors, const Field& field) {
  std::vector<Poly> divs{one_poly(field)};
  for (const auto& fac : factors) {
    const std::size_t n = divs.size();
    Poly power = one_poly(field);
    for (unsigned m = 1; m <= fac.multiplicity; ++m) {
      power = power * fac.factor;
      for (std::size_t i = 0; i < n; ++i) divs.push_back(divs[i] * power);
    }
  }
  return divs;
}

std::vector<Value> roots_rational(const Poly& f_in) {
  const Field& F = f_in.field();
  const Field& K = F->base();
  std::vector<Value> roots;
  // Strip the root 0.
  std::size_t low = 0;
  while (F->is_zero(f_in.coeffs()[low])) ++low;
  if (low > 0) roots.push_back(F->zero());
  std::vector<Value> rest(f_in.coeffs().begin() + static_cast<std::ptrdiff_t>(low), f_in.coeffs().end());
  const Poly f(F, rest);
  if (*f.degree() == 0) return roots;

  // Clear denominators: P_i in K[Z].
  Poly L = one_poly(K);
  for (const auto& c : f.coeffs()) L = lcm(L, kpoly(K, c.den));
  std::vector<Poly> P;
  for (const auto& c : f.coeffs()) P.push_back(kpoly(K, c.num) * exact_div(L, kpoly(K, c.den)));
  const std::size_t n = P.size() - 1;

  const auto num_divs = monic_divisors(factor_finite(P[0]), K);
  const auto den_divs = monic_divisors(factor_finite(P[n]), K);
  const std::uint64_t units = K->size() - 1;
  if (num_divs.size() * den_divs.size() * units > kMaxRootCandidates)
    throw CapExceeded("too many rational root candidates");

  for (const auto& v : den_divs) {
    // Powers of v for the homogenized evaluation sum_i P_i u^i v^{n-i}.
    std::vector<Poly> vpow{one_poly(K)};
    for (std::size_t i = 1; i <= n; ++i) vpow.push_back(vpow.back() * v);
    for (const auto& u0 : num_divs) {
      if (!gcd(u0, v).is_one()) continue;
      for (std::uint32_t unit = 1; unit <= units; ++unit) {
        const Poly u = u0.scaled(K->element(unit));
        Poly acc(K);
        Poly upow = one_poly(K);
        for (std::size_t i = 0; i <= n; ++i) {
          acc = acc + P[i] * upow * vpow[n - i];
          upow = upow * u;
        }
        if (acc.is_zero()) roots.push_back(detail::rational_value(F, u, v));
      }
    }
  }
  return roots;
}

}  // namespace

std::vector<Factor> factor_finite(const Poly& f) {
  if (!f.field()->is_finite()) throw PreconditionError("factor_finite needs a finite coefficient field");
  if (!f.degree()) throw PreconditionError("factor_finite of the zero polynomial");
  if (*f.degree() > kMaxFactorDegree) throw CapExceeded("factor_finite supports degree <= 64");
  std::vector<Factor> out;
  if (*f.degree() == 0) return out;
  std::vector<Factor> sqf;
  squarefree(f.monic(), 1, sqf);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [g, d] : distinct_degree(part)) {
      std::vector<Poly> irr;
      equal_degree(g, d, irr);
      for (auto& h : irr) out.push_back({std::move(h), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return a.factor < b.factor;
  });
  // Merge repeated factors (only possible through the p-th root recursion).
  std::vector<Factor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().factor == fac.factor) merged.back().multiplicity += fac.multiplicity;
    else merged.push_back(std::move(fac));
  }
  return merged;
}

bool is_irreducible_finite(const Poly& f) {
  if (!f.degree() || *f.degree() < 1) return false;
  auto fs = factor_finite(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

std::vector<Value> roots_in_field(const Poly& f) {
  if (f.is_zero()) throw PreconditionError("roots of the zero polynomial");
  const auto& F = *f.field();
  std::vector<Value> roots;
  if (F.is_finite()) {
    for (std::uint32_t i = 0; i < F.size(); ++i) {
      Value x = F.element(i);
      if (F.is_zero(f.evaluate(x))) roots.push_back(std::move(x));
    }
  } else {
    roots = roots_rational(f);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

unsigned root_multiplicity(const Poly& f, const Value& x) {
  if (f.is_zero()) throw PreconditionError("root multiplicity in the zero polynomial");
  const Field& F = f.field();
  const Poly lin(F, {F->neg(x), F->one()});
  unsigned m = 0;
  Poly g = f;
  for (;;) {
    auto [q, r] = divmod(g, lin);
    if (!r.is_zero()) return m;
    ++m;
    g = std::move(q);
  }
}

}  // namespace aslab
