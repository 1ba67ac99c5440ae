#include "aslab/irred.hpp"

#include <algorithm>
#include <numeric>

#include "kpoly.hpp"
#include "zpoly.hpp"

namespace aslab {

namespace {

constexpr std::uint64_t kMaxOracleCandidates = 50'000'000;

std::uint64_t ipow(std::uint64_t b, unsigned k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= b;
  return r;
}

std::uint32_t primitive_element(const FieldDescriptor& K) {
  const std::uint32_t q = K.size();
  for (std::uint32_t x = 1; x < q; ++x) {
    std::uint32_t y = x, order = 1;
    while (y != 1) {
      y = K.fmul(y, x);
      ++order;
    }
    if (order == q - 1) return x;
  }
  return 1;
}

std::vector<Poly> monic_divisors_of_degree(const std::vector<Factor>& factors, const Field& K, std::size_t k) {
  std::vector<Poly> divs{Poly::constant(K, K->one())};
  for (const auto& fac : factors) {
    const std::size_t n = divs.size();
    Poly power = Poly::constant(K, K->one());
    for (unsigned m = 1; m <= fac.multiplicity; ++m) {
      power = power * fac.factor;
      for (std::size_t i = 0; i < n; ++i) {
        Poly d = divs[i] * power;
        if (*d.degree() <= k) divs.push_back(std::move(d));
      }
    }
  }
  std::vector<Poly> out;
  for (auto& d : divs)
    if (*d.degree() == k) out.push_back(std::move(d));
  std::sort(out.begin(), out.end());
  return out;
}

// Whether monic f divides a, both index vectors over K (low degree first).
bool divides_monic(const FieldDescriptor& K, const std::vector<std::uint32_t>& f, std::vector<std::uint32_t> a) {
  const std::size_t df = f.size();
  for (std::size_t top = a.size(); top >= df; --top) {
    const std::uint32_t c = a[top - 1];
    if (c == 0) continue;
    const std::size_t shift = top - df;
    for (std::size_t j = 0; j < df; ++j)
      if (f[j] != 0) a[shift + j] = K.fsub(a[shift + j], K.fmul(c, f[j]));
  }
  for (std::size_t i = 0; i + 1 < df && i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

// Coefficients of h in K[Z] after clearing denominators and content.
std::vector<Poly> primitive_coefficients(const Poly& h) {
  const Field& K = h.field()->base();
  Poly L = Poly::constant(K, K->one());
  for (const auto& c : h.coeffs()) L = lcm(L, detail::kpoly(K, c.den));
  std::vector<Poly> H;
  for (const auto& c : h.coeffs()) H.push_back(detail::kpoly(K, c.num) * exact_div(L, detail::kpoly(K, c.den)));
  Poly content(K);
  for (const auto& c : H) content = gcd(content, c);
  for (auto& c : H) c = exact_div(c, content);
  return H;
}

}  // namespace

void validate(const GasInstance& inst) {
  if (!inst.K || !inst.K->is_finite()) throw PreconditionError("GasInstance needs a finite field K");
  if (inst.n < 1 || inst.r < 1) throw PreconditionError("GasInstance needs n >= 1 and r >= 1");
  if (!same_field(inst.g.field(), inst.K)) throw PreconditionError("g must have coefficients in K");
  if (!inst.g.degree() || *inst.g.degree() < 1)
    throw PreconditionError("g must have degree >= 1; constant g is a univariate question for factor_finite");
  if (*inst.g.degree() % inst.K->characteristic() == 0)
    throw PreconditionError("deg g = " + std::to_string(*inst.g.degree()) + " is divisible by p");
}

Poly gas_polynomial(const GasInstance& inst) {
  validate(inst);
  const Field F = rational_function_field(inst.K);
  const std::uint32_t p = inst.K->characteristic();
  const std::uint64_t pe = ipow(p, inst.e);
  const std::uint64_t top = ipow(p, inst.n + inst.e);
  std::vector<Value> c(top + 1, F->zero());
  c[top] = F->one();
  c[pe] = F->neg(F->one());
  c[0] = F->neg(detail::polynomial_value(F, inflate(inst.g, inst.r)));
  return Poly(F, std::move(c));
}

GasVerdict gas_irreducible(const GasInstance& inst) {
  validate(inst);
  const std::uint32_t p = inst.K->characteristic();
  GasVerdict v;
  v.r0 = inst.r;
  while (v.r0 % p == 0) {
    v.r0 /= p;
    ++v.s;
  }
  if (v.s == 0) v.conditions.push_back("i");
  if (inst.e == 0) v.conditions.push_back("ii");
  if (!is_pth_power_coeffs(inst.g)) v.conditions.push_back("iii");
  v.irreducible = !v.conditions.empty();
  const std::string split = "r = " + std::to_string(v.r0) + "*" + std::to_string(p) + "^" + std::to_string(v.s);
  if (v.irreducible) {
    std::string conds;
    for (const auto& c : v.conditions) conds += (conds.empty() ? "" : ", ") + c;
    v.reason = "irreducible by condition " + conds + " (" + split + ")";
    return v;
  }
  // e >= 1, s >= 1, g in K^p[Z]: h = Q^p with
  // Q = X^{p^{n+e-1}} - X^{p^{e-1}} - g~(Z^{r/p}), g~ the coefficient-wise p-th root.
  const Field F = rational_function_field(inst.K);
  std::vector<Value> groot;
  for (const auto& c : inst.g.coeffs()) groot.push_back(inst.K->pth_root(c));
  const Poly gq = inflate(Poly(inst.K, groot), inst.r / p);
  const std::uint64_t top = ipow(p, inst.n + inst.e - 1);
  const std::uint64_t low = ipow(p, inst.e - 1);
  std::vector<Value> q(top + 1, F->zero());
  q[top] = F->one();
  q[low] = F->neg(F->one());
  q[0] = F->neg(detail::polynomial_value(F, gq));
  Poly Q(F, std::move(q));
  if (!(pow(Q, p) == gas_polynomial(inst))) throw ConsistencyError("p-th power witness does not reproduce h");
  v.witness = "(" + format_poly(Q) + ")^" + std::to_string(p);
  v.witness_root = std::move(Q);
  v.reason = "reducible: e >= 1, " + split + " with s >= 1 and g in K^p[Z], so h = " + v.witness;
  return v;
}

std::size_t total_degree(const Poly& h) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) {
    const auto& c = h.coeffs()[i];
    if (c.num.empty()) continue;
    d = std::max(d, i + c.num.size() - 1 + (c.den.size() - 1));
  }
  return d;
}

std::optional<Poly> bivariate_factor(const Poly& h) {
  const Field& F = h.field();
  if (F->is_finite()) throw PreconditionError("bivariate oracle needs a polynomial over K(Z)");
  const Field& K = F->base();
  const FieldDescriptor& k = *K;
  if (K->size() > kOracleMaxFieldSize) throw CapExceeded("bivariate oracle supports |K| <= 9");
  if (!h.degree() || *h.degree() < 1) throw PreconditionError("bivariate oracle needs deg_X h >= 1");
  if (total_degree(h) > kOracleMaxTotalDegree) throw CapExceeded("bivariate oracle supports total degree <= 12");
  const std::size_t P = *h.degree();
  if (P == 1) return std::nullopt;

  std::vector<Poly> H = primitive_coefficients(h);
  // Make H monic: c^{P-1} h(X/c) when the leading coefficient c is not constant.
  const Poly lc = H[P];
  const bool transformed = *lc.degree() > 0;
  if (transformed) {
    // Coefficient i gets c^{P-1-i}.
    Poly power = Poly::constant(K, K->one());
    for (std::size_t i = P; i-- > 0;) {
      H[i] = H[i] * power;
      power = power * lc;
    }
    H[P] = Poly::constant(K, K->one());
  } else {
    const Value inv = K->inv(lc.coeffs()[0]);
    for (auto& c : H) c = c.scaled(inv);
  }

  std::size_t degz = 0;
  for (const auto& c : H)
    if (c.degree()) degz = std::max(degz, *c.degree());
  // Newton slope rho = max j / (P - i) over terms X^i Z^j, i < P.
  std::size_t rho_num = 0, rho_den = 1;
  for (std::size_t i = 0; i < P; ++i) {
    if (H[i].is_zero()) continue;
    const std::size_t j = *H[i].degree();
    if (j * rho_den > rho_num * (P - i)) {
      rho_num = j;
      rho_den = P - i;
    }
  }

  // H(X, z) for every z in K.
  const std::uint32_t q = K->size();
  std::vector<std::vector<std::uint32_t>> at(q);
  for (std::uint32_t z = 0; z < q; ++z) {
    at[z].resize(P + 1);
    for (std::size_t i = 0; i <= P; ++i) at[z][i] = detail::keval(k, detail::indices(H[i]), z);
  }
  std::vector<Value> h0;
  for (auto c : at[0]) h0.push_back(K->element(c));
  const auto base_factors = factor_finite(Poly(K, h0));

  std::vector<Value> HF;
  for (const auto& c : H) HF.push_back(detail::polynomial_value(F, c));
  const Poly Hpoly(F, HF);

  for (std::size_t deg = 1; 2 * deg <= P; ++deg) {
    // Free coefficients: Z^j in the coefficient of X^i, 1 <= j <= bound_i.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < deg; ++i) {
      const std::size_t bound = std::min(degz, (deg - i) * rho_num / rho_den);
      for (std::size_t j = 1; j <= bound; ++j) slots.emplace_back(i, j);
    }
    if (slots.size() > 24) throw CapExceeded("bivariate oracle search space too large");
    const std::uint64_t count = ipow(q, static_cast<unsigned>(slots.size()));
    const auto seeds = monic_divisors_of_degree(base_factors, K, deg);
    if (count * seeds.size() > kMaxOracleCandidates) throw CapExceeded("bivariate oracle search space too large");
    // zpow[z][j] = z^j.
    std::vector<std::vector<std::uint32_t>> zpow(q, std::vector<std::uint32_t>(degz + 1, 0));
    for (std::uint32_t z = 0; z < q; ++z) {
      zpow[z][0] = 1;
      for (std::size_t j = 1; j <= degz; ++j) zpow[z][j] = k.fmul(zpow[z][j - 1], z);
    }
    std::vector<std::uint32_t> digits(slots.size(), 0);
    for (const auto& seed : seeds) {
      for (std::uint64_t counter = 0; counter < count; ++counter) {
        std::uint64_t c = counter;
        for (auto& d : digits) {
          d = static_cast<std::uint32_t>(c % q);
          c /= q;
        }
        bool ok = true;
        for (std::uint32_t z = 1; z < q && ok; ++z) {
          std::vector<std::uint32_t> fz(deg + 1, 0);
          fz[deg] = 1;
          for (std::size_t i = 0; i < deg; ++i) fz[i] = seed.coeffs()[i].index;
          for (std::size_t s = 0; s < slots.size(); ++s)
            if (digits[s] != 0) {
              auto& cell = fz[slots[s].first];
              cell = k.fadd(cell, k.fmul(digits[s], zpow[z][slots[s].second]));
            }
          ok = divides_monic(k, fz, at[z]);
        }
        if (!ok) continue;
        std::vector<Poly> coeffs(deg + 1, Poly(K));
        for (std::size_t i = 0; i < deg; ++i) coeffs[i] = Poly::constant(K, seed.coeffs()[i]);
        coeffs[deg] = Poly::constant(K, K->one());
        for (std::size_t s = 0; s < slots.size(); ++s)
          if (digits[s] != 0)
            coeffs[slots[s].first] =
                coeffs[slots[s].first] + Poly::monomial(K, K->element(digits[s]), slots[s].second);
        std::vector<Value> fv;
        for (const auto& c : coeffs) fv.push_back(detail::polynomial_value(F, c));
        const Poly f(F, std::move(fv));
        if (!(Hpoly % f).is_zero()) continue;
        if (!transformed) return f;
        // f(X) | c^{P-1} h(X/c), so f(cX) | h up to a unit.
        const Value cval = detail::polynomial_value(F, lc);
        return compose(f, Poly(F, {F->zero(), cval})).monic();
      }
    }
  }
  return std::nullopt;
}

bool bivariate_irreducible_oracle(const Poly& h) { return !bivariate_factor(h).has_value(); }

bool nhg1_property_check(const Poly& f, const Poly& g) {
  require_same_field(f.field(), g.field(), "nhg1_property_check");
  if (!f.field()->is_finite()) throw PreconditionError("nhg1_property_check needs a finite coefficient domain");
  if (!f.degree() || !g.degree() || *f.degree() < 1 || *g.degree() < 1)
    throw PreconditionError("nhg1_property_check needs positive degrees");
  if (std::gcd(*f.degree(), *g.degree()) != 1)
    throw PreconditionError("gcd(deg f, deg g) = " + std::to_string(std::gcd(*f.degree(), *g.degree())) +
                            " is not 1");
  const Field F = rational_function_field(f.field());
  std::vector<Value> c;
  for (const auto& a : f.coeffs()) c.push_back(F->constant(a.index));
  c[0] = F->sub(c[0], detail::polynomial_value(F, g));
  return bivariate_irreducible_oracle(Poly(F, std::move(c)));
}

std::vector<GasInstance> irreducibility_grid() {
  std::vector<GasInstance> out;
  for (std::uint32_t p : {2u, 3u})
    for (std::uint32_t kdeg : {1u, 2u}) {
      const Field K = extension_field(p, kdeg);
      const std::uint32_t c = primitive_element(*K);
      std::vector<Poly> gs{Poly(K, {K->zero(), K->one()}), Poly(K, {K->one(), K->one()})};
      if (c != 1) gs.push_back(Poly(K, {K->zero(), K->element(c)}));
      std::vector<unsigned> rs{1, 2, 3, p, 2 * p};
      std::sort(rs.begin(), rs.end());
      rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
      for (unsigned n : {1u, 2u})
        for (unsigned e : {0u, 1u})
          for (unsigned r : rs)
            for (const auto& g : gs) {
              const std::uint64_t xdeg = ipow(p, n + e);
              const std::uint64_t zdeg = static_cast<std::uint64_t>(r) * *g.degree();
              if (std::max(xdeg, zdeg) > kOracleMaxTotalDegree) continue;
              out.push_back({K, n, e, r, g});
            }
    }
  return out;
}

std::string format_instance(const GasInstance& inst) {
  return inst.K->spec() + " n=" + std::to_string(inst.n) + " e=" + std::to_string(inst.e) +
         " r=" + std::to_string(inst.r) + " g=" + format_poly(inst.g, 'Z');
}

}  // namespace aslab
