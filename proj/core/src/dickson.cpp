#include "aslab/dickson.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "aslab/irred.hpp"
#include "echelon.hpp"
#include "zpoly.hpp"

namespace aslab {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= b;
  return r;
}

using Exponents = std::vector<std::uint32_t>;

void check_terms(const MPoly& f) {
  if (f.terms.size() > kMaxDicksonTerms)
    throw CapExceeded("Dickson expansion exceeds " + std::to_string(kMaxDicksonTerms) + " terms");
}

void add_term(MPoly& f, const Exponents& e, std::uint32_t c) {
  c %= f.p;
  if (c == 0) return;
  auto [it, inserted] = f.terms.emplace(e, c);
  if (inserted) return;
  it->second = (it->second + c) % f.p;
  if (it->second == 0) f.terms.erase(it);
}

MPoly sub(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [e, c] : b.terms) add_term(r, e, r.p - c);
  return r;
}

MPoly mul(const MPoly& a, const MPoly& b) {
  MPoly r{a.p, a.nvars, {}};
  Exponents e(a.nvars);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(r, e, ca * cb);
    }
  check_terms(r);
  return r;
}

// f^p: coefficients lie in F_p, so only the exponents change.
MPoly frobenius(const MPoly& f) {
  MPoly r{f.p, f.nvars, {}};
  for (const auto& [k, c] : f.terms) {
    Exponents e = k;
    for (auto& x : e) x *= f.p;
    r.terms.emplace(std::move(e), c);
  }
  return r;
}

// f(B_i, B_1, ...): the A exponent moves to B_i.
MPoly substitute_a(const MPoly& f, std::size_t i) {
  MPoly r{f.p, f.nvars, {}};
  for (const auto& [k, c] : f.terms) {
    Exponents e = k;
    e[i] += e[0];
    e[0] = 0;
    add_term(r, e, c);
  }
  return r;
}

MPoly variable(std::uint32_t p, std::size_t nvars, std::size_t i) {
  MPoly r{p, nvars, {}};
  Exponents e(nvars, 0);
  e[i] = 1;
  r.terms.emplace(e, 1);
  return r;
}

// Evaluates sum_j l[j] x^{p^j}.
std::uint32_t eval_linearized(const FieldDescriptor& E, const std::vector<std::uint32_t>& l, std::uint32_t x) {
  std::uint32_t acc = 0;
  for (const auto c : l) {
    acc = E.fadd(acc, E.fmul(c, x));
    x = E.fpow(x, E.characteristic());
  }
  return acc;
}

std::vector<std::uint32_t> indices_of(const std::vector<Value>& xs) {
  std::vector<std::uint32_t> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.index);
  return out;
}

SubspaceR make_subspace(const Field& E, std::vector<Value> basis) {
  const auto& f = *E;
  const std::uint32_t p = f.characteristic();
  std::vector<std::uint32_t> elems{0};
  for (const auto& b : basis) {
    const std::size_t size = elems.size();
    for (std::uint32_t s = 1; s < p; ++s)
      for (std::size_t k = 0; k < size; ++k) elems.push_back(f.fadd(elems[k], f.fmul(s, b.index)));
  }
  std::sort(elems.begin(), elems.end());
  SubspaceR R{E, std::move(basis), {}};
  R.elements.reserve(elems.size());
  for (auto i : elems) R.elements.push_back(f.element(i));
  return R;
}

void check_subspace_caps(const FieldDescriptor& E, unsigned m) {
  if (!E.is_finite()) throw PreconditionError("subspaces live in a finite field, got " + E.spec());
  if (E.size() > kMaxSubspaceField) throw CapExceeded("subspace enumeration needs |E| <= 729");
  const unsigned n = E.degree();
  if (m > n) throw PreconditionError("subspace dimension exceeds n");
  const bool allowed = n <= 4 || (E.characteristic() == 3 && n == 6 && m <= 2);
  if (!allowed)
    throw CapExceeded("subspace enumeration supports n <= 4, or p = 3, n = 6, m <= 2; got " + E.spec() +
                      ", m = " + std::to_string(m));
}

bool is_subset(const std::vector<Value>& small, const std::vector<Value>& large) {
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

std::vector<Value> padded(const Poly& u, std::size_t dim) {
  std::vector<Value> v(dim, u.field()->zero());
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) v[i] = u.coeffs()[i];
  return v;
}

void certify(const Poly& q, const GasShape& shape, unsigned n) {
  const auto& F = *q.field();
  if (F.is_finite()) {
    if (!is_irreducible_finite(q)) throw PreconditionError(format_poly(q) + " is reducible");
    return;
  }
  const Field& K = F.base();
  const std::uint32_t p = F.characteristic();
  if (!detail::is_polynomial(shape.a))
    throw PreconditionError("cannot certify irreducibility of " + format_poly(q) + "; a is not a polynomial in Z");
  const Poly g = detail::kpoly(K, shape.a.num);
  if (g.degree().value_or(0) == 0) {
    std::vector<Value> c(shape.pn + 1, K->zero());
    c[shape.pn] = K->one();
    c[1] = K->neg(K->one());
    c[0] = K->neg(g.coeff(0));
    if (!is_irreducible_finite(Poly(K, std::move(c))))
      throw PreconditionError(format_poly(q) + " is reducible over " + K->spec());
    return;
  }
  if (*g.degree() % p == 0)
    throw PreconditionError("cannot certify irreducibility of " + format_poly(q) + "; deg a is divisible by p");
  const auto verdict = gas_irreducible(GasInstance{K, n, 0, 1, g});
  if (!verdict.irreducible) throw ConsistencyError("criterion rejects " + format_poly(q) + ": " + verdict.reason);
}

}  // namespace

std::uint32_t MPoly::evaluate(const FieldDescriptor& E, const std::vector<std::uint32_t>& point) const {
  if (point.size() != nvars) throw PreconditionError("MPoly::evaluate needs one value per variable");
  std::uint32_t acc = 0;
  for (const auto& [e, c] : terms) {
    std::uint32_t t = c;
    for (std::size_t i = 0; i < nvars; ++i)
      if (e[i]) t = E.fmul(t, E.fpow(point[i], e[i]));
    acc = E.fadd(acc, t);
  }
  return acc;
}

std::string MPoly::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += i == 0 ? std::string("A") : "B" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const bool minus = c == p - 1 && p > 2;
    if (!out.empty()) out += minus ? "-" : "+";
    else if (minus) out += "-";
    const std::uint32_t shown = minus ? 1 : c;
    if (mono.empty()) out += std::to_string(shown);
    else out += (shown == 1 ? "" : std::to_string(shown) + "*") + mono;
  }
  return out;
}

DicksonForm dickson_phi(unsigned m, std::uint32_t p) {
  if (m > 4) throw PreconditionError("dickson_phi supports m <= 4");
  if (p != 2 && p != 3) throw PreconditionError("dickson_phi supports p in {2, 3}");
  const std::size_t nvars = m + 1;
  MPoly phi = variable(p, nvars, 0);
  for (unsigned i = 1; i <= m; ++i) {
    MPoly lambda = substitute_a(phi, i);
    MPoly power = lambda;
    for (std::uint32_t k = 2; k < p; ++k) power = mul(power, lambda);
    phi = sub(frobenius(phi), mul(power, phi));
    check_terms(phi);
  }
  DicksonForm form{m, p, phi, std::vector<MPoly>(m, MPoly{p, nvars, {}})};
  for (const auto& [e, c] : phi.terms) {
    if (e[0] == ipow(p, m)) continue;
    unsigned j = 0;
    while (ipow(p, j) < e[0]) ++j;
    if (ipow(p, j) != e[0] || j >= m) throw ConsistencyError("Φ_m has a term outside A^{p^j}: A^" + std::to_string(e[0]));
    Exponents b = e;
    b[0] = 0;
    form.f[j].terms.emplace(std::move(b), c);
  }
  return form;
}

MPoly dickson_product(unsigned m, std::uint32_t p) {
  const std::size_t nvars = m + 1;
  MPoly acc{p, nvars, {{Exponents(nvars, 0), 1}}};
  std::vector<std::uint32_t> s(m, 0);
  for (std::uint64_t k = 0; k < ipow(p, m); ++k) {
    std::uint64_t t = k;
    MPoly factor = variable(p, nvars, 0);
    for (unsigned i = 0; i < m; ++i, t /= p) {
      Exponents e(nvars, 0);
      e[i + 1] = 1;
      add_term(factor, e, static_cast<std::uint32_t>(t % p));
    }
    acc = mul(acc, factor);
  }
  return acc;
}

std::vector<std::uint32_t> dickson_coefficients(const FieldDescriptor& E, const std::vector<std::uint32_t>& basis) {
  if (!E.is_finite()) throw PreconditionError("dickson_coefficients needs a finite field");
  const std::uint32_t p = E.characteristic();
  std::vector<std::uint32_t> l{1};
  for (const auto b : basis) {
    const std::uint32_t lambda = E.fpow(eval_linearized(E, l, b), p - 1);
    std::vector<std::uint32_t> next(l.size() + 1, 0);
    for (std::size_t j = 0; j < l.size(); ++j) {
      next[j + 1] = E.fadd(next[j + 1], E.fpow(l[j], p));
      next[j] = E.fsub(next[j], E.fmul(lambda, l[j]));
    }
    l = std::move(next);
  }
  l.pop_back();
  return l;
}

SubspaceR span(const Field& E, const std::vector<Value>& gens) {
  const auto& f = *E;
  if (!f.is_finite()) throw PreconditionError("span needs a finite field");
  const std::uint32_t p = f.characteristic();
  const std::size_t n = f.degree();
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& g : gens) rows.push_back(f.digits(g.index));
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const std::uint32_t inv = f.fpow(rows[r][col], p - 2);
    for (auto& x : rows[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const std::uint32_t c = rows[i][col];
      for (std::size_t k = 0; k < n; ++k) rows[i][k] = (rows[i][k] + (p - c) * rows[r][k]) % p;
    }
    ++r;
  }
  std::vector<Value> basis;
  for (std::size_t i = 0; i < r; ++i) basis.push_back(f.element(f.from_digits(rows[i])));
  return make_subspace(E, std::move(basis));
}

std::vector<SubspaceR> enumerate_subspaces(const Field& E, unsigned m) {
  check_subspace_caps(*E, m);
  const auto& f = *E;
  const std::uint32_t p = f.characteristic();
  const unsigned n = f.degree();
  std::vector<SubspaceR> out;
  // Reduced echelon m x n matrices: choose pivot columns, then the free entries.
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(std::popcount(mask)) != m) continue;
    std::vector<unsigned> pivots;
    for (unsigned c = 0; c < n; ++c)
      if (mask >> c & 1u) pivots.push_back(c);
    std::vector<std::pair<unsigned, unsigned>> free;
    for (unsigned i = 0; i < m; ++i)
      for (unsigned c = pivots[i] + 1; c < n; ++c)
        if (!(mask >> c & 1u)) free.emplace_back(i, c);
    const std::uint64_t count = ipow(p, static_cast<unsigned>(free.size()));
    for (std::uint64_t k = 0; k < count; ++k) {
      std::vector<std::vector<std::uint32_t>> rows(m, std::vector<std::uint32_t>(n, 0));
      for (unsigned i = 0; i < m; ++i) rows[i][pivots[i]] = 1;
      std::uint64_t t = k;
      for (const auto& [i, c] : free) {
        rows[i][c] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      std::vector<Value> basis;
      for (const auto& row : rows) basis.push_back(f.element(f.from_digits(row)));
      out.push_back(make_subspace(E, std::move(basis)));
    }
  }
  std::sort(out.begin(), out.end(), [](const SubspaceR& a, const SubspaceR& b) { return a.elements < b.elements; });
  return out;
}

std::uint64_t gaussian_binomial(unsigned n, unsigned m, std::uint32_t p) {
  if (m > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (unsigned i = 0; i < m; ++i) {
    num *= ipow(p, n - i) - 1;
    den *= ipow(p, i + 1) - 1;
  }
  return num / den;
}

FRPolynomial f_R_polynomial(const SubspaceR& R) {
  const Field& E = R.ambient;
  Poly f = Poly::constant(E, E->one());
  for (const auto& b : R.elements) f = f * Poly(E, {b, E->one()});
  const std::uint32_t p = E->characteristic();
  const bool prime = std::all_of(f.coeffs().begin(), f.coeffs().end(), [&](const Value& c) { return c.index < p; });
  return {std::move(f), prime};
}

bool property_P(const SubspaceR& R) {
  std::vector<Value> image;
  image.reserve(R.elements.size());
  for (const auto& b : R.elements) image.push_back(R.ambient->frobenius(b));
  std::sort(image.begin(), image.end());
  return image == R.elements;
}

std::vector<std::uint32_t> constant_embedding(const Field& ambient, const Field& F) {
  const auto& K = F->constant_field();
  if (K == *ambient) {
    std::vector<std::uint32_t> id(ambient->size());
    for (std::uint32_t i = 0; i < id.size(); ++i) id[i] = i;
    return id;
  }
  const Field Kf = F->is_finite() ? F : F->base();
  return subfield_embedding(ambient, Kf);
}

GasShape gas_shape(const Poly& q) {
  const auto& F = *q.field();
  const std::uint32_t p = F.characteristic();
  auto fail = [&] { return PreconditionError(format_poly(q) + " is not of the form X^{p^n} - X - a"); };
  if (!q.degree() || !q.is_monic()) throw fail();
  const std::uint64_t pn = *q.degree();
  std::uint64_t t = pn;
  while (t % p == 0) t /= p;
  if (t != 1 || pn < p) throw fail();
  for (std::size_t k = 2; k < pn; ++k)
    if (!F.is_zero(q.coeff(k))) throw fail();
  if (!(q.coeff(1) == F.neg(F.one()))) throw fail();
  return {pn, F.neg(q.coeff(0))};
}

PrimitiveElementResult primitive_element(const SubspaceR& R, const Poly& q, bool assume_irreducible) {
  const Field& Fp = q.field();
  const auto& F = *Fp;
  const Field& E = R.ambient;
  const std::uint32_t p = E->characteristic();
  const unsigned n = E->degree();
  const GasShape shape = gas_shape(q);
  if (F.characteristic() != p || shape.pn != ipow(p, n))
    throw PreconditionError("q = " + format_poly(q) + " does not match the ambient field " + E->spec());
  const auto emb = constant_embedding(E, Fp);
  if (!assume_irreducible) certify(q, shape, n);
  const unsigned m = static_cast<unsigned>(R.dimension());

  const auto c = dickson_coefficients(*E, indices_of(R.basis));
  std::vector<Value> coeffs(ipow(p, m) + 1, F.zero());
  coeffs.back() = F.one();
  for (unsigned j = 0; j < m; ++j) coeffs[ipow(p, j)] = F.add(coeffs[ipow(p, j)], F.constant(emb[c[j]]));
  const Poly dickson_route = Poly(Fp, std::move(coeffs)) % q;

  Poly product_route = Poly::constant(Fp, F.one());
  for (const auto& b : R.elements) product_route = (product_route * Poly(Fp, {F.constant(emb[b.index]), F.one()})) % q;

  if (!(product_route == dickson_route))
    throw ConsistencyError("the product and Dickson routes to α_H disagree for R = " + format_subspace(R) + ": " +
                           format_poly(product_route) + " vs " + format_poly(dickson_route));

  PrimitiveElementResult res{dickson_route, {}, 0, true, min_poly_in_quotient(dickson_route, q)};
  for (const auto j : c) {
    res.coefficients.push_back(E->element(j));
    if (j >= p) res.property_P = false;
  }
  res.degree_over_F = *res.min_poly.degree();
  const std::uint64_t expected = ipow(p, n - m);
  if (res.degree_over_F != expected)
    throw ConsistencyError("α_H for R = " + format_subspace(R) + " has degree " + std::to_string(res.degree_over_F) +
                           " over F, expected p^{n-m} = " + std::to_string(expected));
  return res;
}

Poly galois_action(const Poly& u, const Value& b, const Poly& q) {
  return compose(u, Poly(q.field(), {b, q.field()->one()})) % q;
}

MinpolyProductReport intermediate_minpoly_product(const SubspaceR& R, const Poly& q) {
  const Field& Fp = q.field();
  const auto& F = *Fp;
  const Field& E = R.ambient;
  const GasShape shape = gas_shape(q);
  if (shape.pn > 81) throw CapExceeded("intermediate_minpoly_product supports p^n <= 81");
  const auto pe = primitive_element(R, q);
  const auto emb = constant_embedding(E, Fp);
  const std::size_t dim = shape.pn;
  const Poly zero(Fp);
  const Poly one = Poly::constant(Fp, F.one());
  const Poly alpha = Poly::x(Fp);

  auto mul_qp = [&](const QuotientPoly& a, const QuotientPoly& b) {
    QuotientPoly r(a.size() + b.size() - 1, zero);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + mul_mod(a[i], b[j], q);
    return r;
  };

  MinpolyProductReport rep;
  rep.mu = {one};
  for (const auto& b : R.elements) {
    const Poly root = alpha + Poly::constant(Fp, F.constant(emb[b.index]));
    rep.mu = mul_qp(rep.mu, {-root % q, one});
  }

  // Coefficients of μ as polynomials in α_H.
  detail::SemiEchelon powers(F, dim, true);
  Poly power = one;
  for (std::size_t k = 0; k < pe.degree_over_F; ++k) {
    powers.insert(padded(power, dim));
    power = mul_mod(power, pe.alpha_H, q);
  }
  rep.coefficients_in_F_alpha_H = true;
  for (const auto& coeff : rep.mu) {
    auto trial = powers;
    const auto dep = trial.insert(padded(coeff, dim));
    if (!dep) {
      rep.coefficients_in_F_alpha_H = false;
      rep.mu_in_alpha_H.push_back(zero);
      continue;
    }
    rep.mu_in_alpha_H.push_back(Poly(Fp, *dep));
  }

  // Product of the conjugates over coset representatives of E / R.
  std::set<std::uint32_t> covered;
  QuotientPoly total{one};
  for (std::uint32_t c = 0; c < E->size(); ++c) {
    if (covered.count(c)) continue;
    for (const auto& b : R.elements) covered.insert(E->fadd(c, b.index));
    ++rep.cosets;
    QuotientPoly conj;
    for (const auto& coeff : rep.mu) conj.push_back(galois_action(coeff, F.constant(emb[c]), q));
    total = mul_qp(total, conj);
  }
  rep.reconstructs_q = total.size() == q.coeffs().size();
  for (std::size_t k = 0; rep.reconstructs_q && k < total.size(); ++k)
    rep.reconstructs_q = total[k] == Poly::constant(Fp, q.coeff(k));
  if (!rep.reconstructs_q)
    throw ConsistencyError("the conjugates of μ for R = " + format_subspace(R) + " do not multiply to q");
  if (!rep.coefficients_in_F_alpha_H)
    throw ConsistencyError("a coefficient of μ for R = " + format_subspace(R) + " is not in F[α_H]");
  return rep;
}

SubfieldLattice subfield_lattice(const Poly& q, const Field& E) {
  const GasShape shape = gas_shape(q);
  const unsigned n = E->degree();
  if (shape.pn != ipow(E->characteristic(), n)) throw PreconditionError("q does not match " + E->spec());
  certify(q, shape, n);
  SubfieldLattice lat;
  std::vector<std::size_t> start;
  for (unsigned m = 0; m <= n; ++m) {
    start.push_back(lat.nodes.size());
    for (auto& R : enumerate_subspaces(E, m)) {
      auto pe = primitive_element(R, q, true);
      lat.nodes.push_back({std::move(R), std::move(pe.alpha_H), pe.degree_over_F, pe.property_P});
    }
  }
  start.push_back(lat.nodes.size());
  // R ⊂ R' of codimension one gives F[α_H'] ⊂ F[α_H] maximal.
  for (unsigned m = 0; m < n; ++m)
    for (std::size_t i = start[m]; i < start[m + 1]; ++i)
      for (std::size_t j = start[m + 1]; j < start[m + 2]; ++j)
        if (is_subset(lat.nodes[i].R.elements, lat.nodes[j].R.elements)) lat.edges.emplace_back(j, i);
  std::sort(lat.edges.begin(), lat.edges.end());
  return lat;
}

std::string lattice_dot(const SubfieldLattice& lattice) {
  std::string out = "digraph subfields {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    const auto& node = lattice.nodes[i];
    out += "  n" + std::to_string(i) + " [label=\"R = " + format_subspace(node.R) + "\\nalpha_H = " +
           format_poly(node.alpha_H) + "\\ndegree " + std::to_string(node.degree_over_F) + "\"" +
           (node.property_P ? ", style=bold" : "") + "];\n";
  }
  for (const auto& [i, j] : lattice.edges)
    out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
  return out + "}\n";
}

std::string format_subspace(const SubspaceR& R) {
  std::string out = "span{";
  for (std::size_t i = 0; i < R.basis.size(); ++i) out += (i ? ", " : "") + R.ambient->format(R.basis[i]);
  return out + "}";
}

}  // namespace aslab
