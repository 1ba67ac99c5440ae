#include "aslab/ad_analyzer.hpp"

#include <algorithm>
#include <random>

#include "aslab/irred.hpp"

namespace aslab {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= b;
  return r;
}

Matrix reshape(const Field& F, const Vector& v, std::size_t m) { return Matrix(F, m, m, v); }

std::string join_values(const FieldDescriptor& F, const std::vector<Value>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + F.format(xs[i]);
  return out + "}";
}

// First pair violating closure of S under subtraction and multiplication.
std::optional<Witness> subfield_violation(const FieldDescriptor& F, const std::vector<Value>& s) {
  auto contains = [&](const Value& x) { return std::binary_search(s.begin(), s.end(), x); };
  if (!contains(F.one())) return Witness{"C2", "1 is not an eigenvalue of ad A; eigenvalues " + join_values(F, s)};
  for (const auto& x : s)
    for (const auto& y : s) {
      const Value d = F.sub(x, y);
      if (!contains(d))
        return Witness{"C2", F.format(x) + " - " + F.format(y) + " = " + F.format(d) + " is not an eigenvalue"};
      const Value prod = F.mul(x, y);
      if (!contains(prod))
        return Witness{"C2", F.format(x) + " * " + F.format(y) + " = " + F.format(prod) + " is not an eigenvalue"};
    }
  return std::nullopt;
}

// A proper factor of f over its field, if any.
std::optional<Poly> proper_factor(const Poly& f) {
  if (f.field()->is_finite()) {
    const auto fs = factor_finite(f);
    if (fs.size() == 1 && fs[0].multiplicity == 1) return std::nullopt;
    return fs[0].factor;
  }
  return bivariate_factor(f);
}

}  // namespace

bool is_irreducible_over_field(const Poly& f) {
  if (!f.degree() || *f.degree() < 1) return false;
  return !proper_factor(f).has_value();
}

AdReport analyze(const Matrix& a, std::uint64_t seed) {
  if (!a.is_square()) throw PreconditionError("analyze needs a square matrix");
  const Field& Fp = a.field();
  const auto& F = *Fp;
  const std::size_t m = a.rows();
  const std::size_t cap = F.is_finite() ? kMaxAnalyzeFinite : kMaxAnalyzeRational;
  if (m > cap)
    throw CapExceeded("analyze supports m <= " + std::to_string(cap) + " over " + F.spec() + ", got " +
                      std::to_string(m));
  if (m == 0) throw PreconditionError("analyze needs a nonempty matrix");

  AdReport rep;
  rep.field = Fp;
  rep.size = m;
  const Matrix ad = ad_matrix(a);
  rep.ad_invariant_factors = invariant_factors(ad);
  const Poly& mu_ad = rep.ad_invariant_factors.factors.back();

  // C1: the minimal polynomial of ad A splits over F.
  rep.eigenvalues = roots_in_field(mu_ad);
  std::size_t split_degree = 0;
  for (const auto& x : rep.eigenvalues) split_degree += root_multiplicity(mu_ad, x);
  rep.c1 = split_degree == *mu_ad.degree();
  if (!rep.c1)
    rep.witnesses.push_back({"C1", "minimal polynomial of ad A is " + format_poly(mu_ad) + "; roots in F account for " +
                                       std::to_string(split_degree) + " of degree " +
                                       std::to_string(*mu_ad.degree())});

  std::size_t dim_sum = 0;
  for (const auto& x : rep.eigenvalues) {
    const std::size_t d = eigenspace(ad, x).size();
    rep.eigenspace_dims[x] = d;
    dim_sum += d;
  }
  rep.diagonalizable = dim_sum == m * m;

  // C2: the eigenvalues form a subfield.
  const auto violation = subfield_violation(F, rep.eigenvalues);
  rep.c2 = !violation.has_value();
  rep.eigenvalue_set_is_subfield = rep.c2;
  if (violation) rep.witnesses.push_back(*violation);

  // C3: A cyclic with irreducible minimal polynomial.
  rep.invariant_factors = invariant_factors(a);
  const auto& inv = rep.invariant_factors.factors;
  const Poly& mu_a = inv.back();
  if (inv.size() != 1) {
    rep.witnesses.push_back({"C3", "A is not cyclic: " + std::to_string(inv.size()) +
                                       " invariant factors, the first being " + format_poly(inv.front())});
  } else if (auto f = proper_factor(mu_a)) {
    rep.witnesses.push_back({"C3", "minimal polynomial " + format_poly(mu_a) + " has the factor " + format_poly(*f)});
  } else {
    rep.c3 = true;
  }

  if (!(rep.c1 && rep.c2 && rep.c3)) return rep;

  // Recovery of (n, e, a) from |S| = p^n and mu_A = q(X^{p^e}).
  const std::uint32_t p = F.characteristic();
  unsigned n = 0;
  for (std::size_t s = rep.eigenvalues.size(); s > 1; s /= p) ++n;
  const auto sep = separable_part(mu_a);
  const Poly& q = sep.q;
  const std::uint64_t pn = ipow(p, n);
  const Value a_rec = F.neg(q.coeff(0));
  const Poly expected_q(Fp, [&] {
    std::vector<Value> c(pn + 1, F.zero());
    c[pn] = F.one();
    c[1] = F.sub(c[1], F.one());
    c[0] = F.sub(c[0], a_rec);
    return c;
  }());
  rep.recovered = Recovered{p, n, sep.e, a_rec, q, mu_a};
  auto flag = [&](const std::string& what, const std::string& detail) { rep.inconsistencies.push_back({what, detail}); };

  if (!(q == expected_q))
    flag("recovery", "q = " + format_poly(q) + " is not X^" + std::to_string(pn) + " - X - a");
  if (!is_irreducible_over_field(q)) flag("q irreducible", "q = " + format_poly(q) + " is reducible");

  const std::uint64_t dim = ipow(p, n + sep.e);
  if (dim != m) flag("degree", "deg mu_A = " + std::to_string(m) + " but p^{n+e} = " + std::to_string(dim));
  const auto sub = subfield_elements(F, n);
  std::vector<Value> sorted_sub(sub.begin(), sub.end());
  std::sort(sorted_sub.begin(), sorted_sub.end());
  if (sorted_sub != rep.eigenvalues)
    flag("eigenvalues", "eigenvalues " + join_values(F, rep.eigenvalues) + " differ from E_" + std::to_string(pn));
  for (const auto& [x, d] : rep.eigenspace_dims)
    if (d != dim)
      flag("eigenspace dimension",
           "E_" + F.format(x) + " has dimension " + std::to_string(d) + ", expected " + std::to_string(dim));

  std::vector<Value> hc(dim + 1, F.zero());
  hc[dim] = F.one();
  hc[ipow(p, sep.e)] = F.neg(F.one());
  const Poly factor(Fp, std::move(hc));
  const InvariantFactorList expected_inv{std::vector<Poly>(dim, factor)};
  if (!(rep.ad_invariant_factors == expected_inv))
    flag("invariant factors", "ad A does not have " + std::to_string(dim) + " invariant factors " + format_poly(factor));
  if (rep.diagonalizable != (sep.e == 0))
    flag("diagonalizable", std::string("ad A is ") + (rep.diagonalizable ? "" : "not ") +
                               "diagonalizable but e = " + std::to_string(sep.e));

  rep.eigenvector_invertibility = check_eigenvector_invertibility(a, rep, seed);
  for (const auto& w : rep.eigenvector_invertibility->failures) rep.inconsistencies.push_back(w);
  return rep;
}

Matrix build_gas_companion(const Field& field, unsigned n, unsigned e, const Value& a) {
  if (n < 1) throw PreconditionError("build_gas_companion needs n >= 1");
  const std::uint32_t p = field->characteristic();
  const std::uint64_t pn = ipow(p, n);
  const std::uint64_t top = ipow(p, n + e);
  if (top > kMaxFiniteMatrixDim) throw CapExceeded("p^{n+e} exceeds the matrix size cap");
  std::vector<Value> split(pn + 1, field->zero());
  split[pn] = field->one();
  split[1] = field->neg(field->one());
  if (roots_in_field(Poly(field, split)).size() != pn)
    throw PreconditionError(field->spec() + " does not contain E_" + std::to_string(pn));
  std::vector<Value> h(top + 1, field->zero());
  h[top] = field->one();
  h[ipow(p, e)] = field->sub(h[ipow(p, e)], field->one());
  h[0] = field->sub(h[0], a);
  return companion(Poly(field, std::move(h)));
}

InvertibilityVerdict check_eigenvector_invertibility(const Matrix& a, const AdReport& report, std::uint64_t seed) {
  const Field& Fp = a.field();
  const auto& F = *Fp;
  const std::size_t m = a.rows();
  const Matrix ad = ad_matrix(a);
  const auto& K = F.constant_field();
  std::mt19937_64 rng(seed);
  auto random_scalar = [&] {
    Value c = F.constant(static_cast<std::uint32_t>(rng() % K.size()));
    if (!F.is_finite()) c = F.add(c, F.mul(F.constant(static_cast<std::uint32_t>(rng() % K.size())), F.generator()));
    return c;
  };

  InvertibilityVerdict v;
  for (const auto& b : report.eigenvalues) {
    if (F.is_zero(b)) continue;
    const auto basis = eigenspace(ad, b);
    std::vector<Vector> samples = basis;
    for (int s = 0; s < 10 && !basis.empty(); ++s) {
      Vector comb(m * m, F.zero());
      bool nonzero = false;
      while (!nonzero) {
        std::fill(comb.begin(), comb.end(), F.zero());
        for (const auto& vec : basis) {
          const Value c = random_scalar();
          if (F.is_zero(c)) continue;
          nonzero = true;
          for (std::size_t k = 0; k < comb.size(); ++k)
            if (!F.is_zero(vec[k])) comb[k] = F.add(comb[k], F.mul(c, vec[k]));
        }
      }
      samples.push_back(std::move(comb));
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
      ++v.checked;
      if (!is_invertible(reshape(Fp, samples[i], m))) {
        v.all_invertible = false;
        v.failures.push_back({"eigenvector invertibility",
                              std::string(i < basis.size() ? "basis" : "sampled") + " eigenvector " +
                                  std::to_string(i < basis.size() ? i : i - basis.size()) + " for eigenvalue " +
                                  F.format(b) + " is singular"});
      }
    }
  }
  return v;
}

bool check_similarity_shift(const Matrix& a, const Value& b) {
  const Field& F = a.field();
  const Poly mu = minimal_polynomial(a);
  if (!(compose(mu, Poly(F, {b, F->one()})) == mu))
    throw PreconditionError("check_similarity_shift needs mu_A(X) = mu_A(X + b)");
  return similar(a, a + Matrix::scalar(F, a.rows(), b));
}

}  // namespace aslab
