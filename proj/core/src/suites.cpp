#include "aslab/suites.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <random>

namespace aslab {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= b;
  return r;
}

Poly gas_q(const Field& F, std::uint64_t pn, const Value& a) {
  std::vector<Value> c(pn + 1, F->zero());
  c[pn] = F->one();
  c[1] = F->neg(F->one());
  c[0] = F->neg(a);
  return Poly(F, std::move(c));
}

Value random_element(const FieldDescriptor& F, std::mt19937_64& rng) {
  return F.element(static_cast<std::uint32_t>(rng() % F.size()));
}

// Monic of degree d over a finite field.
Poly random_monic(const Field& F, std::size_t d, std::mt19937_64& rng) {
  std::vector<Value> c(d + 1);
  for (std::size_t i = 0; i < d; ++i) c[i] = random_element(*F, rng);
  c[d] = F->one();
  return Poly(F, std::move(c));
}

std::string count_line(std::size_t bad, std::size_t total, const std::string& what) {
  return std::to_string(total - bad) + "/" + std::to_string(total) + " " + what;
}

}  // namespace

SuiteResult suite_forward(std::uint64_t seed) {
  SuiteResult res{1, "Forward suite", true, "", {}};
  Json cases = Json::array();
  std::size_t failed = 0;
  const std::vector<std::array<unsigned, 3>> grid{{2, 1, 0}, {2, 1, 1}, {2, 2, 0}, {3, 1, 0}, {3, 1, 1}};
  for (const auto& [p, n, e] : grid) {
    const Field F = rational_function_field(extension_field(p, n));
    const Matrix A = build_gas_companion(F, n, e, F->generator());
    const AdReport rep = analyze(A, seed);
    const std::uint64_t dim = ipow(p, n + e);

    std::vector<std::string> problems;
    if (!(rep.c1 && rep.c2 && rep.c3)) problems.push_back("C1-C3 not all certified");
    auto sub = subfield_elements(*F, n);
    std::sort(sub.begin(), sub.end());
    if (rep.eigenvalues != sub) problems.push_back("eigenvalue set differs from E_{p^n}");
    for (const auto& [x, d] : rep.eigenspace_dims)
      if (d != dim) problems.push_back("eigenspace of " + F->format(x) + " has dimension " + std::to_string(d));
    std::vector<Value> hc(dim + 1, F->zero());
    hc[dim] = F->one();
    hc[ipow(p, e)] = F->neg(F->one());
    const Poly factor(F, std::move(hc));
    if (!(rep.ad_invariant_factors == InvariantFactorList{std::vector<Poly>(dim, factor)}))
      problems.push_back("ad invariant factors differ");
    if (rep.diagonalizable != (e == 0)) problems.push_back("diagonalizability differs from e = 0");
    const auto& inv = rep.eigenvector_invertibility;
    if (!inv || !inv->all_invertible || inv->checked == 0) problems.push_back("eigenvector invertibility");
    if (!rep.inconsistencies.empty()) problems.push_back("analyzer reported inconsistencies");
    if (!problems.empty()) ++failed;

    cases.push_back(Json{{"p", p},
                         {"n", n},
                         {"e", e},
                         {"field", F->spec()},
                         {"size", rep.size},
                         {"eigenvalues", to_json(rep)["eigenvalues"]},
                         {"eigenspace_dimension", dim},
                         {"invariant_factor", format_poly(factor)},
                         {"invariant_factor_count", rep.ad_invariant_factors.factors.size()},
                         {"diagonalizable", rep.diagonalizable},
                         {"eigenvectors_checked", inv ? inv->checked : 0},
                         {"problems", problems}});
  }
  res.pass = failed == 0;
  res.summary = count_line(failed, grid.size(), "cases certified exactly");
  res.report = Json{{"cases", cases}};
  return res;
}

SuiteResult suite_converse(std::uint64_t seed) {
  SuiteResult res{2, "Converse suite", true, "", {}};
  Json fields = Json::array();
  std::size_t bad = 0, total = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const Field F = prime_field(p);
    std::mt19937_64 rng(seed * 1000003u + p);
    std::size_t passing = 0, failing = 0;
    Json recovered = Json::array();
    Json problems = Json::array();
    for (std::size_t k = 0; k < 200; ++k) {
      const std::size_t m = 2 + k % 3;
      std::vector<Value> entries(m * m);
      for (auto& x : entries) x = random_element(*F, rng);
      const Matrix A(F, m, m, entries);
      const AdReport rep = analyze(A, seed + k);
      ++total;
      std::string problem;
      if (rep.c1 && rep.c2 && rep.c3) {
        ++passing;
        if (!rep.recovered) {
          problem = "no recovered data";
        } else {
          const auto& rec = *rep.recovered;
          if (!(rec.q == gas_q(F, ipow(p, rec.n), rec.a))) problem = "q is not X^{p^n} - X - a";
          else if (!is_irreducible_finite(rec.q)) problem = "q is reducible";
          else if (!rep.inconsistencies.empty()) problem = rep.inconsistencies.front().detail;
          recovered.push_back(Json{{"index", k}, {"size", m}, {"q", format_poly(rec.q)}, {"e", rec.e}});
        }
      } else {
        ++failing;
        const std::pair<bool, const char*> conds[] = {{rep.c1, "C1"}, {rep.c2, "C2"}, {rep.c3, "C3"}};
        for (const auto& [ok, name] : conds) {
          if (ok) continue;
          const bool named = std::any_of(rep.witnesses.begin(), rep.witnesses.end(),
                                         [&](const Witness& w) { return w.condition == name; });
          if (!named) problem = std::string("no witness for failing ") + name;
        }
      }
      if (!problem.empty()) {
        ++bad;
        problems.push_back(Json{{"index", k}, {"problem", problem}});
      }
    }
    fields.push_back(Json{{"field", F->spec()},
                          {"matrices", 200},
                          {"passing_c1_c3", passing},
                          {"failing_with_witness", failing},
                          {"recovered", recovered},
                          {"problems", problems}});
  }
  res.pass = bad == 0;
  res.summary = count_line(bad, total, "matrices consistent");
  res.report = Json{{"fields", fields}, {"inconsistencies", bad}};
  return res;
}

SuiteResult suite_tensor() {
  SuiteResult res{3, "Tensor suite", true, "", {}};
  std::size_t mismatches = 0, total = 0;
  Json mismatch_list = Json::array();
  for (std::uint32_t p : {2u, 3u}) {
    const Field F = prime_field(p);
    for (unsigned e = 0; ipow(p, e) <= 9; ++e) {
      const std::size_t m = ipow(p, e);
      for (std::size_t n = 1; n <= m; ++n)
        for (std::uint32_t a = 0; a < p; ++a)
          for (std::uint32_t b = 0; b < p; ++b) {
            const TensorInstance inst{F, n, m, F->element(a), F->element(b)};
            ++total;
            if (!(tensor_jordan_type_formula(inst) == tensor_jordan_type_oracle(inst))) {
              ++mismatches;
              mismatch_list.push_back(Json{{"p", p}, {"n", n}, {"m", m}, {"alpha", a}, {"beta", b}});
            }
          }
    }
  }
  const Field F2 = prime_field(2);
  const auto j22 = tensor_jordan_type_oracle({F2, 2, 2, F2->zero(), F2->zero()}).sizes();
  const auto j23 = tensor_jordan_type_oracle({F2, 2, 3, F2->zero(), F2->zero()}).sizes();
  const bool named = j22 == std::vector<std::size_t>{2, 2} && j23 == std::vector<std::size_t>{4, 2};

  std::size_t binomial_checks = 0, binomial_failures = 0;
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (unsigned e = 0; ipow(p, e) <= 243; ++e)
      for (std::uint64_t i = 1; i < ipow(p, e); ++i) {
        ++binomial_checks;
        if (binomial_mod(ipow(p, e), i, p) != 0) ++binomial_failures;
      }

  res.pass = mismatches == 0 && named && binomial_failures == 0;
  res.summary = count_line(mismatches, total, "formula = oracle") + "; J2(x)J2 = [2,2], J2(x)J3 = [4,2] " +
                (named ? "confirmed" : "NOT confirmed") + "; " +
                count_line(binomial_failures, binomial_checks, "binomial divisibility checks");
  res.report = Json{{"instances", total},
                    {"mismatches", mismatch_list},
                    {"J2xJ2_GF2", j22},
                    {"J2xJ3_GF2", j23},
                    {"binomial_checks", binomial_checks},
                    {"binomial_failures", binomial_failures}};
  return res;
}

SuiteResult suite_elementary_divisors() {
  SuiteResult res{4, "Elementary divisor suite", true, "", {}};
  std::size_t mismatches = 0, total = 0;
  Json rows = Json::array();
  for (std::uint32_t p : {2u, 3u}) {
    const Field F = prime_field(p);
    for (unsigned e = 0; e <= 1; ++e)
      for (std::size_t s = 1; s <= 3; ++s) {
        // Nondecreasing eigenvalue tuples of length s.
        std::vector<std::uint32_t> t(s, 0);
        while (true) {
          std::vector<Value> eigs;
          for (auto x : t) eigs.push_back(F->element(x));
          const auto formula = ad_elementary_divisors_blocksum(F, eigs, e);
          const auto direct = ad_elementary_divisors_direct(F, eigs, e);
          ++total;
          const bool ok = formula == direct;
          if (!ok) ++mismatches;
          Json ev = Json::array();
          for (const auto& x : eigs) ev.push_back(F->format(x));
          rows.push_back(Json{{"p", p}, {"e", e}, {"eigenvalues", ev}, {"divisors", to_json(formula)}, {"match", ok}});
          std::size_t i = s;
          while (i > 0 && t[i - 1] == p - 1) --i;
          if (i == 0) break;
          ++t[i - 1];
          for (std::size_t j = i; j < s; ++j) t[j] = t[i - 1];
        }
      }
  }
  res.pass = mismatches == 0;
  res.summary = count_line(mismatches, total, "block sums match the ad matrix");
  res.report = Json{{"cases", rows}};
  return res;
}

SuiteResult suite_dickson(std::uint64_t seed) {
  SuiteResult res{5, "Dickson/Galois suite", true, "", {}};
  std::mt19937_64 rng(seed ^ 0x5eedu);
  Json grid = Json::array();
  std::size_t failures = 0;
  Json failure_list = Json::array();
  auto fail = [&](const std::string& what) {
    ++failures;
    if (failure_list.size() < 50) failure_list.push_back(what);
  };

  for (std::uint32_t p : {2u, 3u})
    for (unsigned n = 1; n <= 4; ++n) {
      const Field E = extension_field(p, n);
      const Field F = rational_function_field(E);
      const Poly q = gas_q(F, ipow(p, n), F->generator());
      const std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n);
      std::size_t subspaces = 0, property_p = 0;
      for (unsigned m = 0; m <= n; ++m) {
        const auto subs = enumerate_subspaces(E, m);
        if (subs.size() != gaussian_binomial(n, m, p)) fail(tag + ": subspace count for m=" + std::to_string(m));
        for (const auto& R : subs) {
          ++subspaces;
          std::optional<PrimitiveElementResult> pe;
          try {
            // Degree law and agreement of the two routes are checked inside;
            // q is certified on the first call.
            pe = primitive_element(R, q, subspaces > 1);
          } catch (const ConsistencyError& err) {
            fail(tag + ": " + err.what());
            continue;
          }
          const bool frob = property_P(R);
          const bool fr = f_R_polynomial(R).prime_coefficients;
          if (frob != fr || frob != pe->property_P) fail(tag + ": property P disagreement at " + format_subspace(R));
          if (frob) ++property_p;
          if (m == n && !(pe->alpha_H == Poly::constant(F, F->generator()))) fail(tag + ": alpha_G is not a");
        }
      }
      // Subfields E_{p^m}, m | n.
      for (unsigned m = 1; m <= n; ++m) {
        if (n % m) continue;
        const auto sub = subfield_elements(*E, m);
        const SubspaceR R = span(E, sub);
        const auto pe = primitive_element(R, q, true);
        if (!(pe.alpha_H == gas_q(F, ipow(p, m), F->zero()) % q)) fail(tag + ": subfield alpha_H for m=" + std::to_string(m));
        // The reduced echelon basis and 20 random bases.
        std::vector<std::vector<Value>> bases{R.basis};
        while (bases.size() < 21) {
          std::vector<Value> b;
          for (unsigned i = 0; i < m; ++i) b.push_back(sub[rng() % sub.size()]);
          if (span(E, b).dimension() == m) bases.push_back(b);
        }
        for (const auto& b : bases) {
          std::vector<std::uint32_t> idx;
          for (const auto& x : b) idx.push_back(x.index);
          const auto c = dickson_coefficients(*E, idx);
          bool ok = c[0] == E->fneg(1);
          for (unsigned j = 1; j < m; ++j) ok = ok && c[j] == 0;
          if (!ok) fail(tag + ": Dickson identities for a basis of E_{p^" + std::to_string(m) + "}");
        }
      }
      grid.push_back(Json{{"p", p}, {"n", n}, {"subspaces", subspaces}, {"property_P", property_p}});
    }

  // Lines from Y^p - cY, c in F_p \ {0, 1}, with (p - 1) | n.
  Json lines = Json::array();
  for (unsigned n : {2u, 4u, 6u}) {
    const Field E = extension_field(3, n);
    for (std::uint32_t c = 2; c < 3; ++c) {
      std::vector<Value> coeffs(4, E->zero());
      coeffs[3] = E->one();
      coeffs[1] = E->neg(E->element(c));
      const auto roots = roots_in_field(Poly(E, coeffs));
      const SubspaceR R = span(E, roots);
      const bool line = roots.size() == 3 && R.dimension() == 1;
      const bool invariant = property_P(R);
      const bool subfield = R.elements == span(E, subfield_elements(*E, 1)).elements;
      const bool holds = line && invariant && !subfield;
      if (!holds) fail("line Y^3-" + std::to_string(c) + "Y in " + E->spec());
      lines.push_back(
          Json{{"field", E->spec()}, {"c", c}, {"line", line}, {"frobenius_invariant", invariant}, {"subfield", subfield}});
    }
  }

  // The plane cut out by prod over j of (Y^3 - Y - j) in GF(3^6).
  const Field E6 = extension_field(3, 6);
  const Poly w = parse_poly(E6, "Y^3-Y", 'Y');
  Poly prod = Poly::constant(E6, E6->one());
  for (std::uint32_t j = 0; j < 3; ++j) prod = prod * (w - Poly::constant(E6, E6->element(j)));
  const auto roots = roots_in_field(prod);
  const SubspaceR plane = span(E6, roots);
  const auto fr = f_R_polynomial(plane);
  const std::string stated = "Y^9-Y^3-Y";
  const std::string computed = format_poly(fr.f, 'Y');
  const bool structure = roots.size() == 9 && plane.dimension() == 2 && property_P(plane) &&
                         std::binary_search(plane.elements.begin(), plane.elements.end(), E6->one()) &&
                         !std::includes(plane.elements.begin(), plane.elements.end(), subfield_elements(*E6, 2).begin(),
                                        subfield_elements(*E6, 2).end());
  if (!structure) fail("plane in GF(3^6): structure");
  const bool stated_matches = computed == stated;
  const std::size_t stated_roots = roots_in_field(parse_poly(E6, stated, 'Y')).size();
  Json example{{"field", E6->spec()},
               {"f_R", computed},
               {"stated", stated},
               {"matches_stated", stated_matches},
               {"roots_of_stated_in_field", stated_roots},
               {"plane_frobenius_invariant_not_subfield", structure}};

  res.pass = failures == 0 && stated_matches;
  res.summary = std::to_string(failures) + " exceptions over the grid";
  if (!stated_matches)
    res.summary += "; GF(3^6) plane gives f_R = " + computed + ", not " + stated + " (which has " +
                   std::to_string(stated_roots) + " root in GF(3^6))";
  res.report = Json{{"grid", grid}, {"lines", lines}, {"plane_example", example}, {"failures", failure_list}};
  return res;
}

SuiteResult suite_irreducibility() {
  SuiteResult res{6, "Irreducibility suite", true, "", {}};
  const auto grid = irreducibility_grid();
  std::size_t disagreements = 0, irreducible = 0;
  Json disagreement_list = Json::array();
  for (const auto& inst : grid) {
    const auto v = gas_irreducible(inst);
    const bool oracle = bivariate_irreducible_oracle(gas_polynomial(inst));
    if (v.irreducible) ++irreducible;
    if (v.irreducible != oracle) {
      ++disagreements;
      disagreement_list.push_back(format_instance(inst));
    }
  }

  Json named = Json::array();
  bool named_ok = true;
  for (auto [p, n] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}}) {
    const Field K = extension_field(p, n);
    const Poly h = gas_polynomial({K, n, 0, 1, parse_poly(K, "Z", 'Z')});
    const bool ok = bivariate_irreducible_oracle(h) && gas_irreducible({K, n, 0, 1, parse_poly(K, "Z", 'Z')}).irreducible;
    named_ok = named_ok && ok;
    named.push_back(Json{{"field", rational_function_field(K)->spec()}, {"h", format_poly(h)}, {"irreducible", ok}});
  }
  const Field F2 = make_field("GF(2)(Z)");
  const Poly split = parse_poly(F2, "X^2-X-(Z^2-Z)");
  const bool split_reducible = !bivariate_irreducible_oracle(split);
  named_ok = named_ok && split_reducible;
  named.push_back(Json{{"field", F2->spec()}, {"h", format_poly(split)}, {"irreducible", !split_reducible}});
  const auto square = gas_irreducible({prime_field(2), 1, 1, 2, parse_poly(prime_field(2), "Z", 'Z')});
  const Poly h4 = parse_poly(F2, "X^4-X^2-Z^2");
  const bool square_ok = !square.irreducible && square.witness_root &&
                         pow(*square.witness_root, 2) == h4 && format_poly(*square.witness_root) == "X^2-X-Z";
  named_ok = named_ok && square_ok;
  named.push_back(Json{{"field", F2->spec()}, {"h", format_poly(h4)}, {"witness", square.witness}, {"exact", square_ok}});

  res.pass = disagreements == 0 && grid.size() >= 120 && named_ok;
  res.summary = count_line(disagreements, grid.size(), "grid instances agree") + " (" + std::to_string(irreducible) +
                " irreducible); named instances " + (named_ok ? "verified" : "NOT verified");
  res.report = Json{{"instances", grid.size()},
                    {"irreducible", irreducible},
                    {"disagreements", disagreement_list},
                    {"named", named}};
  return res;
}

SuiteResult suite_similarity(std::uint64_t seed) {
  SuiteResult res{7, "Similarity lemmas", true, "", {}};
  std::mt19937_64 rng(seed ^ 0x51u);
  const std::vector<Field> fields{prime_field(2), prime_field(3), extension_field(2, 2), prime_field(5),
                                  prime_field(7)};
  Json shift = Json::array();
  std::size_t failures = 0;
  for (int k = 0; k < 20; ++k) {
    const Field& F = fields[k % fields.size()];
    const Poly f = random_monic(F, 1 + rng() % 6, rng);
    const Value b = random_element(*F, rng);
    const std::size_t m = *f.degree();
    const Poly shifted = compose(f, Poly(F, {b, F->one()}));
    const bool lemma = similar(companion(f), companion(shifted) + Matrix::scalar(F, m, b));
    bool pascal = true;
    try {
      pascal_similarity(f, b);
    } catch (const ConsistencyError&) {
      pascal = false;
    }
    if (!lemma || !pascal) ++failures;
    shift.push_back(Json{{"field", F->spec()}, {"f", format_poly(f)}, {"b", F->format(b)}, {"shift_similar", lemma},
                         {"pascal_identity", pascal}});
  }
  Json ind2 = Json::array();
  for (int k = 0; k < 10; ++k) {
    const Field& F = fields[k % fields.size()];
    const std::size_t m = 1 + rng() % 4;
    const std::size_t d = 1 + rng() % (8 / m);
    const Poly f = random_monic(F, m, rng);
    std::vector<Value> gc(d + 1);
    for (auto& x : gc) x = random_element(*F, rng);
    while (F->is_zero(gc[d])) gc[d] = random_element(*F, rng);
    const Poly g(F, gc);
    const bool ok = verify_ind2(f, g);
    if (!ok) ++failures;
    ind2.push_back(Json{{"field", F->spec()}, {"f", format_poly(f)}, {"g", format_poly(g)}, {"similar", ok}});
  }
  res.pass = failures == 0;
  res.summary = count_line(failures, 30, "seeded pairs verified");
  res.report = Json{{"shift", shift}, {"ind2", ind2}};
  return res;
}

std::vector<SuiteResult> run_suites(std::uint64_t seed) {
  return {suite_forward(seed),           suite_converse(seed),   suite_tensor(),          suite_elementary_divisors(),
          suite_dickson(seed),           suite_irreducibility(), suite_similarity(seed)};
}

SuiteResult suite_determinism(std::uint64_t seed, const std::vector<SuiteResult>& first) {
  SuiteResult res{8, "Determinism", true, "", {}};
  const auto second = run_suites(seed);
  Json differing = Json::array();
  for (std::size_t i = 0; i < second.size(); ++i) {
    const bool same = i < first.size() && dump(first[i].report) == dump(second[i].report) &&
                      first[i].pass == second[i].pass && first[i].summary == second[i].summary;
    if (!same) differing.push_back(second[i].id);
  }
  res.pass = differing.empty() && first.size() == second.size();
  res.summary = differing.empty() ? "all suite reports byte-identical on rerun" : "reports differ on rerun";
  res.report = Json{{"seed", seed}, {"differing_suites", differing}};
  return res;
}

Json acceptance_report(std::uint64_t seed, const std::vector<SuiteResult>& results) {
  Json suites = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    suites.push_back(
        Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"summary", r.summary}, {"report", r.report}});
  }
  return Json{{"seed", seed}, {"suites", suites}, {"pass", all}};
}

}  // namespace aslab
