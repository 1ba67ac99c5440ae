// aslab: command-line front end. Every subcommand prints one JSON document
// (or text / DOT where offered) and exits 0 on success, 2 on bad input or an
// exceeded cap, 3 on an internal-consistency failure.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aslab/suites.hpp"

namespace {

using aslab::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitConsistency = 3;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

void print_text(const Json& j, const std::string& indent = "") {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      std::cout << indent << k << ":\n";
      print_text(v, indent + "  ");
    } else {
      std::cout << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

void emit(const std::string& format, const std::string& command, const Json& body) {
  const Json doc = aslab::envelope(command, body);
  if (format == "text") print_text(doc);
  else std::cout << aslab::dump(doc);
}

// "a,b;c,d" with entries in the field's element syntax.
aslab::Matrix parse_matrix(const aslab::Field& F, const std::string& text) {
  const auto rows = split(text, ';');
  const std::size_t m = rows.size();
  std::vector<aslab::Value> entries;
  for (const auto& row : rows) {
    const auto cells = split(row, ',');
    if (cells.size() != m) throw aslab::ParseError("matrix must be square; row \"" + row + "\" has " +
                                                   std::to_string(cells.size()) + " entries");
    for (const auto& c : cells) entries.push_back(F->parse(c));
  }
  return aslab::Matrix(F, m, m, std::move(entries));
}

struct Options {
  std::uint64_t seed = 0;
  std::string format = "json";
  // analyze-ad
  std::string field, poly, matrix;
  // decompose-tensor, subfield-lattice, dickson
  std::uint32_t p = 2;
  unsigned n = 1, m = 1, e = 0, r = 1;
  std::string alpha = "0", beta = "0";
  // primitive-element, subfield-lattice
  std::string a = "Z", subspace;
  bool assume_irreducible = false;
  // irreducible
  std::string K, g;
  bool oracle = false;
  // grid
  std::string suite = "acceptance";
};

int run_analyze(const Options& o) {
  const auto F = aslab::make_field(o.field);
  if (o.poly.empty() == o.matrix.empty()) throw aslab::PreconditionError("give exactly one of --poly and --matrix");
  const aslab::Matrix A =
      o.poly.empty() ? parse_matrix(F, o.matrix) : aslab::companion(aslab::parse_poly(F, o.poly));
  const auto rep = aslab::analyze(A, o.seed);
  emit(o.format, "analyze-ad", aslab::to_json(rep));
  return rep.inconsistencies.empty() ? kExitOk : kExitConsistency;
}

int run_tensor(const Options& o) {
  const auto F = o.field.empty() ? aslab::prime_field(o.p) : aslab::make_field(o.field);
  if (!F->is_finite()) throw aslab::PreconditionError("decompose-tensor needs a finite field");
  const aslab::TensorInstance inst{F, o.n, o.m, F->parse(o.alpha), F->parse(o.beta)};
  const bool formula = aslab::formula_applies(inst);
  const auto oracle = aslab::tensor_jordan_type_oracle(inst);
  Json body;
  body["blocks"] = oracle.sizes();
  body["method"] = formula ? "formula" : "oracle";
  body["field"] = F->spec();
  body["n"] = o.n;
  body["m"] = o.m;
  body["eigenvalue"] = F->format(F->add(inst.alpha, inst.beta));
  if (formula) {
    const bool agree = aslab::tensor_jordan_type_formula(inst) == oracle;
    body["formula_matches_oracle"] = agree;
    emit(o.format, "decompose-tensor", body);
    return agree ? kExitOk : kExitConsistency;
  }
  emit(o.format, "decompose-tensor", body);
  return kExitOk;
}

// GF(p^n) matching the constants of F, so embeddings are the identity when
// the sizes agree.
aslab::Field ambient_for(const aslab::Field& F, unsigned n) {
  const aslab::Field K = F->is_finite() ? F : F->base();
  if (K->degree() == n) return K;
  return aslab::extension_field(F->characteristic(), n);
}

aslab::Poly gas_q(const aslab::Field& F, unsigned n, const std::string& a) {
  std::uint64_t pn = 1;
  for (unsigned i = 0; i < n; ++i) pn *= F->characteristic();
  return aslab::parse_poly(F, "X^" + std::to_string(pn) + "-X-(" + a + ")");
}

int run_primitive(const Options& o) {
  const auto F = aslab::make_field(o.field);
  const auto E = ambient_for(F, o.n);
  const auto q = gas_q(F, o.n, o.a);
  std::vector<aslab::Value> gens;
  for (const auto& s : split(o.subspace, ','))
    if (!s.empty()) gens.push_back(E->parse(s));
  const auto R = aslab::span(E, gens);
  if (R.dimension() != gens.size()) throw aslab::PreconditionError("--subspace elements are not F_p-independent");
  const auto res = aslab::primitive_element(R, q, o.assume_irreducible);
  Json body{{"field", F->spec()}, {"q", aslab::format_poly(q)}};
  const Json details = aslab::to_json(res, R);
  for (const auto& [k, v] : details.items()) body[k] = v;
  body["f_R"] = aslab::format_poly(aslab::f_R_polynomial(R).f, 'Y');
  body["frobenius_invariant"] = aslab::property_P(R);
  emit(o.format, "primitive-element", body);
  return kExitOk;
}

int run_lattice(const Options& o) {
  const auto F = o.field.empty() ? aslab::rational_function_field(aslab::extension_field(o.p, o.n))
                                 : aslab::make_field(o.field);
  const auto E = ambient_for(F, o.n);
  const auto q = gas_q(F, o.n, o.a);
  const auto lattice = aslab::subfield_lattice(q, E);
  if (o.format == "dot") {
    std::cout << aslab::lattice_dot(lattice);
    return kExitOk;
  }
  Json body{{"field", F->spec()}, {"q", aslab::format_poly(q)}};
  const Json details = aslab::to_json(lattice);
  for (const auto& [k, v] : details.items()) body[k] = v;
  emit(o.format, "subfield-lattice", body);
  return kExitOk;
}

int run_irreducible(const Options& o) {
  const auto K = aslab::make_field(o.K);
  const aslab::GasInstance inst{K, o.n, o.e, o.r, aslab::parse_poly(K, o.g, 'Z')};
  const auto v = aslab::gas_irreducible(inst);
  Json body = aslab::to_json(v);
  body["h"] = aslab::format_poly(aslab::gas_polynomial(inst));
  int code = kExitOk;
  if (o.oracle) {
    const bool oracle = aslab::bivariate_irreducible_oracle(aslab::gas_polynomial(inst));
    body["oracle"] = oracle ? "irreducible" : "reducible";
    if (oracle != v.irreducible) code = kExitConsistency;
  }
  emit(o.format, "irreducible", body);
  return code;
}

int run_dickson(const Options& o) {
  emit(o.format, "dickson", aslab::to_json(aslab::dickson_phi(o.m, o.p)));
  return kExitOk;
}

int run_grid(const Options& o) {
  if (o.suite != "acceptance") throw aslab::PreconditionError("unknown suite " + o.suite);
  auto results = aslab::run_suites(o.seed);
  results.push_back(aslab::suite_determinism(o.seed, results));
  const Json report = aslab::acceptance_report(o.seed, results);
  emit(o.format, "grid", report);
  return report["pass"].get<bool>() ? kExitOk : kExitConsistency;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artin-Schreier structure toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "Seed for randomized sampling (ASLAB_SEED overrides)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));

  auto* analyze = app.add_subcommand("analyze-ad", "Test (C1)-(C3) for A and check the conclusions");
  analyze->add_option("--field", o.field, "Field spec, e.g. GF(2)(Z)")->required();
  analyze->add_option("--poly", o.poly, "Analyze the companion matrix of this monic polynomial");
  analyze->add_option("--matrix", o.matrix, "Rows separated by ';', entries by ','");

  auto* tensor = app.add_subcommand("decompose-tensor", "Jordan type of J_n(alpha) (x) J_m(beta)");
  tensor->add_option("--p", o.p, "Characteristic (field GF(p) unless --field)");
  tensor->add_option("--field", o.field, "Finite field spec");
  tensor->add_option("--n", o.n)->required();
  tensor->add_option("--m", o.m)->required();
  tensor->add_option("--alpha", o.alpha);
  tensor->add_option("--beta", o.beta);

  auto* prim = app.add_subcommand("primitive-element", "alpha_H for the subspace R of E_{p^n}");
  prim->add_option("--field", o.field, "Base field F, e.g. GF(4)(Z)")->required();
  prim->add_option("--n", o.n)->required();
  prim->add_option("--a", o.a, "a in q = X^{p^n} - X - a");
  prim->add_option("--subspace", o.subspace, "Comma-separated F_p-basis of R in GF(p^n)");
  prim->add_flag("--assume-irreducible", o.assume_irreducible);

  auto* lattice = app.add_subcommand("subfield-lattice", "Intermediate fields of F[alpha]/F");
  lattice->add_option("--p", o.p);
  lattice->add_option("--n", o.n)->required();
  lattice->add_option("--a", o.a);
  lattice->add_option("--field", o.field, "Base field (default GF(p^n)(Z))");

  auto* irred = app.add_subcommand("irreducible", "Irreducibility of X^{p^{n+e}} - X^{p^e} - g(Z^r)");
  irred->add_option("--K", o.K, "Finite field K")->required();
  irred->add_option("--n", o.n)->required();
  irred->add_option("--e", o.e);
  irred->add_option("--r", o.r);
  irred->add_option("--g", o.g, "g in K[Z]")->required();
  irred->add_flag("--oracle", o.oracle, "Also run the exhaustive factor search");

  auto* dickson = app.add_subcommand("dickson", "Dickson form Phi_m over F_p");
  dickson->add_option("--m", o.m)->required();
  dickson->add_option("--p", o.p)->required();

  auto* grid = app.add_subcommand("grid", "Run a suite of checks");
  grid->add_option("--suite", o.suite)->check(CLI::IsMember({"acceptance"}));

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--seed", o.seed, "Seed for randomized sampling");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitInput;
  }
  if (const char* env = std::getenv("ASLAB_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: ASLAB_SEED is not an unsigned integer\n";
      return kExitInput;
    }
  }

  try {
    if (*analyze) return run_analyze(o);
    if (*tensor) return run_tensor(o);
    if (*prim) return run_primitive(o);
    if (*lattice) return run_lattice(o);
    if (*irred) return run_irreducible(o);
    if (*dickson) return run_dickson(o);
    if (*grid) return run_grid(o);
  } catch (const aslab::ConsistencyError& err) {
    std::cerr << "consistency error: " << err.what() << "\n";
    return kExitConsistency;
  } catch (const aslab::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
