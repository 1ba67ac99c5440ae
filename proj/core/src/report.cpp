#include "aslab/report.hpp"

namespace aslab {

namespace {

Json values(const FieldDescriptor& F, const std::vector<Value>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(F.format(x));
  return out;
}

Json polys(const std::vector<Poly>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(format_poly(f));
  return out;
}

Json witnesses(const std::vector<Witness>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(to_json(w));
  return out;
}

}  // namespace

Json envelope(const std::string& command, const Json& body) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = command;
  for (const auto& [k, v] : body.items()) out[k] = v;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Witness& w) { return Json{{"condition", w.condition}, {"detail", w.detail}}; }

Json to_json(const AdReport& r) {
  const auto& F = *r.field;
  Json j;
  j["field"] = F.spec();
  j["size"] = r.size;
  j["c1"] = r.c1;
  j["c2"] = r.c2;
  j["c3"] = r.c3;
  j["eigenvalues"] = values(F, r.eigenvalues);
  j["eigenvalue_set_is_subfield"] = r.eigenvalue_set_is_subfield;
  Json dims = Json::object();
  for (const auto& [x, d] : r.eigenspace_dims) dims[F.format(x)] = d;
  j["eigenspace_dims"] = dims;
  j["ad_invariant_factors"] = polys(r.ad_invariant_factors.factors);
  j["invariant_factors"] = polys(r.invariant_factors.factors);
  j["diagonalizable"] = r.diagonalizable;
  if (r.recovered) {
    const auto& rec = *r.recovered;
    j["recovered"] = Json{{"p", rec.p}, {"n", rec.n}, {"e", rec.e}, {"a", F.format(rec.a)},
                          {"q", format_poly(rec.q)}, {"h", format_poly(rec.h)}};
  } else {
    j["recovered"] = nullptr;
  }
  if (r.eigenvector_invertibility) {
    const auto& v = *r.eigenvector_invertibility;
    j["eigenvector_invertibility"] =
        Json{{"all_invertible", v.all_invertible}, {"checked", v.checked}, {"failures", witnesses(v.failures)}};
  } else {
    j["eigenvector_invertibility"] = nullptr;
  }
  j["witnesses"] = witnesses(r.witnesses);
  j["inconsistencies"] = witnesses(r.inconsistencies);
  return j;
}

Json to_json(const JordanType& t, const FieldDescriptor& field) {
  Json blocks = Json::array();
  for (const auto& b : t.blocks) blocks.push_back(Json{{"eigenvalue", field.format(b.eigenvalue)}, {"size", b.size}});
  return blocks;
}

Json to_json(const std::vector<ElementaryDivisor>& divs) {
  Json out = Json::array();
  for (const auto& d : divs) out.push_back(Json{{"divisor", format_poly(d.divisor)}, {"multiplicity", d.multiplicity}});
  return out;
}

Json to_json(const GasVerdict& v) {
  Json j;
  j["verdict"] = v.irreducible ? "irreducible" : "reducible";
  if (v.irreducible) j["conditions"] = v.conditions;
  else j["witness"] = v.witness;
  j["r0"] = v.r0;
  j["s"] = v.s;
  j["reason"] = v.reason;
  return j;
}

Json to_json(const DicksonForm& form) {
  Json f = Json::array();
  for (const auto& fj : form.f) f.push_back(fj.to_string());
  return Json{{"m", form.m}, {"p", form.p}, {"phi", form.phi.to_string()}, {"terms", form.phi.terms.size()}, {"f", f}};
}

Json to_json(const SubspaceR& R) {
  return Json{{"ambient", R.ambient->spec()},
              {"dimension", R.dimension()},
              {"basis", values(*R.ambient, R.basis)},
              {"elements", values(*R.ambient, R.elements)}};
}

Json to_json(const PrimitiveElementResult& r, const SubspaceR& R) {
  return Json{{"subspace", to_json(R)},
              {"alpha_H", format_poly(r.alpha_H)},
              {"coefficients", values(*R.ambient, r.coefficients)},
              {"degree_over_F", r.degree_over_F},
              {"min_poly", format_poly(r.min_poly)},
              {"property_P", r.property_P}};
}

Json to_json(const SubfieldLattice& lattice) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    const auto& n = lattice.nodes[i];
    nodes.push_back(Json{{"id", i},
                         {"subspace", format_subspace(n.R)},
                         {"dimension", n.R.dimension()},
                         {"alpha_H", format_poly(n.alpha_H)},
                         {"degree_over_F", n.degree_over_F},
                         {"property_P", n.property_P}});
  }
  Json edges = Json::array();
  for (const auto& [a, b] : lattice.edges) edges.push_back(Json::array({a, b}));
  return Json{{"nodes", nodes}, {"edges", edges}};
}

}  // namespace aslab
