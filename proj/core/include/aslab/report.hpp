#pragma once

// JSON views of the analysis results. Keys keep insertion order, elements and
// polynomials are written with the field and polynomial printers, so the text
// parses back to the same values.

#include <string>

#include <nlohmann/json.hpp>

#include "aslab/ad_analyzer.hpp"
#include "aslab/dickson.hpp"
#include "aslab/irred.hpp"
#include "aslab/tensor.hpp"

namespace aslab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// {"schema_version": ..., "command": ...} followed by the keys of `body`.
Json envelope(const std::string& command, const Json& body);
// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

Json to_json(const Witness& w);
Json to_json(const AdReport& r);
Json to_json(const JordanType& t, const FieldDescriptor& field);
Json to_json(const std::vector<ElementaryDivisor>& divs);
Json to_json(const GasVerdict& v);
Json to_json(const DicksonForm& form);
Json to_json(const SubspaceR& R);
Json to_json(const PrimitiveElementResult& r, const SubspaceR& R);
Json to_json(const SubfieldLattice& lattice);

}  // namespace aslab
