#pragma once

#include <string>

#include "fpb/boundary.hpp"
#include "fpb/gog.hpp"

namespace fpb {

// JSON encodings used by the command line tools. Word and element literals
// inside the JSON reuse the textual grammars of the core types.

std::string factor_to_json(const FactorSpec& f);
FactorSpec factor_from_json(const std::string& s);

std::string spec_to_json(const ProductSpec& spec);
ProductSpec spec_from_json(const std::string& s);

// {"kind":"stab","g":"0:a 1:t","factor":0,"xi":"a(a)"}
// {"kind":"end","prefix":"","period":"0:a 1:t"}
std::string point_to_json(const BoundaryPoint& x);
BoundaryPoint point_from_json(const ProductSpec& spec, const std::string& s);

std::string nbhd_to_json(const Nbhd& v);

// {"vertices":[{"id":"v1","tag":{"kind":"free","rank":2}}],
//  "edges":[{"a":"v1","b":"v2","edge_order":1}]}
std::string gog_to_json(const GraphOfGroups& g);
GraphOfGroups gog_from_json(const std::string& s);

}  // namespace fpb
