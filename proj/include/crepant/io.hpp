#pragma once

// JSON documents for every exchanged type, and text / LaTeX renderings of
// product tables. JSON objects use sorted keys and coefficient lists keep the
// containers' lexicographic order, so output is byte-stable.

#include "crepant/isocheck.hpp"
#include "crepant/resolve.hpp"

#include <json.hpp>

#include <string>

namespace crepant::io {

using nlohmann::json;

json to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const json& j);

json to_json(const BaseScalar& x);
BaseScalar base_scalar_from_json(const json& j);

json to_json(const CorrectionFunction& f);
CorrectionFunction correction_from_json(const json& j, int n);

json to_json(const ExcClass& x);
ExcClass exc_class_from_json(const json& j, int n);

json to_json(const ProductTable& t);
ProductTable table_from_json(const json& j);

json to_json(const LinearMap& m);
LinearMap linear_map_from_json(const json& j);

json to_json(const TransportReport& r);
json to_json(const A1Solution& s);
json to_json(const A2Solution& s);
json to_json(const ScanEntry& e);
json to_json(const McKayGraph& g);
json to_json(const ResolutionGraph& g);

/// One line per product g_i * g_j with i <= j, e.g. "e1 * e1 = 1/3*L e2".
std::string table_text(const ProductTable& t);
/// eqnarray rows with L and M coefficients factored by 1/(n+1).
std::string table_latex(const ProductTable& t);
std::string report_text(const TransportReport& r);

}  // namespace crepant::io
