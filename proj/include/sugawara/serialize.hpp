#pragma once

#include "sugawara/detcalc.hpp"
#include "sugawara/report.hpp"
#include "sugawara/shift.hpp"
#include "sugawara/suga.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sugawara {

using json = nlohmann::json;

/// [{"coeff": "p/q", "monomial": [{"i":..,"j":..,"r":..,"depth":..}, ...]}, ...]
/// Terms come out in canonical monomial order.
json element_to_json(const Element& v);
/// Inverse of element_to_json; rejects unsorted monomials and bad coefficients.
Element element_from_json(const json& j);

/// [{"u": .., "x": .., "element": <Element>}, ...]
json uxelem_to_json(const UXElem& v);
UXElem uxelem_from_json(const json& j);

/// {"pyramid": "2,3", "vectors": [{"k", "r", "selected", "element"}]}
json suga_table_to_json(const SugaTable& table, bool selected_only = false);

json shift_generators_to_json(const Pyramid& p, const std::vector<ShiftGenerator>& gens);

/// {"check", "pyramid", "cases": [...], "seed"}; failing cases carry "difference".
json report_to_json(const Report& report);

/// {"E[i,j,r]": "p/q", ...}; integer JSON values are accepted too.
Chi chi_from_json(const json& j, const Pyramid& p);
json chi_to_json(const Chi& chi);

}  // namespace sugawara
