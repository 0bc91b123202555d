#include "sugawara/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace sugawara {

namespace {

Rational coefficient_from_json(const json& j)
{
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("coefficient must be a fraction string, got " + j.dump());
}

int int_field(const json& obj, const char* name)
{
  if (!obj.is_object() || !obj.contains(name) || !obj.at(name).is_number_integer())
    throw std::invalid_argument(std::string("missing integer field '") + name + "' in " + obj.dump());
  return obj.at(name).get<int>();
}

}  // namespace

json element_to_json(const Element& v)
{
  json terms = json::array();
  for (const auto& [m, c] : v) {
    json mono = json::array();
    for (const auto& g : m) mono.push_back(json{{"i", g.i()}, {"j", g.j()}, {"r", g.r()}, {"depth", g.depth()}});
    terms.push_back(json{{"coeff", to_string(c)}, {"monomial", std::move(mono)}});
  }
  return terms;
}

Element element_from_json(const json& j)
{
  if (!j.is_array()) throw std::invalid_argument("element must be a JSON array");
  Element out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("monomial"))
      throw std::invalid_argument("element term needs 'coeff' and 'monomial'");
    Monomial m;
    for (const auto& g : term.at("monomial"))
      m.emplace_back(GenId{int_field(g, "i"), int_field(g, "j"), int_field(g, "r")}, int_field(g, "depth"));
    if (!std::is_sorted(m.begin(), m.end())) throw std::invalid_argument("monomial not in PBW order: " + term.dump());
    out.add(m, coefficient_from_json(term.at("coeff")));
  }
  return out;
}

json uxelem_to_json(const UXElem& v)
{
  json out = json::array();
  for (const auto& [key, e] : v) out.push_back(json{{"u", key.first}, {"x", key.second}, {"element", element_to_json(e)}});
  return out;
}

UXElem uxelem_from_json(const json& j)
{
  if (!j.is_array()) throw std::invalid_argument("u,x polynomial must be a JSON array");
  UXElem out;
  for (const auto& term : j) out.add(int_field(term, "u"), int_field(term, "x"), element_from_json(term.at("element")));
  return out;
}

json suga_table_to_json(const SugaTable& table, bool selected_only)
{
  json vectors = json::array();
  for (const auto& [key, e] : table.entries) {
    const bool selected = table.is_selected(key.first, key.second);
    if (selected_only && !selected) continue;
    vectors.push_back(json{{"k", key.first}, {"r", key.second}, {"selected", selected}, {"element", element_to_json(e)}});
  }
  return json{{"pyramid", table.pyramid.to_string()}, {"vectors", std::move(vectors)}};
}

json shift_generators_to_json(const Pyramid& p, const std::vector<ShiftGenerator>& gens)
{
  json out = json::array();
  for (const auto& g : gens)
    out.push_back(json{{"k", g.k}, {"r", g.r}, {"m", g.m}, {"selected", true}, {"element", element_to_json(g.element)}});
  return json{{"pyramid", p.to_string()}, {"generators", std::move(out)}};
}

json report_to_json(const Report& report)
{
  json cases = json::array();
  for (const auto& c : report.cases) {
    json entry{{"generator", c.generator}, {"status", to_string(c.status)}};
    entry["s"] = c.s ? json(*c.s) : json(nullptr);
    entry["k"] = c.k ? json(*c.k) : json(nullptr);
    entry["r"] = c.r ? json(*c.r) : json(nullptr);
    if (c.m) entry["m"] = *c.m;
    if (!c.note.empty()) entry["note"] = c.note;
    if (c.difference) entry["difference"] = element_to_json(*c.difference);
    cases.push_back(std::move(entry));
  }
  return json{{"check", report.check},
              {"pyramid", report.pyramid},
              {"passed", report.passed()},
              {"cases", std::move(cases)},
              {"seed", report.seed ? json(*report.seed) : json(nullptr)}};
}

Chi chi_from_json(const json& j, const Pyramid& p)
{
  if (!j.is_object()) throw std::invalid_argument("chi must be a JSON object {\"E[i,j,r]\": \"p/q\"}");
  Chi chi;
  for (const auto& [key, value] : j.items()) {
    const GenId g = parse_gen_id(key);
    if (!p.valid(g)) throw std::invalid_argument("chi key " + key + " is not a basis element of pyramid " + p.to_string());
    const Rational v = coefficient_from_json(value);
    if (v != 0) chi[g] = v;
  }
  return chi;
}

json chi_to_json(const Chi& chi)
{
  json out = json::object();
  for (const auto& [g, v] : chi) out[to_string(g)] = to_string(v);
  return out;
}

}  // namespace sugawara
