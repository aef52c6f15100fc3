#include "univalent/report_json.hpp"

namespace univalent {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

void to_json(json& j, const ParameterSet& p) {
  j = json{{"alpha", p.alpha}, {"beta", p.beta}, {"lambda", p.lambda}, {"mu", p.mu}, {"gamma", p.gamma}};
}

void to_json(json& j, const Condition& c) {
  j = json{{"label", c.label},
           {"k", c.k ? json(*c.k) : json(nullptr)},
           {"lhs", c.lhs},
           {"rhs", c.rhs},
           {"ok", c.ok},
           {"vacuous", c.vacuous}};
  if (!c.counted) j["informational"] = true;
}

void to_json(json& j, const PredictedClass& c) {
  j = json{{"name", c.name}, {"order", optional_number(c.order)}, {"with_respect_to", c.with_respect_to}};
}

void to_json(json& j, const CriterionReport& r) {
  j = json{{"theorem", r.criterion},
           {"params", r.params},
           {"gating", r.gating},
           {"conditions", r.conditions},
           {"all_satisfied", r.all_satisfied},
           {"predicted_class", r.predicted_class}};
  if (!r.notes.empty()) j["notes"] = r.notes;
}

void to_json(json& j, const DiskGrid& g) { j = json{{"radii", g.radii}, {"angles", g.angles}}; }

void to_json(json& j, const ClassReport& r) {
  j = json{{"class", r.class_name},
           {"gamma", optional_number(r.gamma)},
           {"holds", r.holds},
           {"margin", r.margin},
           {"witness", r.witness},
           {"grid", r.grid},
           {"tolerance", r.tolerance}};
  if (r.denominator_zero) j["denominator_zero"] = true;
  json radii = json::array();
  for (const auto& m : r.per_radius) {
    radii.push_back(json{{"radius", m.radius}, {"margin", m.margin}, {"witness", m.witness}});
  }
  j["per_radius"] = std::move(radii);
}

void to_json(json& j, const PositivityResult& r) {
  j = json{{"min_value", r.min_value},
           {"argmin_theta", r.argmin_theta},
           {"refined", r.refined},
           {"positive", r.positive},
           {"evidence", "numerical scan over an open grid, not a proof"}};
}

void to_json(json& j, const CoefficientSequence& f) {
  j = json::array();
  for (double a : f.values()) j.push_back(a);
}

void to_json(json& j, const CesaroParams& cp) { j = json{{"b", cp.b()}, {"c", cp.c()}, {"n", cp.n()}}; }

}  // namespace univalent
