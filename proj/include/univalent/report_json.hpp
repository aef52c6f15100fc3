#pragma once

#include "json.hpp"
#include "univalent/cesaro.hpp"
#include "univalent/report.hpp"
#include "univalent/series.hpp"
#include "univalent/trig.hpp"
#include "univalent/verifiers.hpp"

namespace univalent {

void to_json(nlohmann::json& j, const ParameterSet& p);
void to_json(nlohmann::json& j, const Condition& c);
void to_json(nlohmann::json& j, const PredictedClass& c);
void to_json(nlohmann::json& j, const CriterionReport& r);
void to_json(nlohmann::json& j, const DiskGrid& g);
void to_json(nlohmann::json& j, const ClassReport& r);
void to_json(nlohmann::json& j, const PositivityResult& r);
void to_json(nlohmann::json& j, const CoefficientSequence& f);
void to_json(nlohmann::json& j, const CesaroParams& cp);

}  // namespace univalent

template <>
struct nlohmann::adl_serializer<univalent::ComplexPoint> {
  static void to_json(json& j, const univalent::ComplexPoint& z) { j = json{{"re", z.real()}, {"im", z.imag()}}; }
};
