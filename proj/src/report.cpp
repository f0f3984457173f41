#include "hopfcalc/report.hpp"

#include "hopfcalc/serialize.hpp"

namespace hopfcalc {

nlohmann::json to_json(const Violation& v) {
  return {{"key", v.key}, {"detail", v.detail}};
}

namespace {

nlohmann::json violations_json(const std::vector<Violation>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

}  // namespace

nlohmann::json to_json(const CheckReport& r) {
  return {{"check", r.check},
          {"degree_bound", r.degree_bound},
          {"passed", r.passed()},
          {"violations", violations_json(r.violations)}};
}

nlohmann::json to_json(const FiltrationReport& r) {
  return {{"check", r.check},
          {"checked_degree_bound", r.checked_degree_bound},
          {"connected", r.connected},
          {"counit_compatible", r.counit_compatible},
          {"coproduct_compatible", r.coproduct_compatible},
          {"passed", r.passed()},
          {"violations", violations_json(r.violations)}};
}

nlohmann::json ReportDocument::to_json() const {
  return {{"instance", instance},
          {"command", command},
          {"max_degree", max_degree},
          {"result", result},
          {"violations", violations},
          {"version", kVersion}};
}

std::string ReportDocument::dump() const { return to_json().dump(2) + "\n"; }

}  // namespace hopfcalc
