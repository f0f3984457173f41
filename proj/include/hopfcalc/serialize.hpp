#ifndef HOPFCALC_SERIALIZE_HPP
#define HOPFCALC_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "hopfcalc/element.hpp"
#include "hopfcalc/report.hpp"
#include "hopfcalc/tensor.hpp"

namespace hopfcalc {

// JSON forms are byte-deterministic: term arrays follow the key order and
// coefficients are exact decimal strings ("p" or "p/q").

template <BasisKey K>
nlohmann::json element_json(const Element<K>& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : a.terms())
    terms.push_back({{"coeff", c.to_string()}, {"key", k.to_string()}});
  return {{"kind", "element"}, {"terms", terms}, {"text", a.to_string()}};
}

template <BasisKey K>
nlohmann::json tensor_json(const Tensor<K>& t) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [tup, c] : t.terms()) {
    nlohmann::json keys = nlohmann::json::array();
    for (const auto& k : tup) keys.push_back(k.to_string());
    terms.push_back({{"coeff", c.to_string()}, {"keys", keys}});
  }
  return {{"kind", "tensor"},
          {"arity", t.arity()},
          {"terms", terms},
          {"text", t.to_string()}};
}

// The envelope every CLI invocation emits.
struct ReportDocument {
  std::string instance;
  std::string command;
  int max_degree = 0;
  nlohmann::json result;  // {"kind": "element"|"tensor"|"index"|"report", ...}
  nlohmann::json violations = nlohmann::json::array();

  nlohmann::json to_json() const;
  std::string dump() const;  // deterministic, trailing newline
};

}  // namespace hopfcalc

#endif  // HOPFCALC_SERIALIZE_HPP
