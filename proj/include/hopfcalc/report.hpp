#ifndef HOPFCALC_REPORT_HPP
#define HOPFCALC_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace hopfcalc {

inline constexpr const char* kVersion = "0.1.0";

struct Violation {
  std::string key;     // rendered basis key (or key pair) where the check failed
  std::string detail;  // what failed
};

// Result of one axiom check quantified over the basis slice up to a bound.
// Violations are data, not errors: an empty list means the check passed.
struct CheckReport {
  std::string check;
  int degree_bound = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

// Result of a grading/filtration compatibility check (cograded/cofiltered).
// Invariant: violations is empty iff all three booleans are true.
struct FiltrationReport {
  std::string check;
  int checked_degree_bound = 0;
  bool connected = true;
  bool counit_compatible = true;
  bool coproduct_compatible = true;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

nlohmann::json to_json(const Violation& v);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const FiltrationReport& r);

}  // namespace hopfcalc

#endif  // HOPFCALC_REPORT_HPP
