// hopfcalc: build connected coaugmented bialgebra instances, compute
// antipodes three ways, and run the coalgebra/bialgebra/Hopf axiom checks.
//
//   hopfcalc <instance> <command> [args] [--max-degree N] [--format text|json]
//   instances: poly | shuffle | quasishuffle | ck | broken
//   commands:  antipode | coproduct | filtration | verify
//
// Exit codes: 0 success / all checks pass, 1 check failures, 2 usage or
// parse errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "hopfcalc/coalgebra.hpp"
#include "hopfcalc/hopf.hpp"
#include "hopfcalc/instances/connes_kreimer.hpp"
#include "hopfcalc/instances/polynomial.hpp"
#include "hopfcalc/instances/quasi_shuffle.hpp"
#include "hopfcalc/instances/shuffle.hpp"
#include "hopfcalc/parser.hpp"
#include "hopfcalc/report.hpp"
#include "hopfcalc/serialize.hpp"

namespace {

using nlohmann::json;

struct CommonOptions {
  std::string instance;
  int max_degree = 8;
  std::string format = "text";
  int alphabet_size = 0;  // 0 = command default: 2 for verify, 26 otherwise
  unsigned max_weight = 3;
};

void add_common_options(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--max-degree", o.max_degree, "basis degree bound for checks")
      ->envname("HOPFCALC_MAX_DEGREE")
      ->check(CLI::Range(0, 64));
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--alphabet-size", o.alphabet_size,
                  "letters available to shuffle/broken words")
      ->check(CLI::Range(1, 26));
  cmd->add_option("--max-weight", o.max_weight,
                  "largest letter weight enumerated by quasishuffle")
      ->check(CLI::Range(1u, 1000u));
}

template <typename F>
int with_instance(const CommonOptions& o, bool verifying, F&& f) {
  const int alphabet = o.alphabet_size ? o.alphabet_size : (verifying ? 2 : 26);
  if (o.instance == "poly") {
    hopfcalc::PolynomialAlgebra a;
    return f(a);
  }
  if (o.instance == "shuffle") {
    hopfcalc::ShuffleAlgebra a(alphabet);
    return f(a);
  }
  if (o.instance == "quasishuffle") {
    hopfcalc::QuasiShuffleAlgebra a(o.max_weight);
    return f(a);
  }
  if (o.instance == "ck") {
    hopfcalc::ConnesKreimerAlgebra a;
    return f(a);
  }
  hopfcalc::BrokenShuffleAlgebra a(std::max(alphabet, 2));
  return f(a);
}

void emit(const hopfcalc::ReportDocument& doc, const CommonOptions& o,
          const std::string& text) {
  if (o.format == "json")
    std::cout << doc.dump();
  else
    std::cout << text;
}

template <hopfcalc::BialgebraLike H>
int run_antipode(const H& h, const CommonOptions& o, const std::string& expr,
                 const std::string& algorithm) {
  using K = hopfcalc::KeyOf<H>;
  hopfcalc::Element<K> a = hopfcalc::parse_expression(h, expr);
  hopfcalc::ReportDocument doc{h.name(), "antipode", o.max_degree};

  hopfcalc::Element<K> value;
  std::string text;
  if (algorithm == "all") {
    hopfcalc::Element<K> series = hopfcalc::antipode_series(h, a);
    hopfcalc::Element<K> left = hopfcalc::antipode_recursive_left(h, a);
    hopfcalc::Element<K> right = hopfcalc::antipode_recursive_right(h, a);
    const bool agree = series == left && series == right;
    value = series;
    doc.result = hopfcalc::element_json(value);
    doc.result["algorithm"] = "all";
    doc.result["agreement"] = agree;
    text = value.to_string() + "\nagreement: " + (agree ? "true" : "false") + "\n";
  } else {
    if (algorithm == "series")
      value = hopfcalc::antipode_series(h, a);
    else if (algorithm == "rec-left")
      value = hopfcalc::antipode_recursive_left(h, a);
    else
      value = hopfcalc::antipode_recursive_right(h, a);
    doc.result = hopfcalc::element_json(value);
    doc.result["algorithm"] = algorithm;
    text = value.to_string() + "\n";
  }
  emit(doc, o, text);
  return 0;
}

template <hopfcalc::BialgebraLike H>
int run_coproduct(const H& h, const CommonOptions& o, const std::string& expr,
                  bool reduced, int iterate) {
  using K = hopfcalc::KeyOf<H>;
  hopfcalc::Element<K> a = hopfcalc::parse_expression(h, expr);
  hopfcalc::Tensor<K> t = reduced
                              ? hopfcalc::iterated_reduced_coproduct(h, a, iterate)
                              : hopfcalc::iterated_coproduct(h, a, iterate);
  hopfcalc::ReportDocument doc{h.name(), "coproduct", o.max_degree};
  doc.result = hopfcalc::tensor_json(t);
  doc.result["reduced"] = reduced;
  doc.result["iterate"] = iterate;
  emit(doc, o, t.to_string() + "\n");
  return 0;
}

template <hopfcalc::BialgebraLike H>
int run_filtration(const H& h, const CommonOptions& o, const std::string& expr) {
  using K = hopfcalc::KeyOf<H>;
  hopfcalc::Element<K> a = hopfcalc::parse_expression(h, expr);
  const int index = hopfcalc::conilpotency_index(h, a);

  // Witness chain: term counts of Δ̄¹(π(a)) … Δ̄ⁿ(π(a)), the last being 0.
  std::vector<std::size_t> sizes;
  if (index >= 1) {
    hopfcalc::Element<K> x = hopfcalc::project_ker_counit(h, a);
    hopfcalc::Tensor<K> d = hopfcalc::reduced_coproduct(h, x);
    sizes.push_back(d.term_count());
    for (int k = 2; k <= index; ++k) {
      d = hopfcalc::detail::reduced_power_step(h, d);
      sizes.push_back(d.term_count());
    }
  }

  hopfcalc::ReportDocument doc{h.name(), "filtration", o.max_degree};
  doc.result = {{"kind", "index"}, {"index", index}, {"witness_sizes", sizes}};
  std::string text = "index: " + std::to_string(index) + "\n";
  if (!sizes.empty()) {
    text += "witness sizes:";
    for (auto s : sizes) text += " " + std::to_string(s);
    text += "\n";
  }
  emit(doc, o, text);
  return 0;
}

const std::vector<std::string> kAllChecks = {
    "coassoc", "counit", "cograded", "cofiltered",
    "degree-drop", "bialgebra", "antipode"};

template <hopfcalc::BialgebraLike H>
int run_verify(const H& h, const CommonOptions& o,
               const std::vector<std::string>& checks) {
  hopfcalc::ReportDocument doc{h.name(), "verify", o.max_degree};
  json check_array = json::array();
  std::string text;
  bool any_failed = false;

  auto record = [&](const auto& rep) {
    check_array.push_back(hopfcalc::to_json(rep));
    for (const auto& v : rep.violations)
      doc.violations.push_back(
          {{"check", rep.check}, {"key", v.key}, {"detail", v.detail}});
    if (!rep.passed()) any_failed = true;
    text += rep.check + ": " + (rep.passed() ? "PASS" : "FAIL (" +
                                std::to_string(rep.violations.size()) +
                                " violations)") + "\n";
    for (const auto& v : rep.violations)
      text += "  " + v.key + ": " + v.detail + "\n";
  };

  for (const auto& name : checks) {
    if (name == "coassoc")
      record(hopfcalc::check_coassociativity(h, o.max_degree));
    else if (name == "counit")
      record(hopfcalc::check_counicity(h, o.max_degree));
    else if (name == "cograded")
      record(hopfcalc::check_cograded(h, o.max_degree));
    else if (name == "cofiltered")
      record(hopfcalc::check_cofiltered(h, o.max_degree));
    else if (name == "degree-drop")
      record(hopfcalc::check_degree_drop(h, o.max_degree));
    else if (name == "bialgebra")
      record(hopfcalc::check_bialgebra(h, o.max_degree));
    else if (name == "antipode")
      record(hopfcalc::verify_antipode(
          h, hopfcalc::antipode_endomap(h, hopfcalc::AntipodeAlgorithm::kSeries),
          o.max_degree));
  }

  doc.result = {{"kind", "report"}, {"checks", check_array},
                {"passed", !any_failed}};
  text += std::string("overall: ") + (any_failed ? "FAIL" : "PASS") + "\n";
  emit(doc, o, text);
  return any_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact antipode computation and axiom checks for connected "
               "coaugmented bialgebras"};
  app.require_subcommand(1);

  CommonOptions common;
  app.add_option("instance", common.instance, "which bialgebra to work in")
      ->required()
      ->check(CLI::IsMember({"poly", "shuffle", "quasishuffle", "ck", "broken"}));

  std::string antipode_expr;
  std::string antipode_algorithm = "series";
  auto* antipode = app.add_subcommand("antipode", "antipode of an expression");
  antipode->add_option("expression", antipode_expr)->required();
  antipode->add_option("--algorithm", antipode_algorithm)
      ->check(CLI::IsMember({"series", "rec-left", "rec-right", "all"}));
  add_common_options(antipode, common);

  std::string coproduct_expr;
  bool coproduct_reduced = false;
  int coproduct_iterate = 1;
  auto* coproduct = app.add_subcommand("coproduct",
                                       "(reduced, iterated) coproduct of an expression");
  coproduct->add_option("expression", coproduct_expr)->required();
  coproduct->add_flag("--reduced", coproduct_reduced, "use Δ̄ instead of Δ");
  coproduct->add_option("--iterate", coproduct_iterate, "apply the k-fold power")
      ->check(CLI::Range(1, 64));
  add_common_options(coproduct, common);

  std::string filtration_expr;
  auto* filtration = app.add_subcommand(
      "filtration", "coradical filtration index of an expression");
  filtration->add_option("expression", filtration_expr)->required();
  add_common_options(filtration, common);

  bool verify_all = false;
  std::vector<std::string> verify_checks;
  auto* verify = app.add_subcommand("verify", "run axiom checks on the basis");
  verify->add_flag("--all", verify_all, "run every check");
  verify->add_option("--checks", verify_checks, "subset of checks to run")
      ->delimiter(',')
      ->check(CLI::IsMember(kAllChecks));
  add_common_options(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(antipode))
      return with_instance(common, false, [&](const auto& h) {
        return run_antipode(h, common, antipode_expr, antipode_algorithm);
      });
    if (app.got_subcommand(coproduct))
      return with_instance(common, false, [&](const auto& h) {
        return run_coproduct(h, common, coproduct_expr, coproduct_reduced,
                             coproduct_iterate);
      });
    if (app.got_subcommand(filtration))
      return with_instance(common, false, [&](const auto& h) {
        return run_filtration(h, common, filtration_expr);
      });
    // verify
    if (!verify_all && verify_checks.empty()) {
      std::cerr << "error: verify needs --all or --checks\n";
      return 2;
    }
    const std::vector<std::string> checks = verify_all ? kAllChecks : verify_checks;
    return with_instance(common, true, [&](const auto& h) {
      return run_verify(h, common, checks);
    });
  } catch (const hopfcalc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
