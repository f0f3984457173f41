// Acceptance suite: runs each acceptance criterion at its stated tolerance
// (exact rational equality throughout) and prints one PASS/FAIL line per
// criterion. Needs the CLI binary and the golden directory:
//
//   hopfcalc_acceptance <path-to-hopfcalc> <golden-dir>
//
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "hopfcalc/coalgebra.hpp"
#include "hopfcalc/hopf.hpp"
#include "hopfcalc/instances/connes_kreimer.hpp"
#include "hopfcalc/instances/polynomial.hpp"
#include "hopfcalc/instances/quasi_shuffle.hpp"
#include "hopfcalc/instances/shuffle.hpp"
#include "hopfcalc/parser.hpp"
#include "oracles.hpp"

using namespace hopfcalc;

namespace {

std::string g_cli;
std::string g_golden_dir;

// --- CLI plumbing -----------------------------------------------------------

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

struct CliResult {
  std::string out;
  int exit_code = -1;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::string cmd = shell_quote(g_cli);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --- criteria ----------------------------------------------------------------

// Criterion 1: coassociativity, counicity and bialgebra compatibility hold
// exactly on every basis element/pair of degree <= 6 in all four instances,
// within the stated runtime budget.
std::string axiom_suite() {
  const auto start = std::chrono::steady_clock::now();
  std::string failures;
  auto sweep = [&](const auto& h) {
    if (!check_coassociativity(h, 6).passed()) failures += h.name() + ":coassoc ";
    if (!check_counicity(h, 6).passed()) failures += h.name() + ":counit ";
    if (!check_bialgebra(h, 6).passed()) failures += h.name() + ":bialgebra ";
  };
  sweep(PolynomialAlgebra{});
  sweep(ShuffleAlgebra{2});
  sweep(QuasiShuffleAlgebra{3});
  sweep(ConnesKreimerAlgebra{});
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  if (secs >= 120) failures += "runtime " + std::to_string(secs) + "s >= 120s ";
  return failures;
}

// Criterion 2: Δ̄ⁿ(b) = Δ̄ⁿ⁺¹(b) = 0 and index(b) <= n for homogeneous b of
// degree n <= 6; equality index(w) = |w| on the word bases, cross-checked by
// brute-force deconcatenation.
std::string conilpotency() {
  std::string failures;
  auto vanish = [&](const auto& h) {
    using K = KeyOf<std::decay_t<decltype(h)>>;
    for (const auto& b : h.basis(6)) {
      const int n = b.degree();
      if (n < 1) continue;
      Element<K> e(b);
      if (!iterated_reduced_coproduct(h, e, n).is_zero() ||
          !iterated_reduced_coproduct(h, e, n + 1).is_zero()) {
        failures += h.name() + ":nonzero-at-" + b.to_string() + " ";
        return;
      }
      if (conilpotency_index(h, e) > n) {
        failures += h.name() + ":index>" + std::to_string(n) + " ";
        return;
      }
    }
  };
  vanish(PolynomialAlgebra{});
  vanish(ShuffleAlgebra{2});
  vanish(QuasiShuffleAlgebra{3});
  vanish(ConnesKreimerAlgebra{});

  ShuffleAlgebra sh(2);
  for (const auto& b : sh.basis(6)) {
    const int n = b.degree();
    if (n < 1) continue;
    if (conilpotency_index(sh, Element<WordKey>(b)) != n) {
      failures += "word-index!=" + std::to_string(n) + " ";
      break;
    }
    // brute force: least k with no split into k+1 nonempty parts
    int brute = 1;
    while (!oracles::deconcat_tensor(b.letters(), brute, false).is_zero()) ++brute;
    if (brute != n) {
      failures += "brute-index-mismatch-at-" + b.to_string() + " ";
      break;
    }
  }
  return failures;
}

// Criterion 3: every term of Δ̄(b) has both legs of degree strictly inside
// (0, deg b), for all basis b with 1 <= deg(b) <= 6.
std::string degree_drop() {
  std::string failures;
  auto drop = [&](const auto& h) {
    if (!check_degree_drop(h, 6).passed()) failures += h.name() + " ";
  };
  drop(PolynomialAlgebra{});
  drop(ShuffleAlgebra{2});
  drop(QuasiShuffleAlgebra{3});
  drop(ConnesKreimerAlgebra{});
  return failures;
}

// Criterion 4: S∗id = id∗S = uε exactly, S = antipode_series, degree <= 6.
std::string antipode_axiom() {
  std::string failures;
  auto axiom = [&](const auto& h) {
    auto s = antipode_endomap(h, AntipodeAlgorithm::kSeries);
    if (!verify_antipode(h, s, 6).passed()) failures += h.name() + " ";
  };
  axiom(PolynomialAlgebra{});
  axiom(ShuffleAlgebra{2});
  axiom(QuasiShuffleAlgebra{3});
  axiom(ConnesKreimerAlgebra{});
  return failures;
}

// Criterion 5: the three algorithms agree pointwise and match the
// degree-by-degree triangular solve of S∗id = uε (and its mirror).
std::string algorithm_agreement() {
  std::string failures;
  auto agree = [&](const auto& h) {
    using K = KeyOf<std::decay_t<decltype(h)>>;
    auto left = oracles::solve_antipode(h, 6, true);
    auto right = oracles::solve_antipode(h, 6, false);
    for (const auto& b : h.basis(6)) {
      Element<K> e(b);
      Element<K> s = antipode_series(h, e);
      if (s != antipode_recursive_left(h, e) ||
          s != antipode_recursive_right(h, e) || s != left.at(b) ||
          s != right.at(b)) {
        failures += h.name() + ":at-" + b.to_string() + " ";
        return;
      }
    }
  };
  agree(PolynomialAlgebra{});
  agree(ShuffleAlgebra{2});
  agree(QuasiShuffleAlgebra{3});
  agree(ConnesKreimerAlgebra{});
  return failures;
}

// Criterion 6: pinned antipode values.
std::string pinned_values() {
  std::string failures;

  PolynomialAlgebra poly;
  auto solved = oracles::solve_antipode(poly, 6, true);
  for (unsigned n = 0; n <= 6; ++n) {
    PolynomialKey xn(n);
    Element<PolynomialKey> expected(xn, n % 2 == 0 ? Rational(1) : Rational(-1));
    if (solved.at(xn) != expected ||
        antipode_series(poly, Element<PolynomialKey>(xn)) != expected)
      failures += "S(x^" + std::to_string(n) + ") ";
  }

  ShuffleAlgebra sh(2);
  for (const auto& w : sh.basis(4)) {
    std::string rev(w.letters().rbegin(), w.letters().rend());
    Element<WordKey> expected(WordKey(rev),
                              w.degree() % 2 == 0 ? Rational(1) : Rational(-1));
    if (antipode_recursive_left(sh, Element<WordKey>(w)) != expected) {
      failures += "S(" + w.to_string() + ") ";
      break;
    }
  }

  ConnesKreimerAlgebra ck;
  Tree dot;
  ForestKey l2({Tree({Tree()})});
  Element<ForestKey> expected(l2, Rational(-1));
  expected += Element<ForestKey>(ForestKey({dot, dot}));
  if (antipode_series(ck, Element<ForestKey>(l2)) != expected) failures += "S(l2) ";

  return failures;
}

// Criterion 7: the broken instance fails coassociativity and the antipode
// axiom at degree <= 3 with nonempty violation lists, counicity still
// passes, and the CLI exits with code 1.
std::string negative_control() {
  std::string failures;
  BrokenShuffleAlgebra broken(2);
  if (check_coassociativity(broken, 3).passed()) failures += "coassoc-passed ";
  if (!check_counicity(broken, 3).passed()) failures += "counit-failed ";
  if (verify_antipode(broken, antipode_endomap(broken, AntipodeAlgorithm::kSeries), 3)
          .passed())
    failures += "antipode-series-passed ";
  auto solved = oracles::solve_antipode(broken, 3, true);
  EndoMap<WordKey> s_solved([&](const WordKey& k) { return solved.at(k); });
  if (verify_antipode(broken, s_solved, 3).passed())
    failures += "antipode-solve-passed ";

  CliResult r = run_cli({"broken", "verify", "--all", "--max-degree", "3",
                         "--format", "json"});
  if (r.exit_code != 1)
    failures += "cli-exit-" + std::to_string(r.exit_code) + " ";
  return failures;
}

// Criterion 8: 200 seeded pseudo-random elements decompose exactly as
// a = ε(a)·u(1) + π(a) with ε(π(a)) = 0 and π idempotent.
std::string decomposition() {
  std::string failures;
  oracles::Rng rng(20190313);
  auto sample = [&](const auto& h) {
    using K = KeyOf<std::decay_t<decltype(h)>>;
    for (int i = 0; i < 50; ++i) {
      Element<K> a = oracles::random_element(h, rng, 6, 5);
      Element<K> pi = project_ker_counit(h, a);
      if (unit_element(h, counit(h, a)) + pi != a) failures += h.name() + ":sum ";
      if (!counit(h, pi).is_zero()) failures += h.name() + ":eps ";
      if (project_ker_counit(h, pi) != pi) failures += h.name() + ":idem ";
    }
  };
  sample(PolynomialAlgebra{});
  sample(ShuffleAlgebra{2});
  sample(QuasiShuffleAlgebra{3});
  sample(ConnesKreimerAlgebra{});
  return failures;
}

// Criterion 9: golden CLI transcripts reproduce byte-identically with the
// pinned exit codes, and the parse/render round trip holds on the corpus.
struct GoldenCase {
  std::string file;
  std::vector<std::string> args;
  int expect_exit;
};

const std::vector<GoldenCase> kGoldenCases = {
    {"01_shuffle_antipode_ab_all.json",
     {"shuffle", "antipode", "ab", "--algorithm", "all", "--format", "json"}, 0},
    {"02_poly_antipode_x2.json",
     {"poly", "antipode", "x^2", "--format", "json"}, 0},
    {"03_ck_antipode_ladder2.json",
     {"ck", "antipode", "T[T[]]", "--format", "json"}, 0},
    {"04_shuffle_verify_deg5.json",
     {"shuffle", "verify", "--all", "--max-degree", "5", "--format", "json"}, 0},
    {"05_broken_verify_deg3.json",
     {"broken", "verify", "--all", "--max-degree", "3", "--format", "json"}, 1},
    {"06_quasishuffle_verify_deg4.json",
     {"quasishuffle", "verify", "--all", "--max-degree", "4", "--format", "json"}, 0},
    {"07_shuffle_coproduct_abc_reduced2.json",
     {"shuffle", "coproduct", "abc", "--reduced", "--iterate", "2", "--format",
      "json"}, 0},
    {"08_poly_coproduct_x_reduced.json",
     {"poly", "coproduct", "x", "--reduced", "--format", "json"}, 0},
    {"09_ck_coproduct_ladder2.json",
     {"ck", "coproduct", "T[T[]]", "--format", "json"}, 0},
    {"10_shuffle_filtration_abc.json",
     {"shuffle", "filtration", "abc", "--format", "json"}, 0},
    {"11_poly_filtration_unit.json",
     {"poly", "filtration", "1", "--format", "json"}, 0},
    {"12_shuffle_filtration_mixed.json",
     {"shuffle", "filtration", "a + ab", "--format", "json"}, 0},
};

std::string cli_contract() {
  std::string failures;
  for (const auto& g : kGoldenCases) {
    CliResult r = run_cli(g.args);
    if (r.exit_code != g.expect_exit) {
      failures += g.file + ":exit-" + std::to_string(r.exit_code) + " ";
      continue;
    }
    const std::string expected = read_file(g_golden_dir + "/" + g.file);
    if (expected.empty()) {
      failures += g.file + ":missing-golden ";
      continue;
    }
    if (r.out != expected) failures += g.file + ":bytes-differ ";
  }

  // usage/parse error contract: exit 2
  CliResult bad = run_cli({"poly", "antipode", "x +", "--format", "json"});
  if (bad.exit_code != 2) failures += "parse-error-exit ";
  CliResult nonker = run_cli({"poly", "coproduct", "1", "--reduced"});
  if (nonker.exit_code != 2) failures += "reduced-nonzero-counit-exit ";
  CliResult zero = run_cli({"shuffle", "filtration", "ab - ab"});
  if (zero.exit_code != 2) failures += "filtration-zero-exit ";

  // HOPFCALC_MAX_DEGREE is picked up when --max-degree is absent
  setenv("HOPFCALC_MAX_DEGREE", "3", 1);
  CliResult env = run_cli({"poly", "verify", "--all", "--format", "json"});
  unsetenv("HOPFCALC_MAX_DEGREE");
  if (env.exit_code != 0 ||
      nlohmann::json::parse(env.out)["max_degree"] != 3)
    failures += "env-max-degree ";

  // --checks runs exactly the named subset
  CliResult subset = run_cli({"shuffle", "verify", "--checks", "coassoc,counit",
                              "--max-degree", "3", "--format", "json"});
  if (subset.exit_code != 0 ||
      nlohmann::json::parse(subset.out)["result"]["checks"].size() != 2)
    failures += "checks-subset ";

  // round trip over the corpus expressions, in the CLI's expression instances
  PolynomialAlgebra poly;
  ShuffleAlgebra sh(26);
  QuasiShuffleAlgebra qs(3);
  ConnesKreimerAlgebra ck;
  auto rt = [&](const auto& inst, const std::string& src) {
    auto e = parse_expression(inst, src);
    if (parse_expression(inst, e.to_string()) != e)
      failures += "roundtrip:" + src + " ";
  };
  rt(sh, "ab");
  rt(sh, "abc");
  rt(sh, "a + ab");
  rt(poly, "x^2");
  rt(poly, "x");
  rt(poly, "1");
  rt(ck, "T[T[]]");
  rt(ck, "T[T[]] * T[]");
  rt(qs, "2*(1)(1) + (2)");
  return failures;
}

struct Criterion {
  int number;
  std::string title;
  std::function<std::string()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: hopfcalc_acceptance <hopfcalc-binary> <golden-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_golden_dir = argv[2];
  unsetenv("HOPFCALC_MAX_DEGREE");

  const std::vector<Criterion> criteria = {
      {1, "axiom suite (coassoc, counit, bialgebra; degree <= 6, exact)",
       axiom_suite},
      {2, "conilpotency: reduced powers vanish at the degree", conilpotency},
      {3, "degree drop of the reduced coproduct", degree_drop},
      {4, "antipode axiom S*id = id*S = u eps (series antipode)", antipode_axiom},
      {5, "three antipode algorithms + triangular solve agree", algorithm_agreement},
      {6, "pinned antipode values (x^n, word reversal, ladder)", pinned_values},
      {7, "negative control: broken instance flagged, CLI exit 1", negative_control},
      {8, "counit decomposition on 200 seeded random elements", decomposition},
      {9, "CLI golden transcripts byte-identical; round trips", cli_contract},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::string failure = c.run();
    if (failure.empty()) {
      std::cout << "PASS " << c.number << ": " << c.title << "\n";
    } else {
      std::cout << "FAIL " << c.number << ": " << c.title << " -- " << failure
                << "\n";
      ++failed;
    }
    std::cout.flush();
  }
  return failed;
}
