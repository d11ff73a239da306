// qlink: identity checks for Schur-type partition generating functions.
//
// Exit status: 0 all checks passed, 1 a check failed, 2 bad usage or config.

#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qlink/agsum.hpp"
#include "qlink/errors.hpp"
#include "qlink/json_io.hpp"
#include "qlink/lpi.hpp"
#include "qlink/partitions.hpp"
#include "qlink/qde.hpp"
#include "qlink/verify.hpp"

namespace {

constexpr int kUsage = 2;

struct Options {
  long long order = 30;
  long long m_max = 10;
  long long max = 10;
  bool json = false;
  bool gf = false;
  std::string name;
  std::string preset;
  std::string config;
  std::string stats = "parts";
  std::vector<int> excluded;
  long long coefficient = -1;
};

int cmd_verify(const Options& o) {
  qlink::SuiteOptions so;
  so.order = static_cast<std::uint32_t>(o.order);
  so.m_max = static_cast<std::uint32_t>(o.m_max);
  const auto results = qlink::run_suite(o.name, so);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (o.json) {
    std::cout << qlink::check_results_to_json(results).dump(2) << '\n';
  } else {
    std::size_t passed = 0;
    for (const auto& r : results) {
      passed += r.passed;
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.passed && !r.detail.empty()) std::cout << ": " << r.detail;
      std::cout << '\n';
    }
    std::cout << passed << '/' << results.size() << " checks passed at order " << o.order << '\n';
  }
  return all ? 0 : 1;
}

qlink::StatSpec stats_from_name(const std::string& s) {
  if (s == "parts") return qlink::StatSpec::parts_only();
  if (s == "even") return qlink::StatSpec::even_parts();
  if (s == "mod3") return qlink::StatSpec::multiples_of_3();
  throw qlink::InvalidSpec("unknown statistic \"" + s + "\"");
}

int cmd_enumerate(const Options& o) {
  const std::set<int> excluded(o.excluded.begin(), o.excluded.end());
  for (int e : excluded)
    if (e < 1) throw qlink::InvalidSpec("excluded parts must be positive");
  const auto stats = stats_from_name(o.stats);
  const auto n = static_cast<std::uint32_t>(o.max);
  const auto parts = qlink::enumerate_schur(static_cast<int>(n), excluded);
  if (o.json) {
    qlink::Json list = qlink::Json::array();
    for (const auto& p : parts) list.push_back(p.parts());
    qlink::Json out = {{"max", n},
                       {"excluded_smallest", o.excluded},
                       {"count", parts.size()},
                       {"partitions", list},
                       {"gf", qlink::series_to_json(qlink::gf_from_enumeration(n, excluded, stats))}};
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  for (const auto& p : parts) std::cout << qlink::to_string(p) << '\n';
  std::cout << parts.size() << " partitions of weight <= " << n << '\n';
  if (o.gf) std::cout << "gf: " << qlink::to_string(qlink::gf_from_enumeration(n, excluded, stats).poly()) << '\n';
  return 0;
}

int cmd_derive(const Options& o) {
  if (o.preset.empty() == o.config.empty()) throw qlink::InvalidSpec("give exactly one of --preset and --config");
  qlink::IdealSpec spec;
  if (o.preset == "schur-mod6") {
    spec = qlink::schur_mod6_preset();
  } else if (o.preset == "schur-mod3") {
    spec = qlink::schur_mod3_preset();
  } else if (!o.preset.empty()) {
    throw qlink::InvalidSpec("unknown ideal preset \"" + o.preset + "\"");
  } else {
    spec = qlink::ideal_from_json(qlink::load_json_file(o.config));
  }
  const auto report = qlink::derive_for_ideal(spec, static_cast<std::uint32_t>(o.order));
  if (o.json) {
    qlink::Json out = {{"equation", qlink::qde_to_json(report.equation)},
                       {"residual_zero", report.residual.is_zero()},
                       {"order", o.order}};
    if (!report.residual.is_zero())
      out["first_nonzero_monomial"] = qlink::monomial_to_json(report.residual.terms().front().first);
    if (report.matches_printed) out["proportional_to_printed"] = *report.matches_printed;
    out["passed"] = report.passed();
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << qlink::to_string(report.equation) << '\n';
    std::cout << "residual against the ideal generating function at order " << o.order << ": "
              << (report.residual.is_zero() ? "0" : "nonzero at " + qlink::to_string(report.residual.terms().front().first))
              << '\n';
    if (report.matches_printed)
      std::cout << "proportional to the printed equation: " << (*report.matches_printed ? "yes" : "no") << '\n';
  }
  return report.passed() ? 0 : 1;
}

int cmd_evaluate(const Options& o) {
  if (o.preset.empty() == o.config.empty()) throw qlink::InvalidSpec("give exactly one of --preset and --config");
  const auto n = static_cast<std::uint32_t>(o.order);
  qlink::TruncatedSeries s;
  if (!o.preset.empty()) {
    const auto id = qlink::preset_from_name(o.preset);
    if (!id) throw qlink::InvalidSpec("unknown preset \"" + o.preset + "\"");
    s = qlink::evaluate_preset(*id, n);
  } else {
    s = qlink::ag_evaluate(qlink::agspec_from_json(qlink::load_json_file(o.config)), n);
  }
  if (o.coefficient >= 0) s = qlink::x_coefficient(s, static_cast<std::uint32_t>(o.coefficient));
  if (o.json)
    std::cout << qlink::series_to_json(s).dump() << '\n';
  else
    std::cout << qlink::to_string(s.poly()) << " + O(q^" << n + 1 << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of Schur-type partition identities"};
  app.require_subcommand(1);
  Options o;

  std::string names;
  for (const auto& n : qlink::suite_names()) names += (names.empty() ? "" : ", ") + n;

  auto* verify = app.add_subcommand("verify", "Run a named check or suite");
  verify->add_option("name", o.name, "One of: " + names)->required();
  verify->add_option("--order", o.order, "Truncation order N")->check(CLI::NonNegativeNumber);
  verify->add_option("--m-max", o.m_max, "Largest coefficient index for recurrence checks")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--json", o.json, "JSON report");

  auto* enumerate = app.add_subcommand("enumerate", "List Schur partitions");
  enumerate->add_option("--max", o.max, "Largest weight")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--exclude-smallest", o.excluded, "Forbidden smallest parts")->delimiter(',');
  enumerate->add_option("--stats", o.stats, "Generating function weights: parts, even, mod3");
  enumerate->add_flag("--gf", o.gf, "Also print the generating function");
  enumerate->add_flag("--json", o.json, "JSON output");

  auto* derive = app.add_subcommand("derive", "Derive and check the q-difference equation of an ideal");
  derive->add_option("--preset", o.preset, "schur-mod6 or schur-mod3");
  derive->add_option("--config", o.config, "IdealSpec JSON file");
  derive->add_option("--order", o.order, "Truncation order N")->check(CLI::NonNegativeNumber);
  derive->add_flag("--json", o.json, "JSON output");

  auto* evaluate = app.add_subcommand("evaluate", "Expand a multi-sum");
  evaluate->add_option("--preset", o.preset, "Preset name");
  evaluate->add_option("--config", o.config, "AGSpec JSON file");
  evaluate->add_option("--order", o.order, "Truncation order N")->check(CLI::NonNegativeNumber);
  evaluate->add_option("--coefficient", o.coefficient, "Only the coefficient of x^M")->check(CLI::NonNegativeNumber);
  evaluate->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*derive) return cmd_derive(o);
    if (*evaluate) return cmd_evaluate(o);
  } catch (const qlink::InvalidSpec& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const qlink::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const qlink::NonTermination& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const qlink::NonIntegralExponent& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
