#pragma once

// Named identity checks, grouped into suites for the command line tool.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlink/json_io.hpp"
#include "qlink/lpi.hpp"
#include "qlink/qde.hpp"

namespace qlink {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first discrepancy on failure
};

struct SuiteOptions {
  std::uint32_t order = 30;
  std::uint32_t m_max = 10;
};

/// Preset names followed by the suite names accepted by run_suite.
std::vector<std::string> suite_names();

/// Throws InvalidSpec for an unknown name.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& options);

Json check_results_to_json(const std::vector<CheckResult>& results);

/// Field-wise comparison that reports the least differing monomial.
CheckResult compare_series(const std::string& name, const TruncatedSeries& lhs, const TruncatedSeries& rhs);

struct DeriveReport {
  QDifferenceEquation equation;
  TruncatedSeries residual;            // against the ideal's own generating function
  std::optional<bool> matches_printed; // proportionality test, modulus-6 preset only
  bool passed() const { return residual.is_zero() && matches_printed.value_or(true); }
};

/// Class reduction, elimination and self-verification for an ideal.
DeriveReport derive_for_ideal(const IdealSpec& spec, std::uint32_t order);

bool same_ideal(const IdealSpec& a, const IdealSpec& b);

}  // namespace qlink
