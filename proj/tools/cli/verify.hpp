#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hardy::cli {

/// Deliberate corruptions for exercising the failure path of `verify`.
enum class Fault { none, split_A, det_D };

std::optional<Fault> parse_fault(std::string_view name);

struct VerifyOptions {
  std::size_t max_m = 300;
  double tol = 1e-12;
  std::uint64_t seed = 20240611;
  std::vector<std::string> only;
  Fault fault = Fault::none;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::optional<std::size_t> first_violation;
  std::string detail;
  double seconds = 0.0;
};

/// Names accepted by VerifyOptions::only, in run order.
const std::vector<std::string>& check_names();

/// Throws UsageError for unknown names in `only`.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

/// One PASS/FAIL line per check and a summary line.
void write_verify_report(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace hardy::cli
