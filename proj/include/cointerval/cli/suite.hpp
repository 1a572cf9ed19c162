#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cointerval/cocat/report.hpp"

namespace cointerval::cli {

inline constexpr const char* kToolName = "cointerval";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode { kPass = 0, kFail = 1, kInconclusive = 2, kUsage = 3 };

int exit_code(cocat::Status s);

struct SuiteConfig {
  std::string context = "fincat";  // fincat | chaincat
  std::string ring = "Z";          // chaincat only
  std::string interval;            // built-in name; ignored when input is given
  std::vector<std::string> checks;
  std::size_t depth_bound = 12;
  std::size_t cap = 10000;
  long coeff_box = 3;
  /// With no checks named, run default_checks for the interval instead of
  /// rejecting the configuration.
  bool defaults_when_empty = false;

  /// Throws ConfigError on an unknown context, ring, check, or a zero cap.
  void validate() const;
  nlohmann::json to_json() const;
};

/// Checks run when none are named, for an interval with or without symmetry.
std::vector<std::string> default_checks(bool has_sigma);
const std::vector<std::string>& known_checks();

/// `report` is the deterministic payload; `timing` holds wall-clock
/// milliseconds per check and is never compared.
struct Report {
  nlohmann::json report;
  nlohmann::json timing = nlohmann::json::object();
  cocat::Status status = cocat::Status::Pass;
};

/// Runs the configured checks on a built-in interval or on `input`, which
/// holds the fincat text format or the chaincat JSON format. An empty check
/// list is a ConfigError unless defaults_when_empty is set; malformed input
/// throws ParseError.
Report run_suite(const SuiteConfig& config, const std::optional<std::string>& input = {});

/// {"report": ..., "timing": ...} with sorted keys, two-space indent and a
/// trailing newline.
std::string render(const Report& r);
/// The payload alone, in the same layout; this is what golden files hold.
std::string render_payload(const Report& r);

}  // namespace cointerval::cli
