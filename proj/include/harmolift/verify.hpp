#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "harmolift/lift.hpp"
#include "harmolift/operators.hpp"

namespace harmolift {

struct VerificationReport {
  std::string check_id;
  nlohmann::json params = nlohmann::json::object();
  int points{};
  double max_residual{};
  double tolerance{};
  bool pass{};
  std::int64_t runtime_ms{};
};

struct VerifyConfig {
  std::uint64_t seed{20240611};
  int trunc{64};
  /// Replaces every check's own tolerance when set.
  std::optional<double> tol;
  LiftMutation mutation;
  DiffConfig diff;
  bool parallel{true};
};

/// Suites: "specfun", "forms", "operators", "lift", "all".
const std::vector<std::string>& suite_names();

/// Check ids belonging to a suite, sorted. Throws std::invalid_argument for an
/// unknown suite.
std::vector<std::string> suite_checks(const std::string& suite);

/// Runs one check. Random points come from a generator seeded by
/// (cfg.seed, check_id), so a check's result does not depend on which other
/// checks run alongside it.
VerificationReport run_check(const std::string& check_id, const VerifyConfig& cfg);

/// Runs every check of a suite; the result is sorted by check_id.
std::vector<VerificationReport> run_suite(const std::string& suite, const VerifyConfig& cfg);

/// Parses a mutation name (b5, conv, divisor-log, sigma1, sigma-1, b0-const,
/// b0-gamma, b0-zeta); throws std::invalid_argument otherwise.
LiftMutation parse_mutation(const std::string& name);

nlohmann::json to_json(const VerificationReport& r);

}  // namespace harmolift
