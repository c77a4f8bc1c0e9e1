#pragma once

/**
 * @file acceptance.hpp
 * @brief The acceptance suite: eleven pass/fail criteria built from the
 * oracles, the operators and the bound checks. Criteria 1-10 run in
 * process; criterion 11 (CLI determinism) lives in the acceptance binary
 * because it needs to spawn the CLI.
 */

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fracmod/harness.hpp"

namespace fracmod::acceptance {

struct AcceptanceConfig {
  /// Cells of the working grid for criteria that do not fix their own n.
  std::size_t n = 4096;
  std::uint64_t seed = 20240611;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  /// Representative reports (worst cases, calibrations, full sweeps).
  std::vector<harness::BoundReport> reports;
};

struct Criterion {
  int id;
  std::string title;
  std::function<CriterionResult(const AcceptanceConfig&)> run;
};

/// Criteria 1-10 in order.
const std::vector<Criterion>& criteria();

/// Runs every in-process criterion.
std::vector<CriterionResult> run_all(const AcceptanceConfig& config);

CriterionResult power_law_oracle(const AcceptanceConfig& config);
CriterionResult derivative_oracle(const AcceptanceConfig& config);
CriterionResult modulus_engine(const AcceptanceConfig& config);
CriterionResult sharpness(const AcceptanceConfig& config);
CriterionResult scaling_exactness(const AcceptanceConfig& config);
CriterionResult upper_bounds(const AcceptanceConfig& config);
CriterionResult kd_curve(const AcceptanceConfig& config);
CriterionResult riesz_exponent(const AcceptanceConfig& config);
CriterionResult gls_machinery(const AcceptanceConfig& config);
CriterionResult orlicz(const AcceptanceConfig& config);

}  // namespace fracmod::acceptance
