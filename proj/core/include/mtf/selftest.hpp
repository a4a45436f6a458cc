// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace mtf::selftest {

struct CheckResult
{
  std::string name;
  double max_defect = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct SelftestOptions
{
  int n_max = 500;
  /// Flip the sign of every K symbol the suite assembles; used to prove the suite can fail.
  bool inject_k_sign_fault = false;
};

/// Identity suite over all presets: wronskian, v/k closed forms, calderon, square, inverse,
/// b_identity, accumulation, injectivity.
std::vector<CheckResult> run_selftest(const SelftestOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace mtf::selftest
