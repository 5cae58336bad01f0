#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "parafree/verify.hpp"

namespace parafree {

// One machine-checked fact. paper_ref is the anchor of the published
// statement the check certifies; data holds the computed evidence.
struct CheckResult {
  std::string check_id;
  std::string paper_ref;
  std::string status;  // "pass" | "fail" | "inconclusive"
  nlohmann::ordered_json data;

  bool passed() const { return status == "pass"; }
  bool failed() const { return status == "fail"; }
};

struct SuiteConfig {
  std::int64_t p = 3;
  int l = 1;
  int k = 1;
  int max_class = 0;  // 0 = default for p (5 for p=3, 3 otherwise)
  int max_cosets = kDefaultMaxCosets;
  std::uint64_t seed = 2024;
  int random_cases = 1000;

  int effective_max_class() const {
    if (max_class > 0) return max_class;
    return p == 3 ? 5 : 3;
  }
};

// The one-shot certification suite: determinant identity, kernel shape,
// weakly-para towers for both families, the non-residual-nilpotence chain,
// the infinite-order suites, the tree search, and the commutator subgroup
// rank check. Deterministic for a fixed config.
std::vector<CheckResult> run_paper_suite(const SuiteConfig& config);

// 0 if every check passed, 2 if inconclusive checks but no failures,
// 1 otherwise.
int suite_exit_code(const std::vector<CheckResult>& results);

nlohmann::ordered_json suite_to_json(const std::vector<CheckResult>& results);
std::string suite_to_text(const std::vector<CheckResult>& results);

// Shared JSON helpers.
nlohmann::ordered_json json_int(const BigInt& v);
nlohmann::ordered_json lcs_report_json(const LcsReport& report);

}  // namespace parafree
