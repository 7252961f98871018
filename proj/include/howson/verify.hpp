#pragma once

// The `verify-paper` scenario: re-derives every finite, checkable claim of
// the construction and collects the outcomes into a report.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace howson {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct VerifyParams {
  int n_max = 1000;
  int q_max = 200;
  int depth = 10;
  int sweep_len = 10;
};

struct CheckResult {
  std::string id;
  std::string claim;
  std::string paper_anchor;
  bool passed = false;
  std::string details;
};

struct RankBoundEntry {
  std::int64_t q = 0;
  std::int64_t index = 0;
  std::int64_t rank_bound = 0;
};

struct VerificationReport {
  static constexpr int kSchemaVersion = 1;

  VerifyParams params;
  std::vector<CheckResult> checks;
  std::vector<RankBoundEntry> rank_bounds;

  bool all_passed() const;
  std::size_t passed_count() const;
  std::string to_json() const;
  std::string to_text() const;
};

/// Stable check ids, in execution order.
const std::vector<std::string>& verification_check_ids();

/// Runs every check. Individual failures are recorded; only parameter
/// problems (values < 1, depth above the ball limit) throw ParameterError.
VerificationReport run_verification(const VerifyParams& params);

}  // namespace howson
