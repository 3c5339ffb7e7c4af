#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/decision.hpp"

namespace arbor {

enum class Status { pass, fail, exhausted };

constexpr std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::exhausted: return "exhausted";
  }
  return "fail";
}

/// Worst of two statuses: fail beats exhausted beats pass.
Status combine(Status a, Status b) noexcept;

/// One checked statement about one group.
struct ClaimResult {
  std::string criterion;
  /// Suite key: `G`, `Gtilde`, `gamma`, `gamma-bar` or `gamma-bar-bar`.
  std::string suite;
  std::string statement;
  Status status = Status::fail;
  std::string detail;
};

/// Aggregate over one acceptance criterion.
struct CriterionSummary {
  std::string criterion;
  std::string title;
  Status status = Status::pass;
  std::size_t checks = 0;
  std::size_t failed = 0;
  double seconds = 0;
  /// Stated time bound, zero when none. Exceeding it fails the criterion.
  double time_limit = 0;
};

struct ClaimOptions {
  /// Suite keys to run; empty means all.
  std::vector<std::string> suites;
  std::size_t budget = default_budget;
  unsigned seed = 20240611;
};

std::span<const std::string_view> suite_keys();
/// Builtin group name of a suite key; throws `NameError`.
std::string_view suite_group(std::string_view suite);

struct ClaimRun {
  std::vector<ClaimResult> results;
  std::vector<CriterionSummary> criteria;
};

/// Runs every acceptance check touching the selected suites. Results come in
/// criterion order; `criteria` lists each criterion that produced a result.
ClaimRun verify_claims(const ClaimOptions& options);

}  // namespace arbor
