#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace metrotrade::verify {

inline constexpr std::uint64_t kDefaultSeed = 20241014;

/// Collects the expectations of one check. Every expectation compares a
/// measured deviation against an allowance; when the check is corrupted (the
/// test hook) every allowance becomes -inf so the check must fail.
class CheckContext {
 public:
  CheckContext(std::uint64_t seed, bool corrupted)
      : seed_(seed), corrupted_(corrupted) {}

  [[nodiscard]] std::uint64_t seed() const { return seed_; }

  /// |measured - expected| <= tolerance.
  bool near(std::string_view what, double measured, double expected,
            double tolerance);
  /// |measured - expected| <= tolerance * |expected|.
  bool near_relative(std::string_view what, double measured, double expected,
                     double tolerance);
  /// value <= bound + slack.
  bool at_most(std::string_view what, double value, double bound,
               double slack = 0.0);
  /// value >= bound - slack.
  bool at_least(std::string_view what, double value, double bound,
                double slack = 0.0);
  bool holds(std::string_view what, bool condition);

  /// Measured quantity echoed in the report.
  void note(std::string_view key, double value);
  void note(std::string_view key, std::string_view value);

  [[nodiscard]] bool passed() const { return failures_ == 0; }
  [[nodiscard]] std::uint64_t expectations() const { return expectations_; }
  [[nodiscard]] std::string detail() const;

 private:
  double allowance(double tolerance) const;
  bool record(bool ok, std::string_view what, std::string message);

  std::uint64_t seed_;
  bool corrupted_;
  std::uint64_t expectations_ = 0;
  std::uint64_t failures_ = 0;
  std::vector<std::string> failure_messages_;
  std::vector<std::string> notes_;
};

struct Check {
  std::string id;
  std::string title;
  std::function<void(CheckContext&)> body;
};

struct CheckOutcome {
  std::string id;
  std::string title;
  bool passed;
  std::uint64_t expectations;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Ids of checks whose tolerances are corrupted (test hook).
  std::vector<std::string> corrupt;
};

/// Exit criteria AC1..AC11.
std::vector<Check> acceptance_checks();
/// Per-module invariant suites.
std::vector<Check> invariant_checks();

CheckOutcome run_check(const Check& check, const VerifyOptions& options);
std::vector<CheckOutcome> run_checks(const std::vector<Check>& checks,
                                     const VerifyOptions& options);

/// One line per check: "[PASS] ID title: detail", followed by a summary.
std::string format_report(const std::vector<CheckOutcome>& outcomes);

bool all_passed(const std::vector<CheckOutcome>& outcomes);

/// Acceptance criteria followed by every invariant suite.
std::vector<CheckOutcome> run_verify(const VerifyOptions& options);

}  // namespace metrotrade::verify
