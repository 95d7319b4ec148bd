#pragma once

// The end-to-end acceptance criteria, shared by the acceptance test binary
// and the `selftest` subcommand.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace dphi::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  /// When set, criterion 1 also compares the level-5 table byte-wise with
  /// this file.
  std::optional<std::filesystem::path> table_fixture;
};

/// 33,177,600 * phi(q/32) for q = 0..32, as published.
const std::vector<long>& published_level5_table();

/// Text expected from format_table(level_table(5)), built from the published
/// values alone.
std::string expected_level5_text();

std::vector<CriterionResult> run_all(const Options& opts = {});

/// "[PASS] 3 functional-equation ... (0.12 s) detail"
std::string format_line(const CriterionResult& r);

}  // namespace dphi::acceptance
