#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trinb/outranking.hpp"
#include "trinb/representation.hpp"
#include "trinb/tables.hpp"

namespace trinb {

enum ExitStatus : int {
  kExitOk = 0,
  kExitClaimFailed = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

struct CommandResult {
  int exit_status = kExitOk;
  /// Human-readable report.
  std::string text;
  /// Structured report; the stable contract.
  std::string json;
};

CommandResult cmd_check(const std::string& partition_file);

struct AssignOptions {
  std::string spec_file;
  /// Falls back to the "rule" field of the spec file, then to pd.
  std::optional<Rule> rule;
  std::vector<std::string> alternatives;
  /// Emit the induced partition as partition JSON.
  bool all = false;
};
CommandResult cmd_assign(const AssignOptions& options);

struct RepresentOptions {
  std::string partition_file;
  ModelClass model = ModelClass::F;
  SearchBudget budget;
  unsigned threads = 1;
};
CommandResult cmd_represent(const RepresentOptions& options);

struct CountOptions {
  std::vector<int> dims;
  bool maximal = false;
  std::optional<int> table;
  std::optional<std::pair<int, int>> lower_bound;  // (m, n)
  std::optional<int> digits;
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
};
CommandResult cmd_count(const CountOptions& options);

struct TableCommandOptions {
  int kind = 1;
  TableFormat format = TableFormat::csv;
  std::optional<int> digits;
  unsigned threads = 1;
};
CommandResult cmd_table(const TableCommandOptions& options);

struct VerifyOptions {
  SearchBudget budget;
  unsigned threads = 1;
  /// Fixture name -> partition file replacing the built-in partition.
  std::map<std::string, std::string> overrides;
};
CommandResult cmd_verify_paper(const VerifyOptions& options);

}  // namespace trinb
