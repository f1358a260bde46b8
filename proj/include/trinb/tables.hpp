#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trinb/big_count.hpp"
#include "trinb/chain_poset.hpp"

namespace trinb {

struct TableOptions {
  /// Overrides the digit count of every ratio column (fractional digits for
  /// fixed columns, significant digits otherwise).
  std::optional<int> digits;
  /// Table 3 cells whose antichain count is known to exceed this are "?".
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
};

struct Table1Row {
  int m = 0;
  BigCount d_f;  // D_F(m,2) by the two-chain recurrence
  BigCount d_e;  // D_E(m,2) = C(2m, m)
  std::string ratio;
};

struct Table2Row {
  int n = 0;
  BigCount d_f;
  BigCount d_e;
  std::string ratio;
  /// Shipped constants, not recomputed.
  bool reference = false;
};

struct Table3 {
  std::vector<int> ms;  // rows
  std::vector<int> ns;  // columns
  /// cells[i][j] = D_F(ms[i], ns[j]), nullopt when out of budget.
  std::vector<std::vector<std::optional<BigCount>>> cells;
};

struct RatioLine {
  int m = 0;
  int n = 0;
  BigCount d_f;
  BigCount d_e_closed;
  BigCount d_e_bruteforce;
  std::string ratio;
};

std::vector<Table1Row> table1(const TableOptions& options = {});
std::vector<Table2Row> table2(const TableOptions& options = {});
Table3 table3(const TableOptions& options = {});
/// D_F(m,3) / D_E(m,3) for m = 3, 4, with D_E both in closed form and by
/// brute force.
std::vector<RatioLine> table3_ratios(const TableOptions& options = {});

/// D_F(2,7) and D_E(2,7).
inline constexpr std::uint64_t kReferenceDf27 = 123'805'914;
inline constexpr std::uint64_t kReferenceDe27 = 2'414'682'040'998;

/// Values as printed, for comparison against the recomputation.
struct PrintedRow {
  int index = 0;
  std::string d_f;
  std::string d_e;
  std::string ratio;
};
std::vector<PrintedRow> printed_table1();
std::vector<PrintedRow> printed_table2();
/// Rows m = 1..5, columns n = 1..4; "?" where no value is printed.
std::vector<std::vector<std::string>> printed_table3();
/// (m, n, D_E, ratio) for the two ratio lines.
std::vector<PrintedRow> printed_table3_ratios();

/// Printed count text: full decimal, or scientific when it has an 'E'.
bool count_matches_printed(const BigCount& value, const std::string& printed);
bool ratio_matches_printed(const std::string& value, const std::string& printed);

enum class TableFormat { text, csv };

std::string render_table1(const std::vector<Table1Row>& rows, TableFormat format);
std::string render_table2(const std::vector<Table2Row>& rows, TableFormat format);
std::string render_table3(const Table3& t, const std::vector<RatioLine>& ratios, TableFormat format);

}  // namespace trinb
