#include "trinb/tables.hpp"

#include <algorithm>
#include <sstream>

#include "trinb/counting.hpp"
#include "trinb/error.hpp"

namespace trinb {

namespace {

RatioFormat with_override(RatioFormat f, const TableOptions& o) {
  if (o.digits) f.digits = *o.digits;
  return f;
}

Shape cube(int m, int n) { return Shape(std::vector<int>(static_cast<std::size_t>(n), m)); }

EnumerationLimits limits_of(const TableOptions& o) { return EnumerationLimits{o.budget, o.threads}; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string render_grid(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                        TableFormat format) {
  std::ostringstream os;
  if (format == TableFormat::csv) {
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) s += "  ";
      s += std::string(width[i] - r[i].size(), ' ') + r[i];
    }
    os << s << '\n';
  };
  line(header);
  std::size_t total = 0;
  for (auto w : width) total += w;
  os << std::string(total + 2 * (width.size() - 1), '-') << '\n';
  for (const auto& r : rows) line(r);
  return os.str();
}

}  // namespace

std::vector<Table1Row> table1(const TableOptions& options) {
  std::vector<int> ms;
  for (int m = 1; m <= 15; ++m) ms.push_back(m);
  ms.push_back(100);
  std::vector<Table1Row> rows;
  for (int m : ms) {
    Table1Row r;
    r.m = m;
    const auto u = static_cast<std::uint64_t>(m);
    r.d_f = d_f2(u, u);
    r.d_e = d_e2(u, u);
    RatioFormat f = m <= 15 ? RatioFormat{RatioFormat::Mode::fixed, 9} : RatioFormat{RatioFormat::Mode::scientific, 6};
    r.ratio = render_ratio(r.d_f, r.d_e, with_override(f, options));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<Table2Row> table2(const TableOptions& options) {
  const RatioFormat f = with_override({RatioFormat::Mode::significant, 7}, options);
  std::vector<Table2Row> rows;
  for (int n = 1; n <= 6; ++n) {
    Table2Row r;
    r.n = n;
    DownsetCensus c = census_downsets(cube(2, n), true, limits_of(options));
    r.d_f = BigCount(c.maximal_antichains);
    r.d_e = BigCount(c.antichains);
    r.ratio = render_ratio(r.d_f, r.d_e, f);
    rows.push_back(std::move(r));
  }
  Table2Row r7;
  r7.n = 7;
  r7.d_f = BigCount(kReferenceDf27);
  r7.d_e = BigCount(kReferenceDe27);
  r7.ratio = render_ratio(r7.d_f, r7.d_e, f);
  r7.reference = true;
  rows.push_back(std::move(r7));
  return rows;
}

Table3 table3(const TableOptions& options) {
  Table3 t;
  t.ms = {1, 2, 3, 4, 5};
  t.ns = {1, 2, 3, 4};
  for (int m : t.ms) {
    std::vector<std::optional<BigCount>> row;
    for (int n : t.ns) {
      Shape s = cube(m, n);
      if (antichain_count_lower_bound(s) > options.budget) {
        row.emplace_back();
        continue;
      }
      try {
        row.emplace_back(count_maximal_antichains_bruteforce(s, limits_of(options)));
      } catch (const BudgetExceeded&) {
        row.emplace_back();
      }
    }
    t.cells.push_back(std::move(row));
  }
  return t;
}

std::vector<RatioLine> table3_ratios(const TableOptions& options) {
  const RatioFormat f = with_override({RatioFormat::Mode::fixed, 8}, options);
  std::vector<RatioLine> out;
  for (int m : {3, 4}) {
    RatioLine l;
    l.m = m;
    l.n = 3;
    DownsetCensus c = census_downsets(cube(m, 3), true, limits_of(options));
    l.d_f = BigCount(c.maximal_antichains);
    l.d_e_bruteforce = BigCount(c.antichains);
    l.d_e_closed = *antichain_count_closed_form(cube(m, 3));
    l.ratio = render_ratio(l.d_f, l.d_e_closed, f);
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<PrintedRow> printed_table1() {
  return {
      {1, "1", "2", "0.5"},
      {2, "3", "6", "0.5"},
      {3, "9", "20", "0.45"},
      {4, "27", "70", "0.385714286"},
      {5, "83", "252", "0.329365079"},
      {6, "259", "924", "0.28030303"},
      {7, "817", "3432", "0.238053613"},
      {8, "2599", "12870", "0.201942502"},
      {9, "8323", "48620", "0.171184698"},
      {10, "26797", "184756", "0.145039945"},
      {11, "86659", "705432", "0.122845292"},
      {12, "281287", "2704156", "0.104020256"},
      {13, "915907", "10400600", "0.088062900"},
      {14, "2990383", "40116600", "0.074542284"},
      {15, "9786369", "155117520", "0.06309003"},
      {100, "3.76527E+51", "9.05485E+58", "4.15829E-08"},
  };
}

std::vector<PrintedRow> printed_table2() {
  return {
      {1, "2", "3", "0.6666667"},
      {2, "3", "6", "0.5"},
      {3, "7", "20", "0.35"},
      {4, "29", "168", "0.172619"},
      {5, "376", "7581", "0.04959768"},
      {6, "31746", "7828354", "0.004055259"},
      {7, "123805914", "2414682040998", "0.00005127214"},
  };
}

std::vector<std::vector<std::string>> printed_table3() {
  return {
      {"1", "1", "1", "1"},
      {"2", "3", "7", "29"},
      {"3", "9", "144", "116547"},
      {"4", "27", "10631", "?"},
      {"5", "83", "?", "?"},
  };
}

std::vector<PrintedRow> printed_table3_ratios() {
  return {
      {3, "", "980", "0.14693878"},
      {4, "", "232848", "0.04565639"},
  };
}

bool count_matches_printed(const BigCount& value, const std::string& printed) {
  if (printed.find('E') != std::string::npos) {
    const auto point = printed.find('.');
    const auto e = printed.find('E');
    const int significant = static_cast<int>(e - (point == std::string::npos ? 0 : 1));
    return value.to_scientific(significant) == printed;
  }
  return value.to_string() == printed;
}

bool ratio_matches_printed(const std::string& value, const std::string& printed) {
  return normalize_decimal(value) == normalize_decimal(printed);
}

std::string render_table1(const std::vector<Table1Row>& rows, TableFormat format) {
  std::vector<std::vector<std::string>> body;
  for (const auto& r : rows)
    body.push_back({std::to_string(r.m), r.d_f.to_string(), r.d_f.to_scientific(), r.d_e.to_string(),
                    r.d_e.to_scientific(), r.ratio});
  return render_grid({"m", "D_F(m,2)", "D_F sci", "D_E(m,2)", "D_E sci", "ratio"}, body, format);
}

std::string render_table2(const std::vector<Table2Row>& rows, TableFormat format) {
  std::vector<std::vector<std::string>> body;
  for (const auto& r : rows)
    body.push_back({std::to_string(r.n), r.d_f.to_string(), r.d_f.to_scientific(), r.d_e.to_string(),
                    r.d_e.to_scientific(), r.ratio, r.reference ? "reference, not recomputed" : "brute force"});
  return render_grid({"n", "D_F(2,n)", "D_F sci", "D_E(2,n)", "D_E sci", "ratio", "source"}, body, format);
}

std::string render_table3(const Table3& t, const std::vector<RatioLine>& ratios, TableFormat format) {
  std::vector<std::string> header{"D_F(m,n)"};
  for (int n : t.ns) header.push_back("n=" + std::to_string(n));
  std::vector<std::vector<std::string>> body;
  for (std::size_t i = 0; i < t.ms.size(); ++i) {
    std::vector<std::string> row{"m=" + std::to_string(t.ms[i])};
    for (const auto& c : t.cells[i]) row.push_back(c ? c->to_string() : "?");
    body.push_back(std::move(row));
  }
  std::string out = render_grid(header, body, format);
  std::vector<std::vector<std::string>> rbody;
  for (const auto& l : ratios)
    rbody.push_back({std::to_string(l.m), std::to_string(l.n), l.d_f.to_string(), l.d_e_closed.to_string(),
                     l.d_e_bruteforce.to_string(), l.ratio});
  out += "\n";
  out += render_grid({"m", "n", "D_F", "D_E closed form", "D_E brute force", "ratio"}, rbody, format);
  return out;
}

}  // namespace trinb
