#include "trinb/cli.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "trinb/counting.hpp"
#include "trinb/error.hpp"
#include "trinb/json_io.hpp"
#include "trinb/sampling.hpp"

namespace trinb {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json alternatives_json(const std::vector<Alternative>& xs, const Shape& shape) {
  ordered_json a = ordered_json::array();
  for (const auto& x : xs) a.push_back(to_string(x, shape));
  return a;
}

ordered_json violation_json(const LinearityViolation& v, const Shape& shape) {
  return {{"attribute", v.attribute + 1},
          {"in_A", {to_string(v.x_with_a, shape), to_string(v.y_with_b, shape)}},
          {"in_U", {to_string(v.y_with_a, shape), to_string(v.x_with_b, shape)}}};
}

CommandResult finish(int status, std::string text, const ordered_json& j) {
  return CommandResult{status, std::move(text), j.dump(2) + "\n"};
}

CommandResult failure(int status, const std::string& message) {
  ordered_json j{{"error", message}};
  return finish(status, "error: " + message + "\n", j);
}

/// Maps library exceptions to exit statuses.
CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    return failure(kExitBudget, e.what());
  } catch (const Error& e) {
    return failure(kExitUsage, e.what());
  } catch (const nlohmann::json::exception& e) {
    return failure(kExitUsage, e.what());
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

CommandResult cmd_check(const std::string& partition_file) {
  return guarded([&] {
    TwofoldPartition p = parse_partition_json(read_text_file(partition_file));
    const Shape& shape = p.shape();
    ordered_json j;
    std::ostringstream t;
    j["dims"] = shape.dims();
    j["size"] = shape.size();
    j["A_size"] = p.satisfactory_count();
    auto v = find_linearity_violation(p);
    j["linear"] = !v;
    t << "|X| = " << shape.size() << ", |A| = " << p.satisfactory_count() << "\n";
    t << "linear: " << yes_no(!v) << "\n";
    if (v) {
      j["violation"] = violation_json(*v, shape);
      t << "  violation: " << describe(*v, shape) << "\n";
    }
    ordered_json infl = ordered_json::array(), traces = ordered_json::array();
    for (int i = 0; i < shape.attributes(); ++i) {
      const bool inf = is_influential(p, i);
      TraceOrder tr = trace(p, i);
      infl.push_back(inf);
      traces.push_back({{"attribute", i + 1}, {"complete", tr.complete}, {"order", describe(tr)}});
      t << "attribute " << i + 1 << ": influential " << yes_no(inf) << ", trace " << describe(tr) << "\n";
    }
    j["influential"] = infl;
    j["traces"] = traces;
    const bool monotone = is_monotone(p);
    j["monotone"] = monotone;
    t << "A is an up-set: " << yes_no(monotone) << "\n";
    if (!v && monotone) {
      Antichain a = a_star(p), u = u_star(p);
      const bool maximal = !a.empty() && is_maximal_antichain(a, shape);
      j["a_star"] = alternatives_json(a, shape);
      j["u_star"] = alternatives_json(u, shape);
      j["a_star_maximal"] = maximal;
      j["fu_underline"] = fu_underline_representable(p).representable;
      t << "A* = " << to_string(a, shape) << "\n";
      t << "U* = " << to_string(u, shape) << "\n";
      t << "A* is a maximal antichain: " << yes_no(maximal) << "\n";
      t << "representable in F_u_bar: " << yes_no(maximal) << "\n";
    }
    return finish(kExitOk, t.str(), j);
  });
}

CommandResult cmd_assign(const AssignOptions& o) {
  return guarded([&] {
    const std::string text = read_text_file(o.spec_file);
    OutrankingSpec spec = parse_spec_json(text);
    Rule rule = Rule::pd;
    if (o.rule) {
      rule = *o.rule;
    } else {
      auto raw = ordered_json::parse(text);
      if (auto it = raw.find("rule"); it != raw.end() && it->is_string()) {
        auto r = parse_rule(it->get<std::string>());
        if (!r) throw ParseError("unknown rule \"" + it->get<std::string>() + "\"");
        rule = *r;
      }
    }
    auto report = validate_spec(spec);
    if (!report.ok()) {
      ordered_json j{{"valid", false}, {"violations", report.violations}};
      return finish(kExitUsage, "invalid spec: " + report.to_string() + "\n", j);
    }
    if (o.all) {
      std::string out = partition_to_json(induced_partition(spec, rule));
      return CommandResult{kExitOk, out, out};
    }
    if (o.alternatives.empty()) throw PreconditionError("give alternatives to assign, or --all");
    ordered_json rows = ordered_json::array();
    std::ostringstream t;
    for (const auto& s : o.alternatives) {
      Alternative x = parse_alternative(s, spec.shape);
      const char c = to_char(assign(x, spec, rule));
      rows.push_back({{"alternative", to_string(x, spec.shape)}, {"category", std::string(1, c)}});
      t << to_string(x, spec.shape) << " " << c << "\n";
    }
    ordered_json j{{"rule", std::string(to_string(rule))}, {"assignments", rows}};
    return finish(kExitOk, t.str(), j);
  });
}

CommandResult cmd_represent(const RepresentOptions& o) {
  return guarded([&] {
    TwofoldPartition p = parse_partition_json(read_text_file(o.partition_file));
    if (auto v = find_linearity_violation(p)) {
      ordered_json j{{"linear", false}, {"violation", violation_json(*v, p.shape())}};
      return finish(kExitUsage, "partition is not linear: " + describe(*v, p.shape()) + "\n", j);
    }
    SearchOptions so;
    so.model = o.model;
    so.budget = o.budget;
    so.threads = o.threads;
    SearchResult r = search_representation(p, so);
    const std::string model(to_string(o.model));
    std::ostringstream t;
    if (r.outcome == SearchOutcome::found) {
      const Rule rule = rule_of(o.model);
      t << "representable in " << model << " under rule " << to_string(rule) << "\n" << describe(*r.witness) << "\n";
      return CommandResult{kExitOk, t.str(), spec_to_json(*r.witness, rule)};
    }
    ordered_json j{{"model", model},
                   {"outcome", std::string(to_string(r.outcome))},
                   {"configurations", r.configurations},
                   {"coalition_families", r.coalition_families},
                   {"evaluations", r.evaluations},
                   {"seconds", r.seconds}};
    if (r.outcome == SearchOutcome::none) {
      t << "not representable in " << model << " (search exhausted " << r.configurations << " configurations, "
        << r.evaluations << " profile sets)\n";
      return finish(kExitOk, t.str(), j);
    }
    t << "budget exhausted after " << r.evaluations << " profile sets; no verdict\n";
    return finish(kExitBudget, t.str(), j);
  });
}

CommandResult cmd_table(const TableCommandOptions& o) {
  return guarded([&] {
    TableOptions to;
    to.digits = o.digits;
    to.threads = o.threads;
    ordered_json j;
    std::string text;
    j["table"] = o.kind;
    switch (o.kind) {
      case 1: {
        auto rows = table1(to);
        text = render_table1(rows, o.format);
        ordered_json a = ordered_json::array();
        for (const auto& r : rows)
          a.push_back({{"m", r.m}, {"D_F", r.d_f.to_string()}, {"D_E", r.d_e.to_string()}, {"ratio", r.ratio}});
        j["rows"] = a;
        break;
      }
      case 2: {
        auto rows = table2(to);
        text = render_table2(rows, o.format);
        ordered_json a = ordered_json::array();
        for (const auto& r : rows)
          a.push_back({{"n", r.n},
                       {"D_F", r.d_f.to_string()},
                       {"D_E", r.d_e.to_string()},
                       {"ratio", r.ratio},
                       {"source", r.reference ? "reference, not recomputed" : "brute force"}});
        j["rows"] = a;
        break;
      }
      case 3: {
        Table3 t3 = table3(to);
        auto ratios = table3_ratios(to);
        text = render_table3(t3, ratios, o.format);
        ordered_json a = ordered_json::array();
        for (std::size_t i = 0; i < t3.ms.size(); ++i) {
          ordered_json cells = ordered_json::array();
          for (const auto& c : t3.cells[i]) cells.push_back(c ? c->to_string() : "?");
          a.push_back({{"m", t3.ms[i]}, {"cells", cells}});
        }
        j["columns"] = t3.ns;
        j["rows"] = a;
        ordered_json rl = ordered_json::array();
        for (const auto& l : ratios)
          rl.push_back({{"m", l.m},
                        {"n", l.n},
                        {"D_F", l.d_f.to_string()},
                        {"D_E", l.d_e_closed.to_string()},
                        {"D_E_bruteforce", l.d_e_bruteforce.to_string()},
                        {"ratio", l.ratio}});
        j["ratios"] = rl;
        break;
      }
      default: throw PreconditionError("--table takes 1, 2 or 3");
    }
    return finish(kExitOk, text, j);
  });
}

CommandResult cmd_count(const CountOptions& o) {
  const int modes = (o.table ? 1 : 0) + (o.lower_bound ? 1 : 0) + (o.dims.empty() ? 0 : 1);
  if (modes != 1) return failure(kExitUsage, "give exactly one of --dims, --table, --lower-bound");
  if (o.table) return cmd_table(TableCommandOptions{*o.table, TableFormat::csv, o.digits, o.threads});
  return guarded([&] {
    const EnumerationLimits limits{o.budget, o.threads};
    std::ostringstream t;
    if (o.lower_bound) {
      auto [m, n] = *o.lower_bound;
      LowerBoundCheck c = lower_bound_check(m, n, limits);
      ordered_json j{{"m", m},
                     {"n", n},
                     {"D_F", c.maximal_count.to_string()},
                     {"D_E", c.antichain_count.to_string()},
                     {"holds", c.holds}};
      t << "D_F(" << m << "," << n << ") = " << c.maximal_count << (c.holds ? " >= " : " < ") << "D_E(" << m << ","
        << n - 1 << ") = " << c.antichain_count << "\n";
      return finish(c.holds ? kExitOk : kExitClaimFailed, t.str(), j);
    }
    Shape shape(o.dims);
    BigCount count;
    std::string method;
    if (o.maximal) {
      if (shape.attributes() == 2) {
        count = d_f2(static_cast<std::uint64_t>(o.dims[0]), static_cast<std::uint64_t>(o.dims[1]));
        method = "recurrence";
      } else {
        count = count_maximal_antichains_bruteforce(shape, limits);
        method = "brute force";
      }
    } else if (auto c = antichain_count_closed_form(shape)) {
      count = *c;
      method = "closed form";
    } else {
      count = count_antichains_bruteforce(shape, limits);
      method = "brute force";
    }
    ordered_json j{{"dims", o.dims},
                   {"kind", o.maximal ? "maximal_antichains" : "antichains"},
                   {"count", count.to_string()},
                   {"scientific", count.to_scientific()},
                   {"method", method}};
    t << count << " (" << count.to_scientific() << ", " << method << ")\n";
    return finish(kExitOk, t.str(), j);
  });
}

namespace {

struct Ledger {
  ordered_json checks = ordered_json::array();
  std::ostringstream text;
  bool failed = false;
  bool budget = false;

  void add(const std::string& section, const std::string& claim, bool passed, const std::string& detail = {},
           bool exhausted = false) {
    const char* status = passed ? "pass" : exhausted ? "budget" : "fail";
    if (!passed) (exhausted ? budget : failed) = true;
    checks.push_back({{"section", section}, {"claim", claim}, {"status", status}, {"detail", detail}});
    text << (passed ? "[PASS] " : exhausted ? "[BUDGET] " : "[FAIL] ") << section << ": " << claim;
    if (!detail.empty()) text << " (" << detail << ")";
    text << "\n";
  }
};

void append(std::string& diff, const std::string& item) {
  if (diff.size() < 400) diff += (diff.empty() ? "" : "; ") + item;
}

void verify_tables(Ledger& l, unsigned threads) {
  TableOptions to;
  to.threads = threads;

  std::string diff;
  auto t1 = table1(to);
  auto p1 = printed_table1();
  for (std::size_t i = 0; i < p1.size(); ++i) {
    const auto& r = t1[i];
    if (r.m != p1[i].index || !count_matches_printed(r.d_f, p1[i].d_f) || !count_matches_printed(r.d_e, p1[i].d_e) ||
        !ratio_matches_printed(r.ratio, p1[i].ratio))
      append(diff, "m=" + std::to_string(r.m) + ": got " + r.d_f.to_string() + ", " + r.d_e.to_string() + ", " +
                       r.ratio + " expected " + p1[i].d_f + ", " + p1[i].d_e + ", " + p1[i].ratio);
  }
  l.add("tables", "table 1 matches all 16 printed rows", diff.empty(), diff);

  diff.clear();
  auto t2 = table2(to);
  auto p2 = printed_table2();
  for (std::size_t i = 0; i < p2.size(); ++i) {
    const auto& r = t2[i];
    if (!count_matches_printed(r.d_f, p2[i].d_f) || !count_matches_printed(r.d_e, p2[i].d_e) ||
        !ratio_matches_printed(r.ratio, p2[i].ratio) || r.reference != (r.n == 7))
      append(diff, "n=" + std::to_string(r.n) + ": got " + r.d_f.to_string() + ", " + r.d_e.to_string() + ", " +
                       r.ratio + " expected " + p2[i].d_f + ", " + p2[i].d_e + ", " + p2[i].ratio);
  }
  l.add("tables", "table 2 matches the printed rows (n <= 6 brute force, n = 7 reference)", diff.empty(), diff);

  diff.clear();
  Table3 t3 = table3(to);
  auto p3 = printed_table3();
  for (std::size_t i = 0; i < t3.ms.size(); ++i)
    for (std::size_t k = 0; k < t3.ns.size(); ++k) {
      const auto& c = t3.cells[i][k];
      const std::string got = c ? c->to_string() : "?";
      if (got != p3[i][k])
        append(diff, "(" + std::to_string(t3.ms[i]) + "," + std::to_string(t3.ns[k]) + "): got " + got +
                         " expected " + p3[i][k]);
    }
  l.add("tables", "table 3 grid matches, \"?\" exactly where printed", diff.empty(), diff);

  auto ratios = table3_ratios(to);
  auto pr = printed_table3_ratios();
  for (std::size_t i = 0; i < pr.size(); ++i) {
    const auto& r = ratios[i];
    const std::string claim = "D_F(" + std::to_string(r.m) + ",3)/D_E(" + std::to_string(r.m) + ",3) = " + pr[i].ratio +
                              " with D_E = " + pr[i].d_e;
    const bool ok = r.d_e_closed == r.d_e_bruteforce && r.d_e_closed.to_string() == pr[i].d_e &&
                    ratio_matches_printed(r.ratio, pr[i].ratio);
    l.add("tables", claim, ok,
          ok ? "" : "got D_E " + r.d_e_closed.to_string() + " / " + r.d_e_bruteforce.to_string() + ", ratio " + r.ratio);
  }
}

void verify_invariants(Ledger& l) {
  {
    std::string diff;
    for (std::uint64_t a = 0; a <= 5; ++a)
      for (std::uint64_t b = 0; b <= 5; ++b) {
        BigCount brute = (a == 0 || b == 0) ? BigCount(1)
                                            : count_maximal_antichains_bruteforce(Shape{static_cast<int>(a), static_cast<int>(b)});
        if (d_f2(a, b) != brute) append(diff, "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    l.add("invariants", "two-chain recurrence equals brute force for m1, m2 <= 5", diff.empty(), diff);
  }
  {
    std::string diff;
    try {
      for (std::uint64_t m = 1; m <= 200; ++m)
        if (d_f_square_heinz(m) != d_f2(m, m)) append(diff, "m=" + std::to_string(m));
    } catch (const Error& e) {
      append(diff, e.what());
    }
    l.add("invariants", "four-term recurrence equals the two-chain recurrence for m <= 200, divisions exact",
          diff.empty(), diff);
  }
  {
    std::string diff;
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
      auto c = lower_bound_check(m, n);
      if (!c.holds) append(diff, "(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
    l.add("invariants", "D_F(m,n) >= D_E(m,n-1) on (2,2), (2,3), (3,3)", diff.empty(), diff);
  }
  {
    Shape shape{3, 3, 3};
    std::string diff;
    std::size_t count = 0;
    for (const auto& a : all_slice_antichains(shape, 0)) {
      Antichain e = extend_to_maximal(a, shape, 0);
      Antichain back;
      for (const auto& x : e)
        if (x[0] == 2) back.push_back(x);
      if (!is_maximal_antichain(e, shape) || sorted_unique(back) != a) append(diff, to_string(a, shape));
      ++count;
    }
    l.add("invariants", "top-slice extension gives maximal antichains and recovers the slice on [3]^3 (" +
                            std::to_string(count) + " antichains)",
          diff.empty(), diff);
  }
  {
    std::mt19937_64 rng(20240601);
    std::string diff;
    const std::vector<Shape> shapes{{3, 3}, {2, 2, 2}, {3, 2, 2}, {3, 3, 2}, {2, 2, 2, 2}};
    for (int k = 0; k < 200; ++k) {
      const Shape& s = shapes[static_cast<std::size_t>(k) % shapes.size()];
      OutrankingSpec spec = random_spec(s, ModelClass::F, rng);
      for (Rule r : {Rule::pc, Rule::pd, Rule::dual})
        if (!is_linear(induced_partition(spec, r))) append(diff, describe(spec) + " under " + std::string(to_string(r)));
    }
    l.add("invariants", "200 random specs induce linear partitions under pc, pd and dual", diff.empty(), diff);
  }
  {
    std::mt19937_64 rng(7);
    std::string diff;
    for (int k = 0; k < 100; ++k) {
      OutrankingSpec spec = random_spec(Shape{3, 2, 2}, ModelClass::F_c, rng);
      for (auto& t : spec.semiorders) t = ThresholdSemiorder::identity(t.levels());
      if (!validate_spec(spec).ok()) continue;
      TwofoldPartition lhs = induced_partition(reverse_levels(spec), Rule::dual).swapped();
      TwofoldPartition rhs = reverse_levels(induced_partition(spec, Rule::pc));
      if (lhs != rhs) append(diff, describe(spec));
    }
    l.add("invariants", "level reversal maps rule pc to the dual rule with A and U swapped", diff.empty(), diff);
  }
}

}  // namespace

CommandResult cmd_verify_paper(const VerifyOptions& o) {
  return guarded([&] {
    Ledger l;
    const auto t0 = std::chrono::steady_clock::now();
    SearchOptions so;
    so.budget = o.budget;
    so.threads = o.threads;
    for (const auto& [name, file] : o.overrides)
      if (!find_fixture(name)) throw PreconditionError("unknown fixture " + name);
    for (Fixture f : paper_fixtures()) {
      if (auto it = o.overrides.find(f.name); it != o.overrides.end())
        f.partition = parse_partition_json(read_text_file(it->second));
      FixtureReport rep = verify_fixture(f, so);
      for (const auto& c : rep.checks) l.add(f.name, c.claim, c.passed, c.detail, c.budget_exhausted);
    }
    verify_tables(l, o.threads);
    verify_invariants(l);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const int status = l.failed ? kExitClaimFailed : l.budget ? kExitBudget : kExitOk;
    std::size_t passed = 0;
    for (const auto& c : l.checks) passed += c["status"] == "pass";
    l.text << passed << "/" << l.checks.size() << " checks passed";
    if (l.budget) l.text << ", some searches ran out of budget";
    l.text << "\n";
    ordered_json j{{"checks", l.checks},
                   {"passed", passed},
                   {"total", l.checks.size()},
                   {"exit_status", status},
                   {"seconds", seconds}};
    return finish(status, l.text.str(), j);
  });
}

}  // namespace trinb
