#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trinb/cli.hpp"
#include "trinb/json_io.hpp"

using namespace trinb;

namespace {

int emit(const CommandResult& r, const std::string& out) {
  std::cout << r.text;
  if (!out.empty()) {
    try {
      write_text_file(out, r.json);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  if (r.exit_status == kExitUsage && r.text.rfind("error:", 0) == 0) std::cerr << r.text;
  return r.exit_status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trinb: idealized ELECTRE TRI-nB models and antichain counts"};
  app.require_subcommand(1);

  std::string out;
  unsigned threads = 1;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", out, "Write the JSON report here");
    sub->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  };

  std::string partition_file;
  auto* check = app.add_subcommand("check", "Linearity, traces, A*, U* of a partition file");
  check->add_option("partition", partition_file, "Partition JSON")->required();
  common(check);

  AssignOptions assign;
  std::string rule_text;
  auto* assign_cmd = app.add_subcommand("assign", "Assign alternatives with a spec file");
  assign_cmd->add_option("spec", assign.spec_file, "Spec JSON")->required();
  assign_cmd->add_option("alternatives", assign.alternatives, "Alternatives, e.g. 2100");
  assign_cmd->add_option("--rule", rule_text, "pc, pd or dual");
  assign_cmd->add_flag("--all", assign.all, "Emit the whole induced partition as partition JSON");
  common(assign_cmd);

  RepresentOptions represent;
  std::string model_text = "F";
  auto* represent_cmd = app.add_subcommand("represent", "Search a representation of a partition in a model class");
  represent_cmd->add_option("partition", represent.partition_file, "Partition JSON")->required();
  represent_cmd->add_option("--model", model_text, "E, E_c, E_u, E_u_bar, F, F_c, F_u or F_u_bar");
  represent_cmd->add_option("--budget", represent.budget.max_evaluations, "Maximum profile-set evaluations");
  represent_cmd->add_option("--seconds", represent.budget.max_seconds, "Wall-clock limit");
  common(represent_cmd);

  CountOptions count;
  std::vector<int> lower_bound;
  int count_table = 0;
  auto* count_cmd = app.add_subcommand("count", "Count antichains or maximal antichains");
  count_cmd->add_option("--dims", count.dims, "Chain lengths, e.g. 3,3,3")->delimiter(',');
  count_cmd->add_flag("--maximal", count.maximal, "Count maximal antichains");
  count_cmd->add_option("--table", count_table, "Print table 1, 2 or 3 as CSV");
  count_cmd->add_option("--lower-bound", lower_bound, "m n: check D_F(m,n) >= D_E(m,n-1)")->expected(2);
  count_cmd->add_option("--digits", count.digits, "Ratio precision");
  count_cmd->add_option("--budget", count.budget, "Maximum down-sets to enumerate");
  common(count_cmd);

  TableCommandOptions table;
  std::string format = "text";
  auto* table_cmd = app.add_subcommand("table", "Recompute table 1, 2 or 3");
  table_cmd->add_option("kind,--table", table.kind, "1, 2 or 3")->required();
  table_cmd->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  table_cmd->add_option("--digits", table.digits, "Ratio precision");
  common(table_cmd);

  VerifyOptions verify;
  std::vector<std::string> overrides;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Check the fixtures, the tables and the invariants");
  verify_cmd->add_option("--budget", verify.budget.max_evaluations, "Maximum profile-set evaluations per search");
  verify_cmd->add_option("--seconds", verify.budget.max_seconds, "Wall-clock limit per search");
  verify_cmd->add_option("--fixture", overrides, "NAME=FILE: replace a fixture partition");
  common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (check->parsed()) return emit(cmd_check(partition_file), out);

  if (assign_cmd->parsed()) {
    if (!rule_text.empty()) {
      assign.rule = parse_rule(rule_text);
      if (!assign.rule) {
        std::cerr << "error: unknown rule " << rule_text << "\n";
        return kExitUsage;
      }
    }
    return emit(cmd_assign(assign), out);
  }

  if (represent_cmd->parsed()) {
    auto m = parse_model_class(model_text);
    if (!m) {
      std::cerr << "error: unknown model class " << model_text << "\n";
      return kExitUsage;
    }
    represent.model = *m;
    represent.threads = threads;
    return emit(cmd_represent(represent), out);
  }

  if (count_cmd->parsed()) {
    if (count_table) count.table = count_table;
    if (lower_bound.size() == 2) count.lower_bound = std::pair{lower_bound[0], lower_bound[1]};
    count.threads = threads;
    return emit(cmd_count(count), out);
  }

  if (table_cmd->parsed()) {
    table.format = format == "csv" ? TableFormat::csv : TableFormat::text;
    table.threads = threads;
    return emit(cmd_table(table), out);
  }

  if (verify_cmd->parsed()) {
    for (const auto& o : overrides) {
      auto eq = o.find('=');
      if (eq == std::string::npos) {
        std::cerr << "error: --fixture takes NAME=FILE\n";
        return kExitUsage;
      }
      verify.overrides[o.substr(0, eq)] = o.substr(eq + 1);
    }
    verify.threads = threads;
    return emit(cmd_verify_paper(verify), out);
  }
  return kExitUsage;
}
