#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "trinb/cli.hpp"
#include "trinb/json_io.hpp"

using namespace trinb;
namespace fs = std::filesystem;

namespace {

const fs::path kData = TRINB_DATA_DIR;

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("trinb-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string data(const char* name) { return (kData / name).string(); }

int run(const std::string& args, std::string* out = nullptr) {
  const fs::path capture = scratch() / "stdout.txt";
  const std::string cmd = std::string(TRINB_CLI) + " " + args + " > " + capture.string() + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  if (out) *out = read_text_file(capture);
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check reports linearity and A*") {
  CommandResult r = cmd_check(data("prop6.json"));
  CHECK(r.exit_status == kExitOk);
  CHECK(r.text.find("linear: yes") != std::string::npos);
  CHECK(r.text.find("A* is a maximal antichain: no") != std::string::npos);
  CHECK(r.json.find("\"a_star\"") != std::string::npos);

  CommandResult toy = cmd_check(data("nonlinear-toy.json"));
  CHECK(toy.exit_status == kExitOk);
  CHECK(toy.text.find("linear: no") != std::string::npos);
  CHECK(toy.json.find("\"violation\"") != std::string::npos);

  CHECK(cmd_check((scratch() / "missing.json").string()).exit_status == kExitUsage);
}

TEST_CASE("assign single alternatives and whole partitions") {
  AssignOptions o;
  o.spec_file = data("prop6-witness.json");
  o.alternatives = {"2100", "2222", "0000"};
  CommandResult r = cmd_assign(o);
  REQUIRE(r.exit_status == kExitOk);
  CHECK(r.text == "2100 U\n2222 A\n0000 U\n");

  o.all = true;
  o.alternatives.clear();
  CommandResult all = cmd_assign(o);
  CHECK(all.exit_status == kExitOk);
  CHECK(all.json == read_text_file(data("prop6.json")));

  o.spec_file = data("prop3-part1-witness.json");
  CHECK(cmd_assign(o).json == read_text_file(data("prop3-part1.json")));
}

TEST_CASE("invalid and malformed specs exit 2") {
  const fs::path bad = scratch() / "bad-spec.json";
  write_text_file(bad, R"({"dims":[2,2],"profiles":["11","00"]})");
  AssignOptions o;
  o.spec_file = bad.string();
  o.all = true;
  CommandResult r = cmd_assign(o);
  CHECK(r.exit_status == kExitUsage);
  CHECK(r.text.rfind("invalid spec", 0) == 0);

  write_text_file(bad, "{\"dims\": [2,2], ");
  CHECK(cmd_assign(o).exit_status == kExitUsage);
  CHECK(run("assign " + bad.string() + " --all") == kExitUsage);
}

TEST_CASE("represent answers found, none and budget") {
  RepresentOptions o;
  o.partition_file = data("prop3-part1.json");
  o.model = ModelClass::F_c;
  CommandResult found = cmd_represent(o);
  REQUIRE(found.exit_status == kExitOk);
  CHECK(found.json.find("\"rule\": \"pd\"") != std::string::npos);

  o.model = ModelClass::F_u;
  CommandResult none = cmd_represent(o);
  CHECK(none.exit_status == kExitOk);
  CHECK(none.text.rfind("not representable in F_u", 0) == 0);

  o.partition_file = data("prop3-part2.json");
  o.model = ModelClass::F_c;
  o.budget.max_evaluations = 10;
  CHECK(cmd_represent(o).exit_status == kExitBudget);

  o.partition_file = data("nonlinear-toy.json");
  CHECK(cmd_represent(o).exit_status == kExitUsage);
}

TEST_CASE("represent then assign reproduces the input file") {
  for (auto [file, model] : {std::pair{"prop3-part1.json", "F_c"}, {"prop3-part2.json", "F"}, {"prop6.json", "E"}}) {
    CAPTURE(file);
    const fs::path spec = scratch() / "witness.json";
    REQUIRE(run("represent " + data(file) + " --model " + model + " --out " + spec.string()) == kExitOk);
    std::string induced;
    REQUIRE(run("assign " + spec.string() + " --all", &induced) == kExitOk);
    CHECK(induced == read_text_file(data(file)));
  }
}

TEST_CASE("count modes") {
  CountOptions o;
  o.dims = {3, 3, 3};
  o.maximal = true;
  CommandResult r = cmd_count(o);
  CHECK(r.exit_status == kExitOk);
  CHECK(r.text.rfind("144 ", 0) == 0);

  o.maximal = false;
  CHECK(cmd_count(o).text.rfind("980 ", 0) == 0);

  o.dims = {2, 2, 2, 2};
  o.budget = 10;
  CHECK(cmd_count(o).exit_status == kExitBudget);

  CountOptions lb;
  lb.lower_bound = std::pair{2, 3};
  CommandResult l = cmd_count(lb);
  CHECK(l.exit_status == kExitOk);
  CHECK(l.text == "D_F(2,3) = 7 >= D_E(2,2) = 6\n");

  CountOptions both;
  both.dims = {2};
  both.table = 1;
  CHECK(cmd_count(both).exit_status == kExitUsage);
  CHECK(cmd_count(CountOptions{}).exit_status == kExitUsage);

  CountOptions t;
  t.table = 1;
  CommandResult csv = cmd_count(t);
  CHECK(csv.text.rfind("m,\"D_F(m,2)\"", 0) == 0);
}

TEST_CASE("table command") {
  TableCommandOptions o;
  o.kind = 2;
  o.format = TableFormat::text;
  CommandResult r = cmd_table(o);
  CHECK(r.exit_status == kExitOk);
  CHECK(r.text.find("reference, not recomputed") != std::string::npos);
  o.kind = 4;
  CHECK(cmd_table(o).exit_status == kExitUsage);

  std::string out;
  CHECK(run("table 1 --format csv --digits 4", &out) == kExitOk);
  CHECK(out.find("\n4,27,") != std::string::npos);
  CHECK(out.find(",0.3857\n") != std::string::npos);
}

TEST_CASE("process exit codes") {
  CHECK(run("") == kExitUsage);
  CHECK(run("frobnicate") == kExitUsage);
  CHECK(run("count --dims 2,2 --maximal") == kExitOk);
  CHECK(run("count --lower-bound 2") == kExitUsage);
  CHECK(run("assign " + data("prop6-witness.json") + " 2100 --rule nope") == kExitUsage);
  CHECK(run("represent " + data("prop3-part1.json") + " --model G") == kExitUsage);
  CHECK(run("represent " + data("prop3-part2.json") + " --model F_c --budget 10") == kExitBudget);
  CHECK(run("check " + data("prop6.json") + " --out " + (scratch() / "no-such-dir" / "x.json").string()) ==
        kExitUsage);
}

TEST_CASE("verify-paper flags false claims and corrupted fixtures") {
  std::string out;
  // The second fixture's "not in F" claim does not survive the search.
  CHECK(run("verify-paper", &out) == kExitClaimFailed);
  CHECK(out.find("[FAIL] prop3-part2: not representable in F") != std::string::npos);
  CHECK(out.find("[FAIL] prop6") == std::string::npos);
  CHECK(out.find("[FAIL] prop3-part1") == std::string::npos);
  CHECK(out.find("[FAIL] tables") == std::string::npos);
  CHECK(out.find("[FAIL] invariants") == std::string::npos);

  const fs::path corrupted = scratch() / "corrupted.json";
  write_text_file(corrupted, R"({"dims":[3,3,3,3],"A":["2222"]})");
  CHECK(run("verify-paper --fixture prop6=" + corrupted.string(), &out) == kExitClaimFailed);
  CHECK(out.find("[FAIL] prop6") != std::string::npos);

  CHECK(run("verify-paper --fixture nosuch=" + corrupted.string()) == kExitUsage);
  write_text_file(corrupted, "not json");
  CHECK(run("verify-paper --fixture prop6=" + corrupted.string()) == kExitUsage);
}

}
