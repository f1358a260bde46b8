// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "trinb/counting.hpp"
#include "trinb/error.hpp"
#include "trinb/representation.hpp"
#include "trinb/sampling.hpp"
#include "trinb/tables.hpp"

using namespace trinb;

namespace {

struct Verdict {
  bool passed = true;
  std::string detail;

  void fail(const std::string& what) {
    passed = false;
    if (detail.size() < 600) detail += (detail.empty() ? "" : "; ") + what;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_seconds, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_seconds) v.fail("took " + std::to_string(s) + " s, limit " + std::to_string(limit_seconds) + " s");
  if (!v.passed) ++failures;
  std::printf("%s %-3s %s [%.2f s]%s%s\n", v.passed ? "PASS" : "FAIL", id, title, s, v.detail.empty() ? "" : ": ",
              v.detail.c_str());
  std::fflush(stdout);
}

Shape cube(int m, int n) { return Shape(std::vector<int>(static_cast<std::size_t>(n), m)); }

Verdict table1_rows() {
  Verdict v;
  auto rows = table1();
  auto printed = printed_table1();
  v.expect(rows.size() == 16 && printed.size() == 16, "expected 16 rows");
  for (std::size_t i = 0; i < rows.size() && i < printed.size(); ++i) {
    const auto& r = rows[i];
    const auto& p = printed[i];
    v.expect(r.m == p.index && count_matches_printed(r.d_f, p.d_f) && count_matches_printed(r.d_e, p.d_e) &&
                 ratio_matches_printed(r.ratio, p.ratio),
             "m=" + std::to_string(r.m) + " got " + r.d_f.to_string() + "/" + r.d_e.to_string() + " " + r.ratio);
  }
  v.expect(rows.back().d_f.to_scientific() == "3.76527E+51", "D_F(100,2) renders " + rows.back().d_f.to_scientific());
  v.expect(rows.back().d_e.to_scientific() == "9.05485E+58", "D_E(100,2) renders " + rows.back().d_e.to_scientific());
  return v;
}

Verdict table2_rows() {
  Verdict v;
  const std::vector<std::uint64_t> df{2, 3, 7, 29, 376, 31746}, de{3, 6, 20, 168, 7581, 7828354};
  auto rows = table2();
  v.expect(rows.size() == 7, "expected 7 rows");
  for (std::size_t i = 0; i < 6 && i < rows.size(); ++i) {
    v.expect(!rows[i].reference, "n=" + std::to_string(rows[i].n) + " not recomputed");
    v.expect(rows[i].d_f == BigCount(df[i]) && rows[i].d_e == BigCount(de[i]),
             "n=" + std::to_string(rows[i].n) + " got " + rows[i].d_f.to_string() + "/" + rows[i].d_e.to_string());
  }
  if (rows.size() == 7) {
    v.expect(rows[6].reference, "n=7 not labeled as reference");
    v.expect(rows[6].d_f == BigCount(123805914) && rows[6].d_e == BigCount::parse("2414682040998"), "n=7 constants");
  }
  auto printed = printed_table2();
  for (std::size_t i = 0; i < rows.size() && i < printed.size(); ++i)
    v.expect(ratio_matches_printed(rows[i].ratio, printed[i].ratio), "n=" + std::to_string(rows[i].n) + " ratio " + rows[i].ratio);
  return v;
}

Verdict table3_cells() {
  Verdict v;
  auto timed = [&](const Shape& s, std::uint64_t expected, double limit) {
    const auto t0 = std::chrono::steady_clock::now();
    BigCount got = count_maximal_antichains_bruteforce(s);
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    v.expect(got == BigCount(expected), "D_F = " + got.to_string() + ", expected " + std::to_string(expected));
    v.expect(sec <= limit, "took " + std::to_string(sec) + " s");
  };
  timed(cube(3, 3), 144, 60);
  timed(cube(4, 3), 10631, 60);
  timed(cube(3, 4), 116547, 900);
  auto lines = table3_ratios();
  const char* ratios[] = {"0.14693878", "0.04565639"};
  const std::uint64_t de[] = {980, 232848};
  for (std::size_t i = 0; i < 2 && i < lines.size(); ++i) {
    v.expect(lines[i].d_e_closed == BigCount(de[i]) && lines[i].d_e_bruteforce == BigCount(de[i]),
             "D_E(" + std::to_string(lines[i].m) + ",3) closed " + lines[i].d_e_closed.to_string() + ", brute force " +
                 lines[i].d_e_bruteforce.to_string());
    v.expect(lines[i].ratio == ratios[i], "ratio " + lines[i].ratio);
  }
  return v;
}

Verdict fixtures() {
  Verdict v;
  for (const auto& f : paper_fixtures()) {
    FixtureReport r = verify_fixture(f);
    for (const auto& c : r.checks)
      v.expect(c.passed, f.name + ": " + c.claim + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
  return v;
}

Verdict recurrences() {
  Verdict v;
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      v.expect(d_f2(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)) ==
                   count_maximal_antichains_bruteforce(Shape{a, b}),
               "d_f2(" + std::to_string(a) + "," + std::to_string(b) + ")");
  for (std::uint64_t m = 1; m <= 200; ++m) v.expect(d_f_square_heinz(m) == d_f2(m, m), "m=" + std::to_string(m));
  return v;
}

Verdict random_specs_linear() {
  Verdict v;
  const std::vector<Shape> shapes{{3, 3}, {2, 2, 2}, {3, 2, 2}, {3, 3, 2}, {2, 2, 2, 2}, {3, 3, 3},
                                  {4, 3, 3}, {2, 2, 3, 3}, {6, 6}, {2, 2, 2, 2, 2}};
  std::mt19937_64 rng(1);
  int valid = 0, drawn = 0;
  while (valid < 1000 && drawn < 100000) {
    const Shape& s = shapes[static_cast<std::size_t>(drawn++) % shapes.size()];
    OutrankingSpec spec = random_spec(s, ModelClass::F, rng);
    if (!validate_spec(spec).ok()) continue;
    ++valid;
    for (Rule r : {Rule::pc, Rule::pd, Rule::dual})
      v.expect(is_linear(induced_partition(spec, r)), describe(spec) + " under " + std::string(to_string(r)));
  }
  v.expect(valid == 1000, "only " + std::to_string(valid) + " valid specs");
  if (v.passed) v.detail = "1000 valid specs, 3 rules each";
  return v;
}

Verdict canonical_eu_round_trip() {
  Verdict v;
  auto all = all_monotone_partitions(cube(2, 3));
  v.expect(all.size() == 20, "expected 20 monotone partitions of [2]^3");
  for (const auto& p : all) v.expect(induced_partition(canonical_eu(p), Rule::pc) == p, "A* = " + to_string(a_star(p), p.shape()));
  std::mt19937_64 rng(2);
  for (int k = 0; k < 200; ++k) {
    auto p = random_monotone_partition(cube(3, 3), rng);
    v.expect(is_linear(p), "sampled partition is not linear");
    v.expect(induced_partition(canonical_eu(p), Rule::pc) == p, "A* = " + to_string(a_star(p), p.shape()));
  }
  return v;
}

Verdict maximal_antichain_test_agrees() {
  Verdict v;
  auto agree = [&](const TwofoldPartition& p) {
    SearchOptions o;
    o.model = ModelClass::F_u_bar;
    SearchResult r = search_representation(p, o);
    const bool verdict = fu_underline_representable(p).representable;
    v.expect(r.outcome != SearchOutcome::budget_exhausted, "search ran out of budget");
    v.expect(verdict == (r.outcome == SearchOutcome::found), "A* = " + to_string(a_star(p), p.shape()));
  };
  for (const auto& p : all_monotone_partitions(cube(2, 3))) agree(p);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) agree(random_monotone_partition(cube(3, 3), rng));
  return v;
}

Verdict extension_construction() {
  Verdict v;
  std::size_t total = 0;
  for (const Shape& s : {cube(2, 3), cube(3, 3)})
    for (int axis = 0; axis < s.attributes(); ++axis)
      for (const auto& a : all_slice_antichains(s, axis)) {
        Antichain e = extend_to_maximal(a, s, axis);
        Antichain slice;
        for (const auto& x : e)
          if (x[axis] == s.levels(axis) - 1) slice.push_back(x);
        v.expect(is_maximal_antichain(e, s) && sorted_unique(slice) == a, to_string(a, s));
        ++total;
      }
  if (v.passed) v.detail = std::to_string(total) + " slice antichains";
  return v;
}

Verdict binary_construction() {
  Verdict v;
  std::size_t ok = 0, total = 0;
  for (int n = 1; n <= 4; ++n) {
    std::size_t ok_n = 0, total_n = 0;
    for (const auto& p : all_monotone_partitions(cube(2, n))) {
      ++total_n;
      if (induced_partition(binary_fc(p), Rule::pd) == p)
        ++ok_n;
      else
        v.fail("[2]^" + std::to_string(n) + " A* = " + to_string(a_star(p), p.shape()));
    }
    ok += ok_n;
    total += total_n;
    if (n == 4) v.expect(total_n == 168, "expected 168 partitions of [2]^4");
  }
  v.detail = std::to_string(ok) + "/" + std::to_string(total) + " round-trip" + (v.passed ? "" : "; " + v.detail) +
             (v.passed ? "" : "; under pd every profile lies in A, so A = {} has no pd representation");
  return v;
}

Verdict transposition() {
  Verdict v;
  std::size_t checked = 0;
  const std::vector<Shape> shapes{{2}, {5}, {2, 2}, {3, 3}, {4, 2}, {8, 8}, {2, 2, 2}, {3, 2, 2}, {3, 3, 2},
                                  {3, 3, 3}, {4, 4, 2}, {2, 2, 2, 2}, {3, 2, 2, 2}, {4, 4, 4}};
  for (const Shape& s : shapes) {
    if (s.size() > 64) continue;
    const int n = s.attributes();
    std::vector<CoalitionFamily> families =
        n == 1 ? std::vector<CoalitionFamily>{CoalitionFamily::unanimity(1)} : all_coalition_families(n);
    enumerate_downsets(s, [&](const Antichain& profiles) {
      if (profiles.empty()) return;
      for (const auto& f : families) {
        OutrankingSpec spec = OutrankingSpec::plain(s);
        spec.coalitions = f;
        spec.profiles = profiles;
        if (!validate_spec(spec).ok()) continue;
        TwofoldPartition lhs = induced_partition(reverse_levels(spec), Rule::dual).swapped();
        TwofoldPartition rhs = reverse_levels(induced_partition(spec, Rule::pc));
        ++checked;
        v.expect(lhs == rhs, describe(spec));
      }
    });
  }
  if (v.passed) v.detail = std::to_string(checked) + " specs";
  return v;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion("1", "table 1: all 16 rows and ratios", 1, table1_rows);
  criterion("2", "table 2: brute force n <= 6, reference n = 7", 120, table2_rows);
  criterion("3", "table 3: [3]^3, [4]^3, [3]^4 and the two ratios", 960, table3_cells);
  criterion("4", "fixtures: non-representability proofs and witness round-trips", 600, fixtures);
  criterion("5", "recurrences: two-chain vs brute force, four-term vs two-chain", 10, recurrences);
  const auto t6 = std::chrono::steady_clock::now();
  criterion("6a", "random Model F specs induce linear partitions", 300, random_specs_linear);
  criterion("6b", "canonical E^u round-trips [2]^3 and random [3]^3", 300, canonical_eu_round_trip);
  criterion("6c", "maximal-antichain test agrees with F_u_bar search", 300, maximal_antichain_test_agrees);
  criterion("6d", "top-slice extension gives maximal antichains", 300, extension_construction);
  criterion("6e", "binary F^c construction round-trips [2]^n, n <= 4", 300, binary_construction);
  criterion("6f", "level reversal swaps pc and dual, |X| <= 64", 300, transposition);
  const auto t1 = std::chrono::steady_clock::now();
  const double six = std::chrono::duration<double>(t1 - t6).count();
  if (six > 300) {
    ++failures;
    std::printf("FAIL 6   property suites took %.1f s, limit 300 s\n", six);
  }
  std::printf("%d criteria failed, %.1f s total\n", failures, std::chrono::duration<double>(t1 - t0).count());
  return failures ? 1 : 0;
}
