#include <algorithm>

#include "trinb/error.hpp"
#include "trinb/representation.hpp"

namespace trinb {

namespace {

std::vector<Alternative> parse_all(const std::vector<std::string>& items, const Shape& shape) {
  std::vector<Alternative> out;
  for (const auto& s : items) out.push_back(parse_alternative(s, shape));
  return out;
}

Fixture prop3_part1() {
  Shape shape{2, 2, 2};
  Fixture f;
  f.name = "prop3-part1";
  f.partition = TwofoldPartition::from_satisfactory(shape, parse_all({"111", "101", "011"}, shape));
  OutrankingSpec w = OutrankingSpec::plain(shape);
  w.coalitions = CoalitionFamily(3, {0b101, 0b110});
  w.profiles = parse_all({"111"}, shape);
  f.witness = std::move(w);
  f.witness_rule = Rule::pd;
  f.expected_a_star = sorted_unique(parse_all({"101", "011"}, shape));
  f.expected_u_star = sorted_unique(parse_all({"110", "001"}, shape));
  return f;
}

Fixture prop3_part2() {
  Shape shape{3, 3, 3, 2};
  Fixture f;
  f.name = "prop3-part2";
  f.partition = TwofoldPartition::from_satisfactory(
      shape, parse_all({"2221", "2211", "2121", "1221", "2111", "1211", "1121", "1111", "2220"}, shape));
  f.expected_a_star = sorted_unique(parse_all({"1111", "2220"}, shape));
  return f;
}

Fixture prop6() {
  Shape shape{3, 3, 3, 3};
  Fixture f;
  f.name = "prop6";
  f.partition = TwofoldPartition::from_satisfactory(
      shape, parse_all({"2222", "2221", "2220", "2212", "2211", "2210", "2202", "2201", "2200", "2122", "2121", "2120",
                        "2112", "2111", "2110", "2102", "2101", "2022", "2021", "2020", "2012", "2011", "2010", "2002",
                        "2001", "1222", "1221", "1220", "1212", "1211", "1210", "1202", "1201", "1200", "1122", "1121",
                        "1120", "1112", "1111", "1110", "1102", "1101", "1022", "0222", "0221", "0220", "0212", "0211",
                        "0210", "0202", "0201", "0122", "0121", "0120", "0112", "0111", "0110", "0102", "0101", "0022"},
                       shape));
  OutrankingSpec w = OutrankingSpec::plain(shape);
  w.semiorders[0] = ThresholdSemiorder{{-1, -1, 0}};
  w.profiles = parse_all({"2200", "0022"}, shape);
  f.witness = std::move(w);
  f.witness_rule = Rule::pd;
  f.expected_a_star = sorted_unique(parse_all({"2010", "2001", "1200", "0110", "0101", "0022"}, shape));
  return f;
}

CheckResult check(std::string claim, bool passed, std::string detail = {}) {
  return CheckResult{std::move(claim), passed, false, std::move(detail)};
}

CheckResult linear_check(const TwofoldPartition& p) {
  auto v = find_linearity_violation(p);
  return check("partition is linear", !v, v ? describe(*v, p.shape()) : "");
}

CheckResult antichain_check(const std::string& what, const Antichain& got, const Antichain& want, const Shape& shape) {
  const bool ok = sorted_unique(got) == want;
  return check(what + " = " + to_string(want, shape), ok, ok ? "" : "got " + to_string(sorted_unique(got), shape));
}

CheckResult round_trip_check(const std::string& what, const OutrankingSpec& spec, Rule rule,
                             const TwofoldPartition& p) {
  auto report = validate_spec(spec);
  if (!report.ok()) return check(what, false, "spec invalid: " + report.to_string());
  TwofoldPartition q = induced_partition(spec, rule);
  if (q == p) return check(what, true);
  std::string diff;
  for (std::size_t r = 0; r < p.shape().size() && diff.size() < 200; ++r)
    if (q.at_rank(r) != p.at_rank(r))
      diff += (diff.empty() ? "" : ", ") + to_string(p.shape().unrank(r), p.shape()) + " expected " +
              to_char(p.at_rank(r)) + " got " + to_char(q.at_rank(r));
  return check(what, false, diff);
}

CheckResult not_representable_check(const TwofoldPartition& p, ModelClass model, SearchOptions options) {
  options.model = model;
  const std::string claim = "not representable in " + std::string(to_string(model)) + " (exhaustive search)";
  SearchResult r = search_representation(p, options);
  std::string stats = std::to_string(r.configurations) + " configurations x " + std::to_string(r.coalition_families) +
                      " coalition families, " + std::to_string(r.evaluations) + " profile sets evaluated";
  switch (r.outcome) {
    case SearchOutcome::none: return check(claim, true, stats);
    case SearchOutcome::found: {
      return check(claim, false, "found a representation: " + describe(*r.witness));
    }
    case SearchOutcome::budget_exhausted: {
      CheckResult c = check(claim, false, "budget exhausted after " + stats);
      c.budget_exhausted = true;
      return c;
    }
  }
  return check(claim, false);
}

}  // namespace

std::vector<Fixture> paper_fixtures() { return {prop3_part1(), prop3_part2(), prop6()}; }

std::optional<Fixture> find_fixture(std::string_view name) {
  for (auto& f : paper_fixtures())
    if (f.name == name) return f;
  return std::nullopt;
}

bool FixtureReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool FixtureReport::budget_exhausted() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.budget_exhausted; });
}

FixtureReport verify_fixture(const Fixture& f, const SearchOptions& search) {
  FixtureReport rep;
  rep.name = f.name;
  const TwofoldPartition& p = f.partition;
  CheckResult lin = linear_check(p);
  rep.checks.push_back(lin);
  const bool analyzable = lin.passed && is_monotone(p);
  if (!analyzable && lin.passed) rep.checks.push_back(check("partition is an up-set", false));

  if (f.name == "prop3-part1") {
    if (analyzable) {
      rep.checks.push_back(antichain_check("A*", a_star(p), *f.expected_a_star, p.shape()));
      rep.checks.push_back(antichain_check("U*", u_star(p), *f.expected_u_star, p.shape()));
      rep.checks.push_back(not_representable_check(p, ModelClass::F_u, search));
    }
    const bool in_class = f.witness && satisfies_class(*f.witness, ModelClass::F_c);
    if (!in_class)
      rep.checks.push_back(check("F_c witness round-trips", false, "witness missing or outside F_c"));
    else
      rep.checks.push_back(round_trip_check("F_c witness round-trips under pd", *f.witness, f.witness_rule, p));
  } else if (f.name == "prop3-part2") {
    if (analyzable) {
      rep.checks.push_back(antichain_check("A*", a_star(p), *f.expected_a_star, p.shape()));
      rep.checks.push_back(round_trip_check("canonical E^u representation round-trips under pc", canonical_eu(p),
                                            Rule::pc, p));
      rep.checks.push_back(not_representable_check(p, ModelClass::F, search));
    }
  } else if (f.name == "prop6") {
    if (analyzable) {
      rep.checks.push_back(antichain_check("A*", a_star(p), *f.expected_a_star, p.shape()));
      auto verdict = fu_underline_representable(p);
      std::string detail;
      if (!verdict.representable) {
        Antichain a = a_star(p);
        Bits covered = down_closure(a, p.shape());
        covered |= up_closure(a, p.shape());
        for (std::size_t r = 0; r < p.shape().size(); ++r)
          if (!covered.test(r)) {
            detail = to_string(p.shape().unrank(r), p.shape()) + " is incomparable to every element of A*";
            break;
          }
      }
      rep.checks.push_back(check("not representable in F_u_bar (A* is not a maximal antichain)",
                                 !verdict.representable, detail));
    }
    const bool in_class = f.witness && satisfies_class(*f.witness, ModelClass::F_u);
    if (!in_class)
      rep.checks.push_back(check("F_u witness round-trips", false, "witness missing or outside F_u"));
    else
      rep.checks.push_back(round_trip_check("F_u witness round-trips under pd", *f.witness, f.witness_rule, p));
  } else {
    throw PreconditionError("unknown fixture " + f.name);
  }
  return rep;
}

}  // namespace trinb
