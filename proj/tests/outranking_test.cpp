#include <doctest.h>

#include <algorithm>
#include <random>

#include "trinb/error.hpp"
#include "trinb/outranking.hpp"
#include "trinb/representation.hpp"
#include "trinb/sampling.hpp"

using namespace trinb;

namespace {

std::vector<Alternative> alts(std::initializer_list<const char*> xs, const Shape& s) {
  std::vector<Alternative> out;
  for (const char* x : xs) out.push_back(parse_alternative(x, s));
  return out;
}

TwofoldPartition direct_partition(const OutrankingSpec& spec, Rule rule) {
  return TwofoldPartition::from_predicate(spec.shape,
                                          [&](const Alternative& x) { return assign(x, spec, rule) == Category::A; });
}

}  // namespace

TEST_SUITE("outranking") {

TEST_CASE("threshold maps are exactly the semiorders compatible with the chain") {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int m = 1; m <= 6; ++m) {
    auto all = all_semiorders(m);
    CHECK(static_cast<int>(all.size()) == catalan[m]);
    CHECK(all.front().strict_pairs() == 0);
    for (const auto& s : all) {
      for (int a = 0; a < m; ++a) {
        CHECK_FALSE(s.prefers(a, a));
        for (int b = 0; b < m; ++b) {
          CHECK(s.at_least(a, b) == !s.prefers(b, a));
          if (s.prefers(a, b)) CHECK(a > b);
          for (int c = 0; c < m; ++c)
            for (int d = 0; d < m; ++d) {
              if (s.prefers(a, b) && s.prefers(c, d)) CHECK((s.prefers(a, d) || s.prefers(c, b)));
              if (s.prefers(a, b) && s.prefers(b, c)) CHECK((s.prefers(a, d) || s.prefers(d, c)));
            }
        }
      }
    }
  }
  CHECK(ThresholdSemiorder::identity(4).is_identity());
  CHECK(ThresholdSemiorder::identity(4).induces_chain());
  CHECK(ThresholdSemiorder{{-1, -1, 0}}.induces_chain());
  CHECK_FALSE(ThresholdSemiorder{{-1, -1, -1}}.induces_chain());
}

TEST_CASE("vetoes stay inside strict preference") {
  for (int m = 1; m <= 5; ++m)
    for (const auto& s : all_semiorders(m)) {
      auto vs = all_vetoes(s);
      CHECK(vs.front().empty());
      for (const auto& v : vs)
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b)
            if (v.vetoes(a, b)) CHECK(s.prefers(a, b));
    }
}

TEST_CASE("coalition families") {
  CoalitionFamily f(3, {0b101, 0b110, 0b111, 0b100 | 0b001});
  CHECK(f.minimal() == std::vector<std::uint32_t>{0b101, 0b110});
  CHECK(f.contains(0b111));
  CHECK_FALSE(f.contains(0b011));
  CHECK(f.nondegenerate());
  CHECK(to_string(f) == "{{1,3}, {2,3}}");
  CHECK(CoalitionFamily::unanimity(3).is_unanimity());
  CHECK_FALSE(CoalitionFamily(2, {0}).nondegenerate());
  // Dedekind numbers minus the two degenerate families.
  const std::size_t counts[] = {0, 1, 4, 18, 166};
  for (int n = 1; n <= 4; ++n) {
    auto all = all_coalition_families(n);
    CHECK(all.size() == counts[n]);
    CHECK(all.front().minimal().size() == 1);
    CHECK(std::count_if(all.begin(), all.end(), [](const CoalitionFamily& g) { return g.is_unanimity(); }) == 1);
    for (const auto& g : all) {
      CHECK(g.nondegenerate());
      for (std::uint32_t a = 0; a <= g.full(); ++a)
        for (std::uint32_t b = 0; b <= g.full(); ++b)
          if ((a & b) == a && g.contains(a)) CHECK(g.contains(b));
    }
  }
}

TEST_CASE("validation") {
  Shape s{2, 2, 2};
  OutrankingSpec spec = OutrankingSpec::plain(s);
  spec.profiles = alts({"111", "110"}, s);
  auto r = validate_spec(spec);
  CHECK_FALSE(r.ok());
  CHECK(r.to_string().find("111 P 110") != std::string::npos);

  spec.profiles = {};
  CHECK_FALSE(validate_spec(spec).ok());

  spec.profiles = alts({"111"}, s);
  CHECK(validate_spec(spec).ok());
  spec.semiorders[0].threshold = {-1, 1};
  CHECK_FALSE(validate_spec(spec).ok());
  spec.semiorders[0].threshold = {-1, -1};
  spec.vetoes[0].threshold = {-1, 0};
  CHECK_FALSE(validate_spec(spec).ok());
  spec.vetoes[0].threshold = {-1, -1};
  spec.coalitions = CoalitionFamily(3, {0});
  CHECK_FALSE(validate_spec(spec).ok());
  spec.coalitions = CoalitionFamily(2, {0b11});
  CHECK_FALSE(validate_spec(spec).ok());
  CHECK_THROWS_AS(require_valid(spec), PreconditionError);

  auto w = find_fixture("prop6")->witness;
  REQUIRE(w);
  CHECK(validate_spec(*w).ok());
  CHECK(validate_spec(canonical_eu(find_fixture("prop3-part2")->partition)).ok());
}

TEST_CASE("outranking examples") {
  auto w = *find_fixture("prop6")->witness;
  const Shape& s = w.shape;
  CHECK(strictly_outranks(parse_alternative("2200", s), parse_alternative("2100", s), w));
  Shape b{2, 2, 2};
  OutrankingSpec plain = OutrankingSpec::plain(b);
  plain.profiles = alts({"111"}, b);
  for (std::size_t r = 0; r < b.size(); ++r) {
    CHECK(outranks(b.unrank(r), b.unrank(r), plain));
    CHECK_FALSE(strictly_outranks(b.unrank(r), b.unrank(r), plain));
  }
  auto fc = *find_fixture("prop3-part1")->witness;
  CHECK(outranks(parse_alternative("101", b), parse_alternative("111", b), fc));
  CHECK_THROWS_AS(outranks(Alternative{1, 1}, Alternative{1, 1, 1}, fc), DimensionMismatch);
}

TEST_CASE("assignment examples") {
  Shape b{2, 2, 2};
  auto p1 = find_fixture("prop3-part1")->partition;
  OutrankingSpec eu = canonical_eu(p1);
  CHECK(eu.profiles == alts({"011", "101"}, b));
  CHECK(assign_pc(parse_alternative("111", b), eu) == Category::A);
  CHECK(assign_pc(parse_alternative("110", b), eu) == Category::U);

  OutrankingSpec top = OutrankingSpec::plain(b);
  top.profiles = alts({"111"}, b);
  CHECK(assign_pd(parse_alternative("101", b), top) == Category::U);

  auto w = *find_fixture("prop6")->witness;
  CHECK(assign_pd(parse_alternative("2100", w.shape), w) == Category::U);
  CHECK(assign_pd(parse_alternative("2200", w.shape), w) == Category::A);

  OutrankingSpec dual = canonical_dual(p1);
  CHECK(dual.profiles == alts({"001", "110"}, b));
  CHECK(assign_dual(parse_alternative("111", b), dual) == Category::A);
  for (const auto& x : p1.unsatisfactory_set()) CHECK(assign_dual(x, dual) == Category::U);

  OutrankingSpec bottom = OutrankingSpec::plain(b);
  bottom.profiles = {b.bottom()};
  CHECK(induced_partition(bottom, Rule::pc).satisfactory_count() == b.size());
}

TEST_CASE("witness specs reproduce their partitions") {
  for (const auto& f : paper_fixtures()) {
    if (!f.witness) continue;
    CAPTURE(f.name);
    CHECK(induced_partition(*f.witness, f.witness_rule) == f.partition);
    CHECK(direct_partition(*f.witness, f.witness_rule) == f.partition);
  }
}

TEST_CASE("bitset rule evaluation matches the direct rules") {
  std::mt19937_64 rng(99);
  const std::vector<Shape> shapes{{2, 2, 2}, {3, 3}, {3, 2, 2}, {4, 3}, {3, 3, 3}, {2, 2, 2, 2, 2}, {20, 2}};
  for (int k = 0; k < 300; ++k) {
    const Shape& s = shapes[static_cast<std::size_t>(k) % shapes.size()];
    OutrankingSpec spec = random_spec(s, ModelClass::F, rng);
    REQUIRE(validate_spec(spec).ok());
    for (Rule r : {Rule::pc, Rule::pd, Rule::dual}) CHECK(induced_partition(spec, r) == direct_partition(spec, r));
  }
}

TEST_CASE("random specs induce linear partitions under every rule") {
  std::mt19937_64 rng(1);
  const std::vector<Shape> shapes{{2, 2}, {3, 3}, {2, 2, 2}, {3, 2, 2}, {3, 3, 2}, {4, 3, 3}, {2, 2, 2, 2}};
  for (ModelClass c : {ModelClass::F, ModelClass::F_c, ModelClass::F_u, ModelClass::F_u_bar})
    for (int k = 0; k < 100; ++k) {
      const Shape& s = shapes[static_cast<std::size_t>(k) % shapes.size()];
      OutrankingSpec spec = random_spec(s, c, rng);
      CHECK(satisfies_class(spec, c));
      for (Rule r : {Rule::pc, Rule::pd, Rule::dual}) CHECK(is_linear(induced_partition(spec, r)));
      for (const auto& p : spec.profiles) CHECK(assign_pd(p, spec) == Category::A);
    }
}

TEST_CASE("identity semiorders give monotone rules") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) {
    OutrankingSpec spec = random_spec(Shape{3, 3, 2}, ModelClass::F_c, rng);
    for (auto& t : spec.semiorders) t = ThresholdSemiorder::identity(t.levels());
    if (!validate_spec(spec).ok()) continue;
    for (Rule r : {Rule::pc, Rule::pd, Rule::dual}) CHECK(is_monotone(induced_partition(spec, r)));
  }
}

TEST_CASE("plain pd reduces to strict dominance by a profile") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    OutrankingSpec spec = random_spec(Shape{3, 3, 3}, ModelClass::F_u_bar, rng);
    const Shape& s = spec.shape;
    for (std::size_t r = 0; r < s.size(); ++r) {
      const Alternative x = s.unrank(r);
      const bool below = std::any_of(spec.profiles.begin(), spec.profiles.end(),
                                     [&](const Alternative& p) { return strictly_dominates(p, x, s); });
      CHECK((assign_pd(x, spec) == Category::U) == below);
    }
  }
}

TEST_CASE("level reversal exchanges pc and dual") {
  std::mt19937_64 rng(12);
  const std::vector<Shape> shapes{{2, 2}, {3, 3}, {2, 2, 2}, {4, 4}, {2, 2, 2, 2}, {4, 4, 4}, {2, 2, 2, 2, 2, 2}, {8, 8}};
  std::size_t compared = 0;
  for (const Shape& s : shapes) {
    REQUIRE(s.size() <= 64);
    const int n = s.attributes();
    std::vector<CoalitionFamily> families =
        n <= 4 ? all_coalition_families(n) : std::vector<CoalitionFamily>{CoalitionFamily::unanimity(n)};
    for (const auto& f : families)
      for (std::size_t r = 0; r < s.size(); ++r) {
        OutrankingSpec spec = OutrankingSpec::plain(s);
        spec.coalitions = f;
        spec.profiles = {s.unrank(r)};
        CHECK(induced_partition(reverse_levels(spec), Rule::dual).swapped() ==
              reverse_levels(induced_partition(spec, Rule::pc)));
        ++compared;
      }
  }
  CHECK(compared > 1000);
}

}
