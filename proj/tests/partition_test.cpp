#include <doctest.h>

#include <random>

#include "trinb/error.hpp"
#include "trinb/partition.hpp"
#include "trinb/representation.hpp"
#include "trinb/sampling.hpp"

using namespace trinb;

namespace {

TwofoldPartition from_mask(const Shape& s, std::uint64_t mask) {
  Bits b(s.size());
  for (std::size_t r = 0; r < s.size(); ++r)
    if (mask >> r & 1u) b.set(r);
  return TwofoldPartition::from_bits(s, b);
}

TwofoldPartition random_partition(const Shape& s, std::mt19937_64& rng) {
  Bits b(s.size());
  for (std::size_t r = 0; r < s.size(); ++r)
    if (rng() & 1u) b.set(r);
  return TwofoldPartition::from_bits(s, b);
}

// Eq. (lin) by brute force over all quadruples.
bool linear_on_oracle(const TwofoldPartition& p, int i, Category side) {
  const Shape& s = p.shape();
  const Category other = side == Category::A ? Category::U : Category::A;
  for (std::size_t ra = 0; ra < s.size(); ++ra)
    for (std::size_t rb = 0; rb < s.size(); ++rb) {
      const Alternative a = s.unrank(ra), b = s.unrank(rb);
      for (int x = 0; x < s.levels(i); ++x)
        for (int y = 0; y < s.levels(i); ++y)
          if (p.at(a.with_level(i, x)) == side && p.at(b.with_level(i, y)) == side &&
              p.at(a.with_level(i, y)) == other && p.at(b.with_level(i, x)) == other)
            return false;
    }
  return true;
}

bool influential_oracle(const TwofoldPartition& p, int i) {
  const Shape& s = p.shape();
  for (std::size_t r = 0; r < s.size(); ++r) {
    const Alternative a = s.unrank(r);
    for (int x = 0; x < s.levels(i); ++x)
      for (int y = 0; y < s.levels(i); ++y)
        if (p.at(a.with_level(i, x)) == Category::A && p.at(a.with_level(i, y)) == Category::U) return true;
  }
  return false;
}

// The trace relation straight from its definition.
bool trace_oracle(const TwofoldPartition& p, int i, int x, int y) {
  const Shape& s = p.shape();
  for (std::size_t r = 0; r < s.size(); ++r) {
    const Alternative a = s.unrank(r);
    if (p.at(a.with_level(i, y)) == Category::A && p.at(a.with_level(i, x)) == Category::U) return false;
  }
  return true;
}

void check_against_oracles(const TwofoldPartition& p) {
  for (int i = 0; i < p.shape().attributes(); ++i) {
    const bool lin = linear_on_oracle(p, i, Category::A);
    REQUIRE(is_linear_on(p, i) == lin);
    REQUIRE(linear_on_oracle(p, i, Category::U) == lin);
    REQUIRE(find_linearity_violation(p, i, Category::U).has_value() == !lin);
    REQUIRE(is_influential(p, i) == influential_oracle(p, i));
    TraceOrder t = trace(p, i);
    REQUIRE(t.complete == lin);
    for (int x = 0; x < t.levels; ++x)
      for (int y = 0; y < t.levels; ++y) REQUIRE(t.weakly_better(x, y) == trace_oracle(p, i, x, y));
  }
}

}  // namespace

TEST_SUITE("partition") {

TEST_CASE("fixtures are linear with the expected traces") {
  for (const auto& f : paper_fixtures()) {
    CAPTURE(f.name);
    CHECK(is_linear(f.partition));
    CHECK(is_monotone(f.partition));
    for (int i = 0; i < f.partition.shape().attributes(); ++i) CHECK(is_influential(f.partition, i));
  }
  auto p1 = find_fixture("prop3-part1")->partition;
  for (int i = 0; i < 3; ++i) CHECK(describe(trace(p1, i)) == "1 > 0");
  CHECK(describe(trace(find_fixture("prop6")->partition, 0)) == "2 > 1 > 0");
  CHECK(describe(trace(find_fixture("prop3-part2")->partition, 3)) == "1 > 0");
  CHECK(p1.shape().size() == 8);
  CHECK(p1.satisfactory_count() == 3);
  CHECK(find_fixture("prop3-part2")->partition.shape().size() == 54);
  CHECK(find_fixture("prop3-part2")->partition.satisfactory_count() == 9);
  CHECK(find_fixture("prop6")->partition.shape().size() == 81);
  CHECK(find_fixture("prop6")->partition.satisfactory_count() == 60);
}

TEST_CASE("non-linear toy reports a valid quadruple") {
  Shape s{2, 2};
  auto p = TwofoldPartition::from_satisfactory(s, std::vector<Alternative>{{1, 0}, {0, 1}});
  auto v = find_linearity_violation(p);
  REQUIRE(v);
  CHECK(p.at(v->x_with_a) == Category::A);
  CHECK(p.at(v->y_with_b) == Category::A);
  CHECK(p.at(v->y_with_a) == Category::U);
  CHECK(p.at(v->x_with_b) == Category::U);
  CHECK_FALSE(is_linear(p));
  CHECK_THROWS_AS(canonicalize(p), PreconditionError);
  CHECK_THROWS_AS(canonical_eu(p), PreconditionError);
}

TEST_CASE("influence examples") {
  Shape s{2, 2};
  auto all = TwofoldPartition::from_predicate(s, [](const Alternative&) { return true; });
  CHECK_FALSE(is_influential(all, 0));
  auto first = TwofoldPartition::from_predicate(s, [](const Alternative& x) { return x[0] == 1; });
  CHECK(is_influential(first, 0));
  CHECK_FALSE(is_influential(first, 1));
}

TEST_CASE("exhaustive agreement with the definitions on small shapes") {
  for (const Shape& s : {Shape{2, 2}, Shape{3, 2}, Shape{2, 2, 2}, Shape{3, 3}, Shape{4, 2}}) {
    CAPTURE(s.dims());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s.size()); ++mask) check_against_oracles(from_mask(s, mask));
  }
}

TEST_CASE("random agreement with the definitions on larger shapes") {
  std::mt19937_64 rng(17);
  for (const Shape& s : {Shape{3, 3, 3}, Shape{4, 4}, Shape{2, 2, 2, 2, 2, 2}, Shape{8, 8}})
    for (int k = 0; k < 40; ++k) {
      check_against_oracles(random_partition(s, rng));
      check_against_oracles(random_monotone_partition(s, rng));
    }
}

TEST_CASE("linearity does not depend on which side plays A") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 500; ++k) {
    auto p = random_partition(Shape{3, 2, 2}, rng);
    CHECK(is_linear(p) == is_linear(p.swapped()));
  }
}

TEST_CASE("A* and U* on the fixtures") {
  for (const auto& f : paper_fixtures()) {
    CAPTURE(f.name);
    if (f.expected_a_star) CHECK(a_star(f.partition) == *f.expected_a_star);
    if (f.expected_u_star) CHECK(u_star(f.partition) == *f.expected_u_star);
  }
  Shape s{3, 3};
  auto all = TwofoldPartition::from_predicate(s, [](const Alternative&) { return true; });
  CHECK(a_star(all) == Antichain{s.bottom()});
  CHECK(u_star(all).empty());
}

TEST_CASE("A* and U* generate A and U on monotone partitions") {
  std::mt19937_64 rng(23);
  for (const Shape& s : {Shape{3, 3, 3}, Shape{2, 3, 4}, Shape{3, 3, 3, 2}})
    for (int k = 0; k < 50; ++k) {
      auto p = random_monotone_partition(s, rng);
      REQUIRE(is_monotone(p));
      Antichain a = a_star(p), u = u_star(p);
      CHECK(is_antichain(a, s));
      CHECK(is_antichain(u, s));
      CHECK(up_closure(a, s) == p.satisfactory_bits());
      CHECK(down_closure(u, s) == p.unsatisfactory_bits());
      for (const auto& x : a)
        for (int i = 0; i < s.attributes(); ++i)
          if (x[i] > 0) CHECK(p.at(x.with_level(i, x[i] - 1)) == Category::U);
    }
}

TEST_CASE("A* needs an up-set") {
  Shape s{2, 2};
  auto p = TwofoldPartition::from_satisfactory(s, std::vector<Alternative>{{0, 0}});
  CHECK(is_linear(p));
  CHECK_FALSE(is_monotone(p));
  CHECK_THROWS_AS(a_star(p), PreconditionError);
}

TEST_CASE("canonicalize merges equivalent levels") {
  // [2,2] partition A = {11, 10}... duplicate level 1 of attribute 1 into levels 1 and 2.
  Shape small{2, 2};
  auto base = TwofoldPartition::from_satisfactory(small, std::vector<Alternative>{{1, 1}});
  Shape big{3, 2};
  auto p = TwofoldPartition::from_predicate(big, [&](const Alternative& x) {
    return base.at(Alternative{std::min(x[0], 1), x[1]}) == Category::A;
  });
  CHECK_FALSE(is_canonical(p));
  Canonicalization c = canonicalize(p);
  CHECK(c.partition == base);
  CHECK(c.level_maps[0] == std::vector<int>{0, 1, 1});
  CHECK_FALSE(c.identity());
  CHECK(canonicalize(c.partition).identity());
}

TEST_CASE("canonicalize reorders levels along the trace") {
  Shape s{3, 2};
  // Level 0 of attribute 1 is the best one.
  auto p = TwofoldPartition::from_predicate(s, [](const Alternative& x) { return x[0] == 0 && x[1] == 1; });
  Canonicalization c = canonicalize(p);
  CHECK(c.partition.shape() == Shape{2, 2});
  CHECK(c.level_maps[0] == std::vector<int>{1, 0, 0});
  CHECK(is_canonical(c.partition));
}

TEST_CASE("canonicalize drops a non-influential attribute") {
  Shape s{2, 2, 2};
  auto p = TwofoldPartition::from_predicate(s, [](const Alternative& x) { return x[0] + x[1] >= 1; });
  Canonicalization c = canonicalize(p);
  CHECK(c.partition.shape() == Shape{2, 2});
  CHECK(c.kept_attributes == std::vector<int>{0, 1});
  CHECK(c.partition.satisfactory_count() == 3);
}

TEST_CASE("canonical partitions are fixed points") {
  for (const auto& f : paper_fixtures()) {
    CHECK(is_canonical(f.partition));
    CHECK(canonicalize(f.partition).identity());
  }
}

}
