#include <doctest.h>

#include <random>

#include "trinb/chain_poset.hpp"
#include "trinb/error.hpp"

using namespace trinb;

namespace {

// Naive count: all subsets of X, filtered.
std::pair<std::uint64_t, std::uint64_t> subset_census(const Shape& s) {
  const std::size_t n = s.size();
  std::uint64_t all = 0, maximal = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Alternative> a;
    for (std::size_t r = 0; r < n; ++r)
      if (mask >> r & 1u) a.push_back(s.unrank(r));
    if (!is_antichain(a, s)) continue;
    ++all;
    if (is_maximal_antichain(a, s)) ++maximal;
  }
  return {all, maximal};
}

}  // namespace

TEST_SUITE("chain_poset") {

TEST_CASE("rank order is lexicographic") {
  Shape s{3, 2, 4};
  CHECK(s.size() == 24);
  CHECK(s.cardinality() == BigCount(24));
  for (std::size_t r = 0; r < s.size(); ++r) {
    CHECK(s.rank(s.unrank(r)) == r);
    if (r) CHECK(s.unrank(r - 1) < s.unrank(r));
  }
  CHECK(s.unrank(0) == s.bottom());
  CHECK(s.unrank(23) == s.top());
}

TEST_CASE("shape validation") {
  CHECK_THROWS(Shape(std::vector<int>{}));
  CHECK_THROWS(Shape{2, 0});
  Shape s{2, 2};
  CHECK_THROWS_AS(s.require(Alternative{2, 0}), DimensionMismatch);
  CHECK_THROWS_AS(s.require(Alternative{1}), DimensionMismatch);
  CHECK_THROWS_AS(parse_alternative("3", s), ParseError);
  CHECK(parse_alternative("10", s) == Alternative{1, 0});
}

TEST_CASE("wide shapes use level lists") {
  Shape s{12, 2};
  CHECK_FALSE(s.digit_strings());
  Alternative x{11, 1};
  CHECK(to_string(x, s) == "11,1");
  CHECK(parse_alternative("11,1", s) == x);
}

TEST_CASE("dominance") {
  Shape s{3, 3};
  CHECK(dominates({2, 1}, {1, 1}, s));
  CHECK(strictly_dominates({2, 1}, {1, 1}, s));
  CHECK_FALSE(strictly_dominates({1, 1}, {1, 1}, s));
  CHECK_FALSE(comparable({2, 0}, {0, 2}, s));
}

TEST_CASE("maximal antichain verdicts agree") {
  std::mt19937_64 rng(3);
  for (const Shape& s : {Shape{2, 2, 2}, Shape{3, 3}, Shape{3, 2, 2}}) {
    for (int k = 0; k < 200; ++k) {
      std::vector<Alternative> pick;
      for (std::size_t r = 0; r < s.size(); ++r)
        if (rng() % 4 == 0) pick.push_back(s.unrank(r));
      Antichain a = maximal_elements(pick, s);
      CHECK(is_antichain(a, s));
      CHECK(is_maximal_antichain(a, s) == is_maximal_antichain_by_closure(a, s));
    }
  }
  CHECK_FALSE(is_maximal_antichain(Antichain{}, Shape{2}));
  CHECK(is_maximal_antichain(Antichain{{1, 0}, {0, 1}}, Shape{2, 2}));
  std::vector<Alternative> chain{{0, 0}, {1, 1}};
  CHECK_THROWS_AS(is_maximal_antichain(chain, Shape{2, 2}), PreconditionError);
}

TEST_CASE("census agrees with subset enumeration") {
  for (const Shape& s : {Shape{2, 2}, Shape{3, 3}, Shape{2, 2, 2}, Shape{4, 2}, Shape{3, 2, 2}, Shape{2, 2, 2, 2}}) {
    auto [all, maximal] = subset_census(s);
    DownsetCensus c = census_downsets(s, true);
    CHECK(c.antichains == all);
    CHECK(c.maximal_antichains == maximal);
  }
}

TEST_CASE("census is independent of the thread count") {
  Shape s{3, 3, 3};
  DownsetCensus one = census_downsets(s, true, {100'000'000, 1});
  DownsetCensus four = census_downsets(s, true, {100'000'000, 4});
  CHECK(one.antichains == four.antichains);
  CHECK(one.maximal_antichains == four.maximal_antichains);
  CHECK(one.antichains == 980);
}

TEST_CASE("enumeration visits each down-set once, in a fixed order") {
  Shape s{3, 2, 2};
  std::vector<Antichain> first, second;
  enumerate_downsets(s, [&](const Antichain& a) { first.push_back(a); });
  enumerate_downsets(s, [&](const Antichain& a) { second.push_back(a); });
  CHECK(first == second);
  CHECK(first.front().empty());
  std::vector<Antichain> sorted = first;
  for (auto& a : sorted) a = sorted_unique(a);
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("budget is reported, never a short count") {
  CHECK_THROWS_AS(census_downsets(Shape{2, 2, 2, 2, 2}, false, {100, 1}), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_downsets(Shape{3, 3, 3}, [](const Antichain&) {}, 10), BudgetExceeded);
}

TEST_CASE("closures") {
  Shape s{3, 3};
  std::vector<Alternative> a{{1, 1}};
  CHECK(down_closure(a, s).count() == 4);
  CHECK(up_closure(a, s).count() == 4);
  CHECK(minimal_elements(std::vector<Alternative>{{1, 1}, {2, 2}, {0, 2}}, s) == Antichain{{0, 2}, {1, 1}});
}

}
