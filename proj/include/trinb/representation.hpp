#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trinb/outranking.hpp"
#include "trinb/partition.hpp"

namespace trinb {

enum class ModelClass { E, E_c, E_u, E_u_bar, F, F_c, F_u, F_u_bar };

std::string_view to_string(ModelClass c);
std::optional<ModelClass> parse_model_class(std::string_view text);

/// pc for the E family, pd for the F family.
Rule rule_of(ModelClass c);
bool is_pseudo_disjunctive(ModelClass c);
/// The spec meets the structural constraints of the class (no vetoes for the
/// _c classes, additionally F = {N} for _u, additionally identity semiorders
/// for _u_bar). Does not check the partition.
bool satisfies_class(const OutrankingSpec& spec, ModelClass c);

/// Identity semiorders, no vetoes, F = {N}, P = A*. Rule pc reproduces p.
OutrankingSpec canonical_eu(const TwofoldPartition& p);
/// Identity semiorders, no vetoes, F = {N}, P = U*. The dual rule reproduces
/// p. Throws when U is empty.
OutrankingSpec canonical_dual(const TwofoldPartition& p);
/// Binary attributes only: identity semiorders, no vetoes, P = {top},
/// F generated by {C(x) : x in A} with C(x) = {i : x_i = 1}. Meant for rule pd.
OutrankingSpec binary_fc(const TwofoldPartition& p);

struct FuUnderlineVerdict {
  bool representable = false;
  /// canonical_eu(p), to be read under rule pd; present iff representable.
  std::optional<OutrankingSpec> witness;
};

/// Representable in the pd model with identity semiorders, no vetoes and
/// F = {N} iff A* is a maximal antichain.
FuUnderlineVerdict fu_underline_representable(const TwofoldPartition& p);

struct SearchBudget {
  std::uint64_t max_evaluations = 100'000'000;
  double max_seconds = 300.0;
};

struct SearchOptions {
  ModelClass model = ModelClass::F;
  SearchBudget budget;
  unsigned threads = 1;
  /// Only semiorders whose induced weak order is the level chain (the
  /// threshold shapes a hand case analysis usually considers). Off by
  /// default: every monotone threshold map is a semiorder.
  bool chain_semiorders_only = false;
  /// Draw profiles from all of X instead of A (used to cross-check the
  /// restriction to A).
  bool profiles_from_all = false;
};

enum class SearchOutcome { found, none, budget_exhausted };

std::string_view to_string(SearchOutcome o);

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::none;
  std::optional<OutrankingSpec> witness;
  std::uint64_t evaluations = 0;
  std::uint64_t configurations = 0;
  std::uint64_t coalition_families = 0;
  double seconds = 0.0;
};

/// Exhaustive search for a spec of the given class reproducing p. E-side
/// classes are answered by canonical_eu without search. Returns the first
/// witness in the fixed enumeration order: semiorder/veto configurations
/// (fewest strict pairs first), then coalition families (fewest minimal
/// coalitions first), then profile sets (smallest first, lexicographic).
SearchResult search_representation(const TwofoldPartition& p, const SearchOptions& options);

/// All threshold maps of a chain with `levels` levels, coarsest first.
std::vector<ThresholdSemiorder> all_semiorders(int levels);
/// All veto maps compatible with a semiorder, emptiest first.
std::vector<VetoRelation> all_vetoes(const ThresholdSemiorder& s);
/// All coalition families over n attributes with N in F and the empty set
/// not in F, ordered by number of minimal coalitions then lexicographically.
std::vector<CoalitionFamily> all_coalition_families(int attributes);

struct Fixture {
  std::string name;
  TwofoldPartition partition;
  /// Witness spec and the rule it is read under, when the fixture has one.
  std::optional<OutrankingSpec> witness;
  Rule witness_rule = Rule::pd;
  std::optional<Antichain> expected_a_star;
  std::optional<Antichain> expected_u_star;
};

/// prop3-part1, prop3-part2, prop6.
std::vector<Fixture> paper_fixtures();
std::optional<Fixture> find_fixture(std::string_view name);

struct CheckResult {
  std::string claim;
  bool passed = false;
  bool budget_exhausted = false;
  std::string detail;
};

struct FixtureReport {
  std::string name;
  std::vector<CheckResult> checks;

  bool passed() const;
  bool budget_exhausted() const;
};

FixtureReport verify_fixture(const Fixture& f, const SearchOptions& search = {});

}  // namespace trinb
