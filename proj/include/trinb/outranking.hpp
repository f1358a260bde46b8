#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trinb/bits.hpp"
#include "trinb/chain_poset.hpp"
#include "trinb/kernels.hpp"
#include "trinb/partition.hpp"

namespace trinb {

/// Semiorder on the levels of one attribute, given by its threshold map:
/// level l strictly beats exactly the levels <= t(l).
struct ThresholdSemiorder {
  std::vector<int> threshold;

  static ThresholdSemiorder identity(int levels);

  int levels() const { return static_cast<int>(threshold.size()); }
  bool is_identity() const;
  /// l P_i k
  bool prefers(int l, int k) const { return k <= threshold[static_cast<std::size_t>(l)]; }
  /// l S_i k, i.e. not k P_i l
  bool at_least(int l, int k) const { return l > threshold[static_cast<std::size_t>(k)]; }
  /// Number of strictly ordered pairs (l P_i k).
  int strict_pairs() const;
  /// The weak order induced by the semiorder separates every pair of
  /// adjacent levels, i.e. it is the level chain itself.
  bool induces_chain() const;

  friend bool operator==(const ThresholdSemiorder&, const ThresholdSemiorder&) = default;
};

/// Veto relation: l V_i k iff k <= v(l). v == -1 everywhere means no veto.
struct VetoRelation {
  std::vector<int> threshold;

  static VetoRelation none(int levels);

  int levels() const { return static_cast<int>(threshold.size()); }
  bool empty() const;
  bool vetoes(int l, int k) const { return k <= threshold[static_cast<std::size_t>(l)]; }
  int veto_pairs() const;

  friend bool operator==(const VetoRelation&, const VetoRelation&) = default;
};

/// Upward-closed family of coalitions (subsets of attributes, as bitmasks
/// with bit i for attribute i), stored by its minimal members.
class CoalitionFamily {
 public:
  static constexpr int kMaxAttributes = 20;

  CoalitionFamily() = default;
  /// Family generated by `generators` (any subsets; closed upward).
  CoalitionFamily(int attributes, std::vector<std::uint32_t> generators);

  /// F = {N}
  static CoalitionFamily unanimity(int attributes);

  int attributes() const { return attributes_; }
  std::uint32_t full() const { return (std::uint32_t{1} << attributes_) - 1; }
  bool contains(std::uint32_t coalition) const { return member_[coalition] != 0; }
  /// Minimal coalitions, ordered by size then lexicographically.
  const std::vector<std::uint32_t>& minimal() const { return minimal_; }
  bool nondegenerate() const { return contains(full()) && !contains(0); }
  bool is_unanimity() const { return minimal_.size() == 1 && minimal_[0] == full(); }

  /// Membership table for the outranking kernels; requires attributes() <= 8.
  kernels::CoalitionTable kernel_table() const;

  friend bool operator==(const CoalitionFamily& a, const CoalitionFamily& b) {
    return a.attributes_ == b.attributes_ && a.minimal_ == b.minimal_;
  }

 private:
  int attributes_ = 0;
  std::vector<std::uint32_t> minimal_;
  std::vector<std::uint8_t> member_;
};

/// "{1,3}" style rendering, 1-based.
std::string coalition_to_string(std::uint32_t coalition, int attributes);
std::string to_string(const CoalitionFamily& f);

struct OutrankingSpec {
  Shape shape;
  std::vector<ThresholdSemiorder> semiorders;
  std::vector<VetoRelation> vetoes;
  CoalitionFamily coalitions;
  std::vector<Alternative> profiles;

  /// Identity semiorders, no vetoes, F = {N}, no profiles.
  static OutrankingSpec plain(const Shape& shape);

  bool no_vetoes() const;
  bool identity_semiorders() const;

  friend bool operator==(const OutrankingSpec&, const OutrankingSpec&) = default;
};

/// x_i -> m_i - 1 - x_i.
Alternative reverse_levels(const Alternative& x, const Shape& shape);
/// Same categories at reversed positions.
TwofoldPartition reverse_levels(const TwofoldPartition& p);
/// Profiles reversed, everything else kept. Requires identity semiorders
/// and no vetoes, which are their own reversal.
OutrankingSpec reverse_levels(const OutrankingSpec& spec);

/// One line: per-attribute threshold and veto maps, F and P.
std::string describe(const OutrankingSpec& spec);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

ValidationReport validate_spec(const OutrankingSpec& spec);
/// Throws PreconditionError with the report when the spec is invalid.
void require_valid(const OutrankingSpec& spec);

/// S(x, y) = {i : x_i S_i y_i} as a bitmask.
std::uint32_t concordance(const Alternative& x, const Alternative& y, const OutrankingSpec& spec);
/// V(y, x) = {i : y_i V_i x_i} as a bitmask.
std::uint32_t discordance(const Alternative& y, const Alternative& x, const OutrankingSpec& spec);

bool outranks(const Alternative& x, const Alternative& y, const OutrankingSpec& spec);
bool strictly_outranks(const Alternative& x, const Alternative& y, const OutrankingSpec& spec);

enum class Rule { pc, pd, dual };

std::string_view to_string(Rule r);
std::optional<Rule> parse_rule(std::string_view text);

Category assign_pc(const Alternative& x, const OutrankingSpec& spec);
Category assign_pd(const Alternative& x, const OutrankingSpec& spec);
Category assign_dual(const Alternative& x, const OutrankingSpec& spec);
Category assign(const Alternative& x, const OutrankingSpec& spec, Rule rule);

/// Outranking between one reference alternative y and all of X, as bit sets
/// indexed by rank.
struct ReferenceRelation {
  Bits ref_S_alt;  // y S x
  Bits alt_S_ref;  // x S y

  Bits ref_P_alt() const;
  Bits alt_P_ref() const;
};

/// Evaluates S against whole rows of X for fixed semiorders and vetoes. Uses
/// the data-parallel kernels when n <= 8 and every m_i <= 16, a direct loop
/// otherwise.
class RelationEngine {
 public:
  RelationEngine(const Shape& shape, const std::vector<ThresholdSemiorder>& semiorders,
                 const std::vector<VetoRelation>& vetoes, const kernels::KernelSet& kernels = kernels::active());

  const Shape& shape() const { return shape_; }
  bool vectorized() const { return vectorized_; }

  /// Per-x attribute masks for reference y; only when vectorized().
  struct Masks {
    std::vector<std::uint8_t> ref_over_alt, alt_over_ref, ref_vetoes_alt, alt_vetoes_ref;
  };
  Masks masks(const Alternative& y) const;
  ReferenceRelation relate(const Masks& masks, const CoalitionFamily& f) const;

  ReferenceRelation relate(const Alternative& y, const CoalitionFamily& f) const;

 private:
  Shape shape_;
  std::vector<ThresholdSemiorder> semiorders_;
  std::vector<VetoRelation> vetoes_;
  const kernels::KernelSet* kernels_;
  bool vectorized_ = false;
  std::vector<std::vector<std::uint8_t>> columns_;
  kernels::AttributeTables tables_{};
};

/// Combines per-profile relations according to a rule; returns the A set.
Bits combine_rule(const std::vector<ReferenceRelation>& profiles, Rule rule, std::size_t size);

TwofoldPartition induced_partition(const OutrankingSpec& spec, Rule rule,
                                   const kernels::KernelSet& kernels = kernels::active());

/// Precomputed |X| x |X| outranking relation of a spec.
class OutrankingCache {
 public:
  explicit OutrankingCache(const OutrankingSpec& spec);
  bool outranks(std::size_t x, std::size_t y) const { return rows_[y].alt_S_ref.test(x); }
  bool strictly_outranks(std::size_t x, std::size_t y) const { return outranks(x, y) && !outranks(y, x); }

 private:
  std::vector<ReferenceRelation> rows_;
};

}  // namespace trinb
