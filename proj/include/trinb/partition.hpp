#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trinb/bits.hpp"
#include "trinb/chain_poset.hpp"

namespace trinb {

enum class Category : std::uint8_t { U = 0, A = 1 };

inline char to_char(Category c) { return c == Category::A ? 'A' : 'U'; }

/// Total assignment of X to the satisfactory (A) and unsatisfactory (U)
/// categories, stored densely by rank.
class TwofoldPartition {
 public:
  TwofoldPartition() = default;
  /// Everything in U.
  explicit TwofoldPartition(Shape shape);

  static TwofoldPartition from_satisfactory(Shape shape, std::span<const Alternative> satisfactory);
  static TwofoldPartition from_predicate(Shape shape, const std::function<bool(const Alternative&)>& in_a);
  static TwofoldPartition from_bits(Shape shape, const Bits& satisfactory);

  const Shape& shape() const { return shape_; }

  Category at(const Alternative& x) const { return at_rank(shape_.rank(x)); }
  Category at_rank(std::size_t r) const { return satisfactory_.test(r) ? Category::A : Category::U; }
  bool satisfactory(std::size_t r) const { return satisfactory_.test(r); }
  void assign(std::size_t r, Category c) { satisfactory_.assign(r, c == Category::A); }

  const Bits& satisfactory_bits() const { return satisfactory_; }
  Bits unsatisfactory_bits() const { return satisfactory_.complement(); }

  std::vector<Alternative> satisfactory_set() const;
  std::vector<Alternative> unsatisfactory_set() const;
  std::size_t satisfactory_count() const { return satisfactory_.count(); }

  /// A and U swapped.
  TwofoldPartition swapped() const;

  friend bool operator==(const TwofoldPartition&, const TwofoldPartition&) = default;

 private:
  Shape shape_;
  Bits satisfactory_;
};

bool is_influential(const TwofoldPartition& p, int attribute);

/// A witness against linearity on one attribute: (x_i, a) and (y_i, b) are in
/// A while (y_i, a) and (x_i, b) are in U.
struct LinearityViolation {
  int attribute = 0;
  Alternative x_with_a;  // (x_i, a_{-i}) in A
  Alternative y_with_b;  // (y_i, b_{-i}) in A
  Alternative y_with_a;  // (y_i, a_{-i}) in U
  Alternative x_with_b;  // (x_i, b_{-i}) in U
};

std::string describe(const LinearityViolation& v, const Shape& shape);

/// Direct search for a violating quadruple on one attribute. `category`
/// selects which side plays the role of A (the condition is equivalent for
/// both sides).
std::optional<LinearityViolation> find_linearity_violation(const TwofoldPartition& p, int attribute,
                                                           Category category = Category::A);
std::optional<LinearityViolation> find_linearity_violation(const TwofoldPartition& p);
bool is_linear_on(const TwofoldPartition& p, int attribute);
bool is_linear(const TwofoldPartition& p);

/// The trace relation on the levels of one attribute.
struct TraceOrder {
  int attribute = 0;
  int levels = 0;
  /// at_least[l * levels + k] <=> l >=_i k
  std::vector<std::uint8_t> at_least;
  bool complete = false;
  /// Equivalence classes of ~_i, each sorted; listed from worst to best when
  /// the order is complete, otherwise by smallest member.
  std::vector<std::vector<int>> classes;

  bool weakly_better(int l, int k) const {
    return at_least[static_cast<std::size_t>(l) * static_cast<std::size_t>(levels) + static_cast<std::size_t>(k)] != 0;
  }
  bool strictly_better(int l, int k) const { return weakly_better(l, k) && !weakly_better(k, l); }
  bool trivial_equivalence() const { return static_cast<int>(classes.size()) == levels; }
};

TraceOrder trace(const TwofoldPartition& p, int attribute);
/// e.g. "2 > 1 > 0", "1 ~ 2 > 0"; incomplete orders list the strict pairs.
std::string describe(const TraceOrder& t);

/// A is an up-set of the product order: every trace is complete and agrees
/// with the level order. This is the precondition of the A*/U* analysis.
bool is_monotone(const TwofoldPartition& p);
/// Monotone, every attribute influential, every ~_i trivial.
bool is_canonical(const TwofoldPartition& p);

struct Canonicalization {
  TwofoldPartition partition;
  /// 0-based original indices of the attributes that were kept.
  std::vector<int> kept_attributes;
  /// level_maps[k][original level] = canonical level, for kept attribute k.
  std::vector<std::vector<int>> level_maps;

  bool identity() const;
};

/// Quotient by ~_i, levels reordered along the trace, non-influential
/// attributes dropped. Requires a linear partition with at least one
/// influential attribute.
Canonicalization canonicalize(const TwofoldPartition& p);

/// Minimal elements of A / maximal elements of U. Require is_monotone(p).
Antichain a_star(const TwofoldPartition& p);
Antichain u_star(const TwofoldPartition& p);

}  // namespace trinb
