#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trinb/big_count.hpp"
#include "trinb/bits.hpp"

namespace trinb {

class Shape;

/// A level vector x in X = [m_1] x ... x [m_n]. Levels are 0-based.
class Alternative {
 public:
  Alternative() = default;
  explicit Alternative(std::vector<int> levels) : levels_(std::move(levels)) {}
  Alternative(std::initializer_list<int> levels) : levels_(levels) {}

  int size() const { return static_cast<int>(levels_.size()); }
  int operator[](int i) const { return levels_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return levels_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& levels() const { return levels_; }

  /// (level_i, x_{-i}): copy with one coordinate substituted.
  Alternative with_level(int i, int level) const {
    Alternative r = *this;
    r[i] = level;
    return r;
  }

  friend auto operator<=>(const Alternative&, const Alternative&) = default;
  friend bool operator==(const Alternative&, const Alternative&) = default;

 private:
  std::vector<int> levels_;
};

/// Set of alternatives kept in lexicographic order; used for antichains.
using Antichain = std::vector<Alternative>;

/// Dimensions (m_1, ..., m_n) of a product of chains.
class Shape {
 public:
  /// Largest |X| the dense representations accept.
  static constexpr std::size_t kMaxDenseSize = std::size_t{1} << 32;

  Shape() = default;
  explicit Shape(std::vector<int> dims);
  Shape(std::initializer_list<int> dims) : Shape(std::vector<int>(dims)) {}

  int attributes() const { return static_cast<int>(dims_.size()); }
  int levels(int i) const { return dims_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& dims() const { return dims_; }

  /// |X|; throws if it exceeds kMaxDenseSize.
  std::size_t size() const;
  BigCount cardinality() const;

  /// Mixed-radix weight of attribute i. The first attribute is the most
  /// significant, so rank order coincides with lexicographic order.
  std::size_t stride(int i) const { return strides_[static_cast<std::size_t>(i)]; }
  std::size_t rank(const Alternative& x) const;
  Alternative unrank(std::size_t r) const;

  bool conforms(const Alternative& x) const;
  /// Throws DimensionMismatch unless x conforms.
  void require(const Alternative& x) const;

  Alternative bottom() const;
  Alternative top() const;

  /// True when every attribute has at most 10 levels, so alternatives print
  /// as digit strings.
  bool digit_strings() const;

  friend bool operator==(const Shape& a, const Shape& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
  bool oversized_ = false;
};

std::string to_string(const Alternative& x, const Shape& shape);
std::string to_string(std::span<const Alternative> xs, const Shape& shape);
Alternative parse_alternative(std::string_view text, const Shape& shape);

/// x >= y coordinatewise.
bool dominates(const Alternative& x, const Alternative& y, const Shape& shape);
bool strictly_dominates(const Alternative& x, const Alternative& y, const Shape& shape);
bool comparable(const Alternative& x, const Alternative& y, const Shape& shape);

bool is_antichain(std::span<const Alternative> s, const Shape& shape);

/// Every x in X is comparable to some member. Throws PreconditionError when
/// `s` is not an antichain. The empty antichain is never maximal (X is
/// nonempty).
bool is_maximal_antichain(std::span<const Alternative> s, const Shape& shape);
/// Same verdict, computed as down(s) | up(s) == X.
bool is_maximal_antichain_by_closure(std::span<const Alternative> s, const Shape& shape);

Antichain minimal_elements(std::span<const Alternative> s, const Shape& shape);
Antichain maximal_elements(std::span<const Alternative> s, const Shape& shape);

/// Down-closure / up-closure as rank-indexed bit sets.
Bits down_closure(std::span<const Alternative> s, const Shape& shape);
Bits up_closure(std::span<const Alternative> s, const Shape& shape);

Antichain sorted_unique(std::vector<Alternative> s);

struct EnumerationLimits {
  std::uint64_t max_items = 100'000'000;
  unsigned threads = 1;
};

/// Largest |X| the down-set enumerator supports.
inline constexpr std::size_t kMaxEnumerableSize = 1024;

/// Visits every down-set of X exactly once, as its antichain of maximal
/// elements, in a fixed order (the empty down-set first). Throws
/// BudgetExceeded once more than `max_items` down-sets have been produced.
std::uint64_t enumerate_downsets(const Shape& shape, const std::function<void(const Antichain&)>& visit,
                                 std::uint64_t max_items = EnumerationLimits{}.max_items);

struct DownsetCensus {
  std::uint64_t antichains = 0;
  std::uint64_t maximal_antichains = 0;
};

/// Counts down-sets (= antichains) and, when `maximal` is set, those whose
/// maximal elements form a maximal antichain. Streams; memory stays flat.
DownsetCensus census_downsets(const Shape& shape, bool maximal, const EnumerationLimits& limits = {});

}  // namespace trinb
