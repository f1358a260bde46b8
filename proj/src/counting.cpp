#include "trinb/counting.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <vector>

#include "trinb/error.hpp"

namespace trinb {

using Raw = BigCount::Raw;

BigCount binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return BigCount(0);
  b = std::min(b, a - b);
  Raw r = 1;
  for (std::uint64_t k = 1; k <= b; ++k) {
    r *= a - b + k;
    r /= k;
  }
  return BigCount(r);
}

BigCount d_e2(std::uint64_t m1, std::uint64_t m2) { return binomial(m1 + m2, m1); }

BigCount d_e3(std::uint64_t m1, std::uint64_t m2, std::uint64_t m3) {
  BigCount num(1), den(1);
  for (std::uint64_t i = 0; i < m3; ++i) {
    num *= binomial(m1 + m2 + i, m1);
    den *= binomial(m1 + i, m1);
  }
  return num.divide_exact(den);
}

std::optional<BigCount> antichain_count_closed_form(const Shape& shape) {
  const auto& d = shape.dims();
  auto u = [](int v) { return static_cast<std::uint64_t>(v); };
  switch (d.size()) {
    case 1: return BigCount(u(d[0]) + 1);
    case 2: return d_e2(u(d[0]), u(d[1]));
    case 3: return d_e3(u(d[0]), u(d[1]), u(d[2]));
    default: return std::nullopt;
  }
}

namespace {

struct DfMemo {
  std::mutex mutex;
  std::vector<std::vector<BigCount>> table;  // table[a][b], a, b < size
  std::size_t size = 0;

  void grow(std::size_t want) {
    if (want <= size) return;
    std::vector<std::vector<BigCount>> t(want, std::vector<BigCount>(want));
    std::vector<std::vector<BigCount>> row_prefix(want, std::vector<BigCount>(want + 1));
    std::vector<std::vector<BigCount>> col_prefix(want, std::vector<BigCount>(want + 1));
    for (std::size_t a = 0; a < want; ++a)
      for (std::size_t b = 0; b < want; ++b) {
        if (a == 0 || b == 0) {
          t[a][b] = BigCount(1);
        } else {
          // d(a-1,b-1) + sum_{i=0}^{a-2} d(i,b-1) + sum_{i=0}^{b-2} d(a-1,i)
          t[a][b] = t[a - 1][b - 1] + col_prefix[b - 1][a - 1] + row_prefix[a - 1][b - 1];
        }
        row_prefix[a][b + 1] = row_prefix[a][b] + t[a][b];
        col_prefix[b][a + 1] = col_prefix[b][a] + t[a][b];
      }
    table = std::move(t);
    size = want;
  }
};

DfMemo& df_memo() {
  static DfMemo memo;
  return memo;
}

}  // namespace

BigCount d_f2(std::uint64_t m1, std::uint64_t m2) {
  if (m1 == 0 || m2 == 0) return BigCount(1);
  constexpr std::uint64_t kMax = 4096;
  if (m1 >= kMax || m2 >= kMax) throw PreconditionError("d_f2 supports chain lengths below 4096");
  auto& memo = df_memo();
  std::lock_guard lock(memo.mutex);
  const std::size_t want = static_cast<std::size_t>(std::max(m1, m2)) + 1;
  if (want > memo.size) memo.grow(std::max(want, memo.size * 2));
  return memo.table[m1][m2];
}

BigCount d_f_square_heinz(std::uint64_t m) {
  if (m == 0) throw PreconditionError("the four-term recurrence starts at m = 1");
  std::vector<Raw> d{0, 1, 3, 9, 27};  // d[0] unused
  for (std::uint64_t k = 5; k <= m; ++k) {
    const Raw kk = k;
    Raw num = (4 * kk - 3) * d[k - 1] - (2 * kk - 5) * d[k - 2] + d[k - 3] - (kk - 3) * d[k - 4];
    if (num % kk != 0)
      throw Error("four-term recurrence: division by " + std::to_string(k) + " is not exact");
    d.push_back(num / kk);
  }
  return BigCount(d[m]);
}

BigCount count_antichains_bruteforce(const Shape& shape, const EnumerationLimits& limits) {
  return BigCount(census_downsets(shape, false, limits).antichains);
}

BigCount count_maximal_antichains_bruteforce(const Shape& shape, const EnumerationLimits& limits) {
  return BigCount(census_downsets(shape, true, limits).maximal_antichains);
}

std::uint64_t largest_rank_level(const Shape& shape) {
  std::vector<std::uint64_t> poly{1};
  for (int m : shape.dims()) {
    std::vector<std::uint64_t> next(poly.size() + static_cast<std::size_t>(m) - 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k)
      for (int j = 0; j < m; ++j) next[k + static_cast<std::size_t>(j)] += poly[k];
    poly = std::move(next);
  }
  return *std::max_element(poly.begin(), poly.end());
}

std::uint64_t antichain_count_lower_bound(const Shape& shape) {
  if (auto c = antichain_count_closed_form(shape))
    return c->fits_u64() ? c->to_u64() : std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t w = largest_rank_level(shape);
  return w >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << w;
}

namespace {

void require_slice_antichain(const Antichain& a, const Shape& shape, int axis) {
  if (axis < 0 || axis >= shape.attributes()) throw DimensionMismatch("axis out of range");
  for (const auto& x : a) {
    shape.require(x);
    if (x[axis] != shape.levels(axis) - 1)
      throw PreconditionError(to_string(x, shape) + " is not in the top slice of attribute " + std::to_string(axis + 1));
  }
  if (!is_antichain(a, shape)) throw PreconditionError("input is not an antichain");
}

}  // namespace

Antichain extend_to_maximal(const Antichain& a, const Shape& shape, int axis) {
  require_slice_antichain(a, shape, axis);
  const int top = shape.levels(axis) - 1;
  if (top == 0) {
    if (!is_maximal_antichain(a, shape))
      throw PreconditionError("with a single level on the axis the slice is X; the antichain must already be maximal");
    return sorted_unique(a);
  }
  // Work in X: (0, z) lies below (top, b) iff z <= b, so the elements not
  // covered are exactly the (0, z) with z outside down(B).
  Antichain bottom_layer;
  for (const auto& x : a) bottom_layer.push_back(x.with_level(axis, 0));
  Bits below = down_closure(bottom_layer, shape);
  std::vector<Alternative> free;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    Alternative x = shape.unrank(r);
    if (x[axis] == 0 && !below.test(r)) free.push_back(std::move(x));
  }
  Antichain out = a;
  for (auto& z : minimal_elements(free, shape)) out.push_back(std::move(z));
  return sorted_unique(std::move(out));
}

Antichain extend_by_lowering(const Antichain& a, const Shape& shape, int axis) {
  require_slice_antichain(a, shape, axis);
  const int top = shape.levels(axis) - 1;
  std::vector<Alternative> loose;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    Alternative x = shape.unrank(r);
    if (x[axis] != top) continue;
    if (std::none_of(a.begin(), a.end(), [&](const Alternative& y) { return comparable(x, y, shape); }))
      loose.push_back(std::move(x));
  }
  Antichain out = a;
  for (auto& x : minimal_elements(loose, shape)) out.push_back(x.with_level(axis, std::max(top - 1, 0)));
  return sorted_unique(std::move(out));
}

LowerBoundCheck lower_bound_check(int m, int n, const EnumerationLimits& limits) {
  if (m < 1 || n < 1) throw PreconditionError("lower bound needs m >= 1 and n >= 1");
  LowerBoundCheck c;
  c.maximal_count = count_maximal_antichains_bruteforce(Shape(std::vector<int>(static_cast<std::size_t>(n), m)), limits);
  if (n == 1) {
    c.antichain_count = BigCount(1);  // the empty poset has one antichain
  } else {
    Shape rest(std::vector<int>(static_cast<std::size_t>(n - 1), m));
    auto closed = antichain_count_closed_form(rest);
    c.antichain_count = closed ? *closed : count_antichains_bruteforce(rest, limits);
  }
  c.holds = c.maximal_count >= c.antichain_count;
  return c;
}

}  // namespace trinb
