#include "trinb/chain_poset.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <mutex>
#include <thread>

#include "trinb/error.hpp"

namespace trinb {

// ---------------------------------------------------------------- Shape

Shape::Shape(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw PreconditionError("a shape needs at least one attribute");
  for (int m : dims_)
    if (m < 1) throw PreconditionError("every chain needs at least one level");
  strides_.assign(dims_.size(), 1);
  unsigned __int128 total = 1;
  for (std::size_t i = dims_.size(); i-- > 0;) {
    strides_[i] = static_cast<std::size_t>(std::min<unsigned __int128>(total, kMaxDenseSize));
    total *= static_cast<unsigned>(dims_[i]);
    if (total > kMaxDenseSize) oversized_ = true;
  }
  size_ = oversized_ ? 0 : static_cast<std::size_t>(total);
}

std::size_t Shape::size() const {
  if (oversized_) throw PreconditionError("product of chains too large for a dense representation");
  return size_;
}

BigCount Shape::cardinality() const {
  BigCount c = 1;
  for (int m : dims_) c *= BigCount(static_cast<std::uint64_t>(m));
  return c;
}

std::size_t Shape::rank(const Alternative& x) const {
  require(x);
  std::size_t r = 0;
  for (int i = 0; i < attributes(); ++i) r += static_cast<std::size_t>(x[i]) * stride(i);
  return r;
}

Alternative Shape::unrank(std::size_t r) const {
  std::vector<int> levels(dims_.size());
  for (int i = 0; i < attributes(); ++i) {
    levels[static_cast<std::size_t>(i)] = static_cast<int>(r / stride(i));
    r %= stride(i);
  }
  return Alternative(std::move(levels));
}

bool Shape::conforms(const Alternative& x) const {
  if (x.size() != attributes()) return false;
  for (int i = 0; i < attributes(); ++i)
    if (x[i] < 0 || x[i] >= dims_[static_cast<std::size_t>(i)]) return false;
  return true;
}

void Shape::require(const Alternative& x) const {
  if (x.size() != attributes())
    throw DimensionMismatch("alternative has " + std::to_string(x.size()) + " coordinates, shape has " +
                            std::to_string(attributes()));
  for (int i = 0; i < attributes(); ++i)
    if (x[i] < 0 || x[i] >= dims_[static_cast<std::size_t>(i)])
      throw DimensionMismatch("level " + std::to_string(x[i]) + " out of range on attribute " + std::to_string(i + 1));
}

Alternative Shape::bottom() const { return Alternative(std::vector<int>(dims_.size(), 0)); }

Alternative Shape::top() const {
  std::vector<int> levels;
  for (int m : dims_) levels.push_back(m - 1);
  return Alternative(std::move(levels));
}

bool Shape::digit_strings() const {
  return std::all_of(dims_.begin(), dims_.end(), [](int m) { return m <= 10; });
}

// ---------------------------------------------------------------- text

std::string to_string(const Alternative& x, const Shape& shape) {
  std::string s;
  if (shape.digit_strings()) {
    for (int v : x.levels()) s += static_cast<char>('0' + v);
    return s;
  }
  for (int i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x[i]);
  }
  return s;
}

std::string to_string(std::span<const Alternative> xs, const Shape& shape) {
  std::string s = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += ", ";
    s += to_string(xs[k], shape);
  }
  return s + "}";
}

Alternative parse_alternative(std::string_view text, const Shape& shape) {
  std::vector<int> levels;
  if (shape.digit_strings() && text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError("bad digit in alternative '" + std::string(text) + "'");
      levels.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      auto tok = text.substr(pos, end - pos);
      int v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || p != tok.data() + tok.size())
        throw ParseError("bad level list '" + std::string(text) + "'");
      levels.push_back(v);
      pos = end + 1;
    }
  }
  Alternative x(std::move(levels));
  if (!shape.conforms(x)) throw ParseError("alternative '" + std::string(text) + "' does not fit the shape");
  return x;
}

// ---------------------------------------------------------------- order

bool dominates(const Alternative& x, const Alternative& y, const Shape& shape) {
  shape.require(x);
  shape.require(y);
  for (int i = 0; i < x.size(); ++i)
    if (x[i] < y[i]) return false;
  return true;
}

bool strictly_dominates(const Alternative& x, const Alternative& y, const Shape& shape) {
  return dominates(x, y, shape) && x != y;
}

bool comparable(const Alternative& x, const Alternative& y, const Shape& shape) {
  return dominates(x, y, shape) || dominates(y, x, shape);
}

bool is_antichain(std::span<const Alternative> s, const Shape& shape) {
  for (const auto& x : s) shape.require(x);
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (comparable(s[a], s[b], shape)) return false;
  return true;
}

bool is_maximal_antichain(std::span<const Alternative> s, const Shape& shape) {
  if (!is_antichain(s, shape)) throw PreconditionError("not an antichain: " + to_string(s, shape));
  const std::size_t size = shape.size();
  for (std::size_t r = 0; r < size; ++r) {
    Alternative x = shape.unrank(r);
    bool hit = std::any_of(s.begin(), s.end(), [&](const Alternative& a) { return comparable(x, a, shape); });
    if (!hit) return false;
  }
  return true;
}

bool is_maximal_antichain_by_closure(std::span<const Alternative> s, const Shape& shape) {
  if (!is_antichain(s, shape)) throw PreconditionError("not an antichain: " + to_string(s, shape));
  Bits covered = down_closure(s, shape);
  covered |= up_closure(s, shape);
  return covered.count() == shape.size();
}

Antichain sorted_unique(std::vector<Alternative> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Antichain minimal_elements(std::span<const Alternative> s, const Shape& shape) {
  std::vector<Alternative> out;
  for (const auto& x : s) {
    bool minimal = std::none_of(s.begin(), s.end(), [&](const Alternative& y) { return strictly_dominates(x, y, shape); });
    if (minimal) out.push_back(x);
  }
  return sorted_unique(std::move(out));
}

Antichain maximal_elements(std::span<const Alternative> s, const Shape& shape) {
  std::vector<Alternative> out;
  for (const auto& x : s) {
    bool maximal = std::none_of(s.begin(), s.end(), [&](const Alternative& y) { return strictly_dominates(y, x, shape); });
    if (maximal) out.push_back(x);
  }
  return sorted_unique(std::move(out));
}

Bits down_closure(std::span<const Alternative> s, const Shape& shape) {
  Bits out(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) {
    Alternative x = shape.unrank(r);
    if (std::any_of(s.begin(), s.end(), [&](const Alternative& a) { return dominates(a, x, shape); })) out.set(r);
  }
  return out;
}

Bits up_closure(std::span<const Alternative> s, const Shape& shape) {
  Bits out(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) {
    Alternative x = shape.unrank(r);
    if (std::any_of(s.begin(), s.end(), [&](const Alternative& a) { return dominates(x, a, shape); })) out.set(r);
  }
  return out;
}

// ---------------------------------------------------------------- down-set walk

namespace {

// Bitset of W words over the ranks of X.
template <int W>
using Words = std::array<std::uint64_t, W>;

template <int W>
Words<W> shifted_up(const Words<W>& b, std::size_t s) {
  // result[p] = b[p - s]
  Words<W> r{};
  const std::size_t ws = s / 64, bs = s % 64;
  for (std::size_t k = ws; k < W; ++k) {
    std::uint64_t v = b[k - ws] << bs;
    if (bs && k > ws) v |= b[k - ws - 1] >> (64 - bs);
    r[k] = v;
  }
  return r;
}

template <int W>
Words<W> shifted_down(const Words<W>& b, std::size_t s) {
  // result[p] = b[p + s]
  Words<W> r{};
  const std::size_t ws = s / 64, bs = s % 64;
  for (std::size_t k = 0; k + ws < W; ++k) {
    std::uint64_t v = b[k + ws] >> bs;
    if (bs && k + ws + 1 < W) v |= b[k + ws + 1] << (64 - bs);
    r[k] = v;
  }
  return r;
}

// Precomputed masks for one shape.
template <int W>
struct WalkPlan {
  std::size_t size = 0;
  int attributes = 0;
  std::vector<std::size_t> strides;
  std::vector<Words<W>> up;          // up[r]: ranks dominating r
  std::vector<Words<W>> not_top;     // positions with x_i < m_i - 1
  std::vector<Words<W>> not_bottom;  // positions with x_i > 0
  Words<W> all{};

  explicit WalkPlan(const Shape& shape) : size(shape.size()), attributes(shape.attributes()) {
    for (int i = 0; i < attributes; ++i) strides.push_back(shape.stride(i));
    up.assign(size, Words<W>{});
    not_top.assign(static_cast<std::size_t>(attributes), Words<W>{});
    not_bottom.assign(static_cast<std::size_t>(attributes), Words<W>{});
    for (std::size_t r = 0; r < size; ++r) all[r / 64] |= std::uint64_t{1} << (r % 64);
    for (std::size_t r = size; r-- > 0;) {
      Alternative x = shape.unrank(r);
      Words<W>& u = up[r];
      u[r / 64] |= std::uint64_t{1} << (r % 64);
      for (int i = 0; i < attributes; ++i) {
        auto si = static_cast<std::size_t>(i);
        if (x[i] + 1 < shape.levels(i)) {
          const Words<W>& above = up[r + strides[si]];
          for (int k = 0; k < W; ++k) u[k] |= above[k];
          not_top[si][r / 64] |= std::uint64_t{1} << (r % 64);
        }
        if (x[i] > 0) not_bottom[si][r / 64] |= std::uint64_t{1} << (r % 64);
      }
    }
  }

  // First rank >= r whose bit is clear in `blocked`, or size.
  std::size_t next_free(const Words<W>& blocked, std::size_t r) const {
    while (r < size) {
      std::size_t k = r / 64;
      std::uint64_t free = ~blocked[k] & (~std::uint64_t{0} << (r % 64));
      if (free) {
        std::size_t p = k * 64 + static_cast<std::size_t>(std::countr_zero(free));
        return p < size ? p : size;
      }
      r = (k + 1) * 64;
    }
    return size;
  }

  // Down-set D = all \ blocked; decides whether max(D) is a maximal antichain:
  // every minimal element of the complement must cover a maximal element of D.
  bool maximal(const Words<W>& blocked) const {
    Words<W> down{}, max_d{}, min_c{}, lifted{};
    for (int k = 0; k < W; ++k) down[k] = all[k] & ~blocked[k];
    Words<W> has_above{}, has_below_c{};
    for (int i = 0; i < attributes; ++i) {
      auto si = static_cast<std::size_t>(i);
      Words<W> a = shifted_down<W>(down, strides[si]);
      Words<W> b = shifted_up<W>(blocked, strides[si]);
      for (int k = 0; k < W; ++k) {
        has_above[k] |= a[k] & not_top[si][k];
        has_below_c[k] |= b[k] & not_bottom[si][k];
      }
    }
    for (int k = 0; k < W; ++k) {
      max_d[k] = down[k] & ~has_above[k];
      min_c[k] = blocked[k] & ~has_below_c[k];
    }
    for (int i = 0; i < attributes; ++i) {
      auto si = static_cast<std::size_t>(i);
      Words<W> c = shifted_up<W>(max_d, strides[si]);
      for (int k = 0; k < W; ++k) lifted[k] |= c[k] & not_bottom[si][k];
    }
    for (int k = 0; k < W; ++k)
      if (min_c[k] & ~lifted[k]) return false;
    return true;
  }

  Words<W> maximal_elements(const Words<W>& blocked) const {
    Words<W> down{}, has_above{};
    for (int k = 0; k < W; ++k) down[k] = all[k] & ~blocked[k];
    for (int i = 0; i < attributes; ++i) {
      auto si = static_cast<std::size_t>(i);
      Words<W> a = shifted_down<W>(down, strides[si]);
      for (int k = 0; k < W; ++k) has_above[k] |= a[k] & not_top[si][k];
    }
    for (int k = 0; k < W; ++k) down[k] &= ~has_above[k];
    return down;
  }
};

// Binary decision walk in rank order: each free element is either excluded
// (which blocks its whole up-set) or kept. Every leaf is a distinct down-set.
template <int W, class Leaf>
void walk(const WalkPlan<W>& plan, std::size_t r, const Words<W>& blocked, Leaf& leaf) {
  r = plan.next_free(blocked, r);
  if (r >= plan.size) {
    leaf(blocked);
    return;
  }
  Words<W> excluded = blocked;
  const Words<W>& u = plan.up[r];
  for (int k = 0; k < W; ++k) excluded[k] |= u[k];
  walk<W>(plan, r + 1, excluded, leaf);
  walk<W>(plan, r + 1, blocked, leaf);
}

struct Task {
  std::size_t next = 0;
  std::vector<std::uint64_t> blocked;
};

template <int W>
DownsetCensus census_impl(const Shape& shape, bool maximal, const EnumerationLimits& limits) {
  const WalkPlan<W> plan(shape);
  const unsigned threads = std::max(1u, limits.threads);

  if (threads == 1) {
    DownsetCensus c;
    auto leaf = [&](const Words<W>& blocked) {
      if (++c.antichains > limits.max_items)
        throw BudgetExceeded("down-set enumeration exceeded " + std::to_string(limits.max_items) + " items");
      if (maximal && plan.maximal(blocked)) ++c.maximal_antichains;
    };
    walk<W>(plan, 0, Words<W>{}, leaf);
    return c;
  }

  // Split the walk into independent subtrees, breadth first.
  std::vector<std::pair<std::size_t, Words<W>>> frontier{{0, Words<W>{}}};
  std::uint64_t finished_early = 0, finished_maximal = 0;
  while (frontier.size() < 16 * threads) {
    std::vector<std::pair<std::size_t, Words<W>>> next;
    bool grew = false;
    for (auto& [r0, blocked] : frontier) {
      std::size_t r = plan.next_free(blocked, r0);
      if (r >= plan.size) {
        ++finished_early;
        if (maximal && plan.maximal(blocked)) ++finished_maximal;
        continue;
      }
      Words<W> excluded = blocked;
      for (int k = 0; k < W; ++k) excluded[k] |= plan.up[r][k];
      next.emplace_back(r + 1, excluded);
      next.emplace_back(r + 1, blocked);
      grew = true;
    }
    frontier = std::move(next);
    if (!grew) break;
  }

  std::atomic<std::size_t> cursor{0};
  std::atomic<std::uint64_t> produced{finished_early};
  std::atomic<bool> over_budget{false};
  std::vector<DownsetCensus> partial(threads);
  auto worker = [&](unsigned id) {
    DownsetCensus& c = partial[id];
    std::uint64_t local = 0;
    auto leaf = [&](const Words<W>& blocked) {
      ++c.antichains;
      if (++local == 4096) {
        if (produced.fetch_add(local) + local > limits.max_items) over_budget = true;
        local = 0;
        if (over_budget) throw BudgetExceeded("budget");
      }
      if (maximal && plan.maximal(blocked)) ++c.maximal_antichains;
    };
    try {
      for (std::size_t t; (t = cursor.fetch_add(1)) < frontier.size() && !over_budget;)
        walk<W>(plan, frontier[t].first, frontier[t].second, leaf);
    } catch (const BudgetExceeded&) {
    }
    produced.fetch_add(local);
  };
  std::vector<std::thread> pool;
  for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  for (auto& t : pool) t.join();

  DownsetCensus total{finished_early, finished_maximal};
  for (const auto& c : partial) {
    total.antichains += c.antichains;
    total.maximal_antichains += c.maximal_antichains;
  }
  if (over_budget || total.antichains > limits.max_items)
    throw BudgetExceeded("down-set enumeration exceeded " + std::to_string(limits.max_items) + " items");
  return total;
}

template <int W>
std::uint64_t enumerate_impl(const Shape& shape, const std::function<void(const Antichain&)>& visit,
                             std::uint64_t max_items) {
  const WalkPlan<W> plan(shape);
  std::uint64_t produced = 0;
  auto leaf = [&](const Words<W>& blocked) {
    if (++produced > max_items)
      throw BudgetExceeded("down-set enumeration exceeded " + std::to_string(max_items) + " items");
    Words<W> m = plan.maximal_elements(blocked);
    Antichain out;
    for (std::size_t r = 0; r < plan.size; ++r)
      if ((m[r / 64] >> (r % 64)) & 1u) out.push_back(shape.unrank(r));
    visit(out);
  };
  walk<W>(plan, 0, Words<W>{}, leaf);
  return produced;
}

template <int W = 1>
DownsetCensus census_dispatch(const Shape& shape, bool maximal, const EnumerationLimits& limits, std::size_t words) {
  if constexpr (W <= 16) {
    if (static_cast<std::size_t>(W) == words) return census_impl<W>(shape, maximal, limits);
    return census_dispatch<W + 1>(shape, maximal, limits, words);
  } else {
    throw PreconditionError("shape too large for down-set enumeration");
  }
}

template <int W = 1>
std::uint64_t enumerate_dispatch(const Shape& shape, const std::function<void(const Antichain&)>& visit,
                                 std::uint64_t max_items, std::size_t words) {
  if constexpr (W <= 16) {
    if (static_cast<std::size_t>(W) == words) return enumerate_impl<W>(shape, visit, max_items);
    return enumerate_dispatch<W + 1>(shape, visit, max_items, words);
  } else {
    throw PreconditionError("shape too large for down-set enumeration");
  }
}

std::size_t words_for(const Shape& shape) {
  std::size_t n = shape.size();
  if (n > kMaxEnumerableSize)
    throw PreconditionError("down-set enumeration supports at most " + std::to_string(kMaxEnumerableSize) + " elements");
  return (n + 63) / 64;
}

}  // namespace

std::uint64_t enumerate_downsets(const Shape& shape, const std::function<void(const Antichain&)>& visit,
                                 std::uint64_t max_items) {
  return enumerate_dispatch(shape, visit, max_items, words_for(shape));
}

DownsetCensus census_downsets(const Shape& shape, bool maximal, const EnumerationLimits& limits) {
  return census_dispatch(shape, maximal, limits, words_for(shape));
}

}  // namespace trinb
