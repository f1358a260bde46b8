#include "trinb/partition.hpp"

#include <algorithm>
#include <numeric>

#include "trinb/error.hpp"

namespace trinb {

TwofoldPartition::TwofoldPartition(Shape shape) : shape_(std::move(shape)), satisfactory_(shape_.size()) {}

TwofoldPartition TwofoldPartition::from_satisfactory(Shape shape, std::span<const Alternative> satisfactory) {
  TwofoldPartition p(std::move(shape));
  for (const auto& x : satisfactory) p.satisfactory_.set(p.shape_.rank(x));
  return p;
}

TwofoldPartition TwofoldPartition::from_predicate(Shape shape, const std::function<bool(const Alternative&)>& in_a) {
  TwofoldPartition p(std::move(shape));
  for (std::size_t r = 0; r < p.shape_.size(); ++r)
    if (in_a(p.shape_.unrank(r))) p.satisfactory_.set(r);
  return p;
}

TwofoldPartition TwofoldPartition::from_bits(Shape shape, const Bits& satisfactory) {
  TwofoldPartition p(std::move(shape));
  if (satisfactory.size() != p.shape_.size()) throw DimensionMismatch("bit set size does not match the shape");
  p.satisfactory_ = satisfactory;
  return p;
}

std::vector<Alternative> TwofoldPartition::satisfactory_set() const {
  std::vector<Alternative> out;
  satisfactory_.for_each([&](std::size_t r) { out.push_back(shape_.unrank(r)); });
  return out;
}

std::vector<Alternative> TwofoldPartition::unsatisfactory_set() const {
  std::vector<Alternative> out;
  unsatisfactory_bits().for_each([&](std::size_t r) { out.push_back(shape_.unrank(r)); });
  return out;
}

TwofoldPartition TwofoldPartition::swapped() const {
  TwofoldPartition p = *this;
  p.satisfactory_ = satisfactory_.complement();
  return p;
}

namespace {

void require_attribute(const TwofoldPartition& p, int i) {
  if (i < 0 || i >= p.shape().attributes())
    throw DimensionMismatch("attribute index " + std::to_string(i + 1) + " out of range");
}

// Ranks of the contexts a_{-i}, i.e. of the alternatives whose i-th level is 0.
std::vector<std::size_t> contexts(const Shape& shape, int i) {
  std::vector<std::size_t> out;
  const std::size_t stride = shape.stride(i);
  const std::size_t block = stride * static_cast<std::size_t>(shape.levels(i));
  for (std::size_t hi = 0; hi < shape.size(); hi += block)
    for (std::size_t lo = 0; lo < stride; ++lo) out.push_back(hi + lo);
  return out;
}

}  // namespace

bool is_influential(const TwofoldPartition& p, int attribute) {
  require_attribute(p, attribute);
  const Shape& s = p.shape();
  const std::size_t stride = s.stride(attribute);
  for (std::size_t a : contexts(s, attribute)) {
    bool seen_a = false, seen_u = false;
    for (int l = 0; l < s.levels(attribute); ++l) {
      (p.satisfactory(a + static_cast<std::size_t>(l) * stride) ? seen_a : seen_u) = true;
    }
    if (seen_a && seen_u) return true;
  }
  return false;
}

std::optional<LinearityViolation> find_linearity_violation(const TwofoldPartition& p, int attribute,
                                                           Category category) {
  require_attribute(p, attribute);
  const Shape& s = p.shape();
  const std::size_t stride = s.stride(attribute);
  const auto ctx = contexts(s, attribute);
  const int m = s.levels(attribute);
  auto in = [&](int level, std::size_t a) { return p.at_rank(a + static_cast<std::size_t>(level) * stride) == category; };
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x == y) continue;
      for (std::size_t a : ctx) {
        if (!in(x, a) || in(y, a)) continue;
        for (std::size_t b : ctx) {
          if (in(y, b) && !in(x, b)) {
            auto alt = [&](int level, std::size_t c) { return s.unrank(c + static_cast<std::size_t>(level) * stride); };
            return LinearityViolation{attribute, alt(x, a), alt(y, b), alt(y, a), alt(x, b)};
          }
        }
      }
    }
  return std::nullopt;
}

std::optional<LinearityViolation> find_linearity_violation(const TwofoldPartition& p) {
  for (int i = 0; i < p.shape().attributes(); ++i)
    if (auto v = find_linearity_violation(p, i)) return v;
  return std::nullopt;
}

bool is_linear_on(const TwofoldPartition& p, int attribute) {
  return !find_linearity_violation(p, attribute).has_value();
}

bool is_linear(const TwofoldPartition& p) { return !find_linearity_violation(p).has_value(); }

std::string describe(const LinearityViolation& v, const Shape& shape) {
  return "attribute " + std::to_string(v.attribute + 1) + ": " + to_string(v.x_with_a, shape) + " in A, " +
         to_string(v.y_with_b, shape) + " in A, " + to_string(v.y_with_a, shape) + " in U, " +
         to_string(v.x_with_b, shape) + " in U";
}

TraceOrder trace(const TwofoldPartition& p, int attribute) {
  require_attribute(p, attribute);
  const Shape& s = p.shape();
  const int m = s.levels(attribute);
  const std::size_t stride = s.stride(attribute);
  const auto ctx = contexts(s, attribute);

  // slice[l] = contexts a with (l, a) in A
  std::vector<Bits> slice(static_cast<std::size_t>(m), Bits(ctx.size()));
  for (int l = 0; l < m; ++l)
    for (std::size_t c = 0; c < ctx.size(); ++c)
      if (p.satisfactory(ctx[c] + static_cast<std::size_t>(l) * stride)) slice[static_cast<std::size_t>(l)].set(c);

  TraceOrder t;
  t.attribute = attribute;
  t.levels = m;
  t.at_least.assign(static_cast<std::size_t>(m * m), 0);
  t.complete = true;
  for (int l = 0; l < m; ++l)
    for (int k = 0; k < m; ++k) {
      bool ge = slice[static_cast<std::size_t>(k)].subset_of(slice[static_cast<std::size_t>(l)]);
      t.at_least[static_cast<std::size_t>(l * m + k)] = ge;
    }
  for (int l = 0; l < m; ++l)
    for (int k = 0; k < m; ++k)
      if (!t.weakly_better(l, k) && !t.weakly_better(k, l)) t.complete = false;

  std::vector<bool> placed(static_cast<std::size_t>(m), false);
  for (int l = 0; l < m; ++l) {
    if (placed[static_cast<std::size_t>(l)]) continue;
    std::vector<int> cls;
    for (int k = l; k < m; ++k)
      if (t.weakly_better(l, k) && t.weakly_better(k, l)) {
        cls.push_back(k);
        placed[static_cast<std::size_t>(k)] = true;
      }
    t.classes.push_back(std::move(cls));
  }
  if (t.complete) {
    // Worst class first: fewer levels below it.
    auto below = [&](const std::vector<int>& c) {
      int n = 0;
      for (int k = 0; k < m; ++k) n += t.weakly_better(c.front(), k);
      return n;
    };
    std::stable_sort(t.classes.begin(), t.classes.end(),
                     [&](const auto& a, const auto& b) { return below(a) < below(b); });
  }
  return t;
}

std::string describe(const TraceOrder& t) {
  auto cls = [](const std::vector<int>& c) {
    std::string s;
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? " ~ " : "") + std::to_string(c[k]);
    return s;
  };
  std::string out;
  if (t.complete) {
    for (std::size_t k = t.classes.size(); k-- > 0;) out += cls(t.classes[k]) + (k ? " > " : "");
    return out;
  }
  for (int l = 0; l < t.levels; ++l)
    for (int k = 0; k < t.levels; ++k)
      if (t.strictly_better(l, k)) out += (out.empty() ? "" : ", ") + std::to_string(l) + " > " + std::to_string(k);
  return out.empty() ? "(no strict pairs)" : out;
}

bool is_monotone(const TwofoldPartition& p) {
  const Shape& s = p.shape();
  bool ok = true;
  p.satisfactory_bits().for_each([&](std::size_t r) {
    if (!ok) return;
    Alternative x = s.unrank(r);
    for (int i = 0; i < s.attributes(); ++i)
      if (x[i] + 1 < s.levels(i) && !p.satisfactory(r + s.stride(i))) ok = false;
  });
  return ok;
}

bool is_canonical(const TwofoldPartition& p) {
  if (!is_monotone(p)) return false;
  const Shape& s = p.shape();
  for (int i = 0; i < s.attributes(); ++i) {
    if (s.levels(i) < 2) return false;
    TraceOrder t = trace(p, i);
    for (int l = 1; l < s.levels(i); ++l)
      if (!t.strictly_better(l, l - 1)) return false;
  }
  return true;
}

bool Canonicalization::identity() const {
  for (std::size_t k = 0; k < kept_attributes.size(); ++k) {
    if (kept_attributes[k] != static_cast<int>(k)) return false;
    for (std::size_t l = 0; l < level_maps[k].size(); ++l)
      if (level_maps[k][l] != static_cast<int>(l)) return false;
  }
  return static_cast<int>(kept_attributes.size()) == partition.shape().attributes() &&
         kept_attributes.size() == level_maps.size();
}

Canonicalization canonicalize(const TwofoldPartition& p) {
  const Shape& s = p.shape();
  if (auto v = find_linearity_violation(p))
    throw PreconditionError("cannot canonicalize a non-linear partition (" + describe(*v, s) + ")");

  Canonicalization out;
  std::vector<int> dims;
  std::vector<std::vector<int>> representative;  // canonical level -> an original level
  for (int i = 0; i < s.attributes(); ++i) {
    TraceOrder t = trace(p, i);
    if (t.classes.size() < 2) continue;  // not influential
    std::vector<int> map(static_cast<std::size_t>(s.levels(i)), 0);
    std::vector<int> reps;
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
      for (int l : t.classes[c]) map[static_cast<std::size_t>(l)] = static_cast<int>(c);
      reps.push_back(t.classes[c].front());
    }
    out.kept_attributes.push_back(i);
    out.level_maps.push_back(std::move(map));
    representative.push_back(std::move(reps));
    dims.push_back(static_cast<int>(t.classes.size()));
  }
  if (dims.empty()) throw PreconditionError("partition has no influential attribute");

  Shape canon(dims);
  out.partition = TwofoldPartition(canon);
  for (std::size_t r = 0; r < canon.size(); ++r) {
    Alternative y = canon.unrank(r);
    Alternative x = s.bottom();
    for (std::size_t k = 0; k < out.kept_attributes.size(); ++k)
      x[out.kept_attributes[k]] = representative[k][static_cast<std::size_t>(y[static_cast<int>(k)])];
    out.partition.assign(r, p.at(x));
  }
  return out;
}

namespace {

void require_monotone(const TwofoldPartition& p, const char* what) {
  if (!is_monotone(p))
    throw PreconditionError(std::string(what) +
                            " needs a partition whose satisfactory set is an up-set (canonicalize it first)");
}

}  // namespace

Antichain a_star(const TwofoldPartition& p) {
  require_monotone(p, "A*");
  const Shape& s = p.shape();
  Antichain out;
  p.satisfactory_bits().for_each([&](std::size_t r) {
    Alternative x = s.unrank(r);
    for (int i = 0; i < s.attributes(); ++i)
      if (x[i] > 0 && p.satisfactory(r - s.stride(i))) return;
    out.push_back(std::move(x));
  });
  return out;
}

Antichain u_star(const TwofoldPartition& p) {
  require_monotone(p, "U*");
  const Shape& s = p.shape();
  Antichain out;
  p.unsatisfactory_bits().for_each([&](std::size_t r) {
    Alternative x = s.unrank(r);
    for (int i = 0; i < s.attributes(); ++i)
      if (x[i] + 1 < s.levels(i) && !p.satisfactory(r + s.stride(i))) return;
    out.push_back(std::move(x));
  });
  return out;
}

}  // namespace trinb
