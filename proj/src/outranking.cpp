#include "trinb/outranking.hpp"

#include <algorithm>
#include <bit>

#include "trinb/error.hpp"

namespace trinb {

ThresholdSemiorder ThresholdSemiorder::identity(int levels) {
  ThresholdSemiorder s;
  for (int l = 0; l < levels; ++l) s.threshold.push_back(l - 1);
  return s;
}

bool ThresholdSemiorder::is_identity() const {
  for (int l = 0; l < levels(); ++l)
    if (threshold[static_cast<std::size_t>(l)] != l - 1) return false;
  return true;
}

int ThresholdSemiorder::strict_pairs() const {
  int n = 0;
  for (int t : threshold) n += t + 1;
  return n;
}

bool ThresholdSemiorder::induces_chain() const {
  for (int l = 1; l < levels(); ++l) {
    const auto sl = static_cast<std::size_t>(l);
    if (threshold[sl] > threshold[sl - 1]) continue;
    if (std::find(threshold.begin(), threshold.end(), l - 1) != threshold.end()) continue;
    return false;
  }
  return true;
}

VetoRelation VetoRelation::none(int levels) {
  return VetoRelation{std::vector<int>(static_cast<std::size_t>(levels), -1)};
}

bool VetoRelation::empty() const {
  return std::all_of(threshold.begin(), threshold.end(), [](int v) { return v < 0; });
}

int VetoRelation::veto_pairs() const {
  int n = 0;
  for (int v : threshold) n += std::max(v + 1, 0);
  return n;
}

CoalitionFamily::CoalitionFamily(int attributes, std::vector<std::uint32_t> generators) : attributes_(attributes) {
  if (attributes < 1 || attributes > kMaxAttributes)
    throw PreconditionError("coalition families support 1.." + std::to_string(kMaxAttributes) + " attributes");
  const std::uint32_t size = std::uint32_t{1} << attributes;
  member_.assign(size, 0);
  for (std::uint32_t g : generators) {
    if (g >= size) throw DimensionMismatch("coalition mentions an attribute beyond n");
    member_[g] = 1;
  }
  for (std::uint32_t c = 0; c < size; ++c) {
    if (member_[c]) continue;
    for (std::uint32_t rest = c; rest; rest &= rest - 1) {
      if (member_[c & ~(rest & (~rest + 1))]) {
        member_[c] = 1;
        break;
      }
    }
  }
  for (std::uint32_t c = 0; c < size; ++c) {
    if (!member_[c]) continue;
    bool minimal = true;
    for (std::uint32_t rest = c; rest && minimal; rest &= rest - 1)
      if (member_[c & ~(rest & (~rest + 1))]) minimal = false;
    if (minimal) minimal_.push_back(c);
  }
  std::sort(minimal_.begin(), minimal_.end(), [](std::uint32_t a, std::uint32_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    // lexicographic on ascending member lists
    const std::uint32_t diff = a ^ b;
    const std::uint32_t low = diff & (~diff + 1);
    return (a & low) != 0;
  });
}

CoalitionFamily CoalitionFamily::unanimity(int attributes) {
  return CoalitionFamily(attributes, {(std::uint32_t{1} << attributes) - 1});
}

kernels::CoalitionTable CoalitionFamily::kernel_table() const {
  if (attributes_ > kernels::kMaxAttributes) throw PreconditionError("kernel coalition table needs n <= 8");
  kernels::CoalitionTable t{};
  for (std::uint32_t c = 0; c < member_.size(); ++c)
    if (member_[c]) t[c >> 6] |= std::uint64_t{1} << (c & 63);
  return t;
}

std::string coalition_to_string(std::uint32_t coalition, int attributes) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < attributes; ++i)
    if (coalition >> i & 1u) {
      s += (first ? "" : ",") + std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

std::string to_string(const CoalitionFamily& f) {
  std::string s = "{";
  for (std::size_t k = 0; k < f.minimal().size(); ++k)
    s += (k ? ", " : "") + coalition_to_string(f.minimal()[k], f.attributes());
  return s + "}";
}

OutrankingSpec OutrankingSpec::plain(const Shape& shape) {
  OutrankingSpec s;
  s.shape = shape;
  for (int i = 0; i < shape.attributes(); ++i) {
    s.semiorders.push_back(ThresholdSemiorder::identity(shape.levels(i)));
    s.vetoes.push_back(VetoRelation::none(shape.levels(i)));
  }
  s.coalitions = CoalitionFamily::unanimity(shape.attributes());
  return s;
}

Alternative reverse_levels(const Alternative& x, const Shape& shape) {
  shape.require(x);
  Alternative r = x;
  for (int i = 0; i < x.size(); ++i) r[i] = shape.levels(i) - 1 - x[i];
  return r;
}

TwofoldPartition reverse_levels(const TwofoldPartition& p) {
  const Shape& shape = p.shape();
  return TwofoldPartition::from_predicate(shape, [&](const Alternative& x) {
    return p.at(reverse_levels(x, shape)) == Category::A;
  });
}

OutrankingSpec reverse_levels(const OutrankingSpec& spec) {
  if (!spec.identity_semiorders() || !spec.no_vetoes())
    throw PreconditionError("level reversal needs identity semiorders and no vetoes");
  OutrankingSpec r = spec;
  for (auto& p : r.profiles) p = reverse_levels(p, spec.shape);
  r.profiles = sorted_unique(std::move(r.profiles));
  return r;
}

bool OutrankingSpec::no_vetoes() const {
  return std::all_of(vetoes.begin(), vetoes.end(), [](const VetoRelation& v) { return v.empty(); });
}

bool OutrankingSpec::identity_semiorders() const {
  return std::all_of(semiorders.begin(), semiorders.end(), [](const ThresholdSemiorder& s) { return s.is_identity(); });
}

std::string describe(const OutrankingSpec& spec) {
  auto list = [](const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
  };
  std::string out;
  for (std::size_t i = 0; i < spec.semiorders.size(); ++i) {
    out += "attribute " + std::to_string(i + 1) + ": t=" +
           (spec.semiorders[i].is_identity() ? std::string("identity") : list(spec.semiorders[i].threshold));
    if (i < spec.vetoes.size() && !spec.vetoes[i].empty()) out += " v=" + list(spec.vetoes[i].threshold);
    out += "; ";
  }
  out += "F = " + to_string(spec.coalitions) + "; P = " + to_string(spec.profiles, spec.shape);
  return out;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::string s;
  for (const auto& v : violations) s += (s.empty() ? "" : "; ") + v;
  return s;
}

namespace {

bool structurally_sound(const OutrankingSpec& spec, ValidationReport& r) {
  const int n = spec.shape.attributes();
  bool sound = true;
  auto fail = [&](std::string msg) {
    r.violations.push_back(std::move(msg));
    sound = false;
  };
  if (n < 1) fail("shape has no attributes");
  if (static_cast<int>(spec.semiorders.size()) != n) fail("expected one semiorder per attribute");
  if (static_cast<int>(spec.vetoes.size()) != n) fail("expected one veto relation per attribute");
  if (spec.coalitions.attributes() != n) fail("coalition family is over the wrong number of attributes");
  if (!sound) return false;
  for (int i = 0; i < n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    const std::string who = "attribute " + std::to_string(i + 1);
    if (spec.semiorders[si].levels() != spec.shape.levels(i)) fail(who + ": threshold map has the wrong length");
    if (spec.vetoes[si].levels() != spec.shape.levels(i)) fail(who + ": veto map has the wrong length");
  }
  for (const auto& p : spec.profiles)
    if (!spec.shape.conforms(p)) fail("profile does not conform to the shape");
  return sound;
}

}  // namespace

ValidationReport validate_spec(const OutrankingSpec& spec) {
  ValidationReport r;
  if (!structurally_sound(spec, r)) return r;
  const int n = spec.shape.attributes();
  for (int i = 0; i < n; ++i) {
    const auto& t = spec.semiorders[static_cast<std::size_t>(i)].threshold;
    const auto& v = spec.vetoes[static_cast<std::size_t>(i)].threshold;
    const std::string who = "attribute " + std::to_string(i + 1);
    for (int l = 0; l < static_cast<int>(t.size()); ++l) {
      const auto sl = static_cast<std::size_t>(l);
      if (t[sl] < -1 || t[sl] >= l)
        r.violations.push_back(who + ": threshold t(" + std::to_string(l) + ") = " + std::to_string(t[sl]) +
                               " outside -1.." + std::to_string(l - 1));
      if (l > 0 && t[sl] < t[sl - 1])
        r.violations.push_back(who + ": threshold map decreases at level " + std::to_string(l));
      if (v[sl] < -1 || v[sl] > t[sl])
        r.violations.push_back(who + ": veto v(" + std::to_string(l) + ") = " + std::to_string(v[sl]) +
                               " not within -1..t(" + std::to_string(l) + ") (V must be included in P)");
      if (l > 0 && v[sl] < v[sl - 1])
        r.violations.push_back(who + ": veto map decreases at level " + std::to_string(l));
    }
  }
  if (!spec.coalitions.contains(spec.coalitions.full())) r.violations.push_back("N is not a winning coalition");
  if (spec.coalitions.contains(0)) r.violations.push_back("the empty coalition is winning");
  if (spec.profiles.empty()) r.violations.push_back("no profiles");
  if (!r.ok()) return r;
  for (const auto& p : spec.profiles)
    for (const auto& q : spec.profiles)
      if (strictly_outranks(p, q, spec))
        r.violations.push_back("profiles " + to_string(p, spec.shape) + " P " + to_string(q, spec.shape));
  return r;
}

void require_valid(const OutrankingSpec& spec) {
  auto r = validate_spec(spec);
  if (!r.ok()) throw PreconditionError("invalid spec: " + r.to_string());
}

std::uint32_t concordance(const Alternative& x, const Alternative& y, const OutrankingSpec& spec) {
  spec.shape.require(x);
  spec.shape.require(y);
  std::uint32_t c = 0;
  for (int i = 0; i < spec.shape.attributes(); ++i)
    if (spec.semiorders[static_cast<std::size_t>(i)].at_least(x[i], y[i])) c |= std::uint32_t{1} << i;
  return c;
}

std::uint32_t discordance(const Alternative& y, const Alternative& x, const OutrankingSpec& spec) {
  spec.shape.require(x);
  spec.shape.require(y);
  std::uint32_t c = 0;
  for (int i = 0; i < spec.shape.attributes(); ++i)
    if (spec.vetoes[static_cast<std::size_t>(i)].vetoes(y[i], x[i])) c |= std::uint32_t{1} << i;
  return c;
}

bool outranks(const Alternative& x, const Alternative& y, const OutrankingSpec& spec) {
  return spec.coalitions.contains(concordance(x, y, spec)) && discordance(y, x, spec) == 0;
}

bool strictly_outranks(const Alternative& x, const Alternative& y, const OutrankingSpec& spec) {
  return outranks(x, y, spec) && !outranks(y, x, spec);
}

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::pc: return "pc";
    case Rule::pd: return "pd";
    case Rule::dual: return "dual";
  }
  return "?";
}

std::optional<Rule> parse_rule(std::string_view text) {
  if (text == "pc") return Rule::pc;
  if (text == "pd") return Rule::pd;
  if (text == "dual") return Rule::dual;
  return std::nullopt;
}

Category assign_pc(const Alternative& x, const OutrankingSpec& spec) {
  bool some = false;
  for (const auto& p : spec.profiles) {
    if (strictly_outranks(p, x, spec)) return Category::U;
    some = some || outranks(x, p, spec);
  }
  return some ? Category::A : Category::U;
}

Category assign_pd(const Alternative& x, const OutrankingSpec& spec) {
  bool some = false;
  for (const auto& p : spec.profiles) {
    if (strictly_outranks(x, p, spec)) return Category::A;
    some = some || strictly_outranks(p, x, spec);
  }
  return some ? Category::U : Category::A;
}

Category assign_dual(const Alternative& x, const OutrankingSpec& spec) {
  bool some = false;
  for (const auto& p : spec.profiles) {
    if (strictly_outranks(x, p, spec)) return Category::A;
    some = some || outranks(p, x, spec);
  }
  return some ? Category::U : Category::A;
}

Category assign(const Alternative& x, const OutrankingSpec& spec, Rule rule) {
  switch (rule) {
    case Rule::pc: return assign_pc(x, spec);
    case Rule::pd: return assign_pd(x, spec);
    case Rule::dual: return assign_dual(x, spec);
  }
  return Category::U;
}

Bits ReferenceRelation::ref_P_alt() const {
  Bits b = ref_S_alt;
  return b.subtract(alt_S_ref);
}

Bits ReferenceRelation::alt_P_ref() const {
  Bits b = alt_S_ref;
  return b.subtract(ref_S_alt);
}

RelationEngine::RelationEngine(const Shape& shape, const std::vector<ThresholdSemiorder>& semiorders,
                               const std::vector<VetoRelation>& vetoes, const kernels::KernelSet& kernels)
    : shape_(shape), semiorders_(semiorders), vetoes_(vetoes), kernels_(&kernels) {
  const int n = shape.attributes();
  if (static_cast<int>(semiorders.size()) != n || static_cast<int>(vetoes.size()) != n)
    throw DimensionMismatch("expected one semiorder and one veto relation per attribute");
  vectorized_ = n <= kernels::kMaxAttributes &&
                std::all_of(shape.dims().begin(), shape.dims().end(), [](int m) { return m <= kernels::kMaxLevels; });
  if (!vectorized_) return;
  const std::size_t size = shape.size();
  columns_.assign(static_cast<std::size_t>(n), std::vector<std::uint8_t>(size));
  for (std::size_t r = 0; r < size; ++r) {
    Alternative x = shape.unrank(r);
    for (int i = 0; i < n; ++i) columns_[static_cast<std::size_t>(i)][r] = static_cast<std::uint8_t>(x[i]);
  }
  for (int i = 0; i < n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    for (int l = 0; l < kernels::kMaxLevels; ++l) {
      const auto sl = static_cast<std::size_t>(l);
      const bool real = l < shape.levels(i);
      tables_.threshold[si][sl] = static_cast<std::int8_t>(real ? semiorders[si].threshold[sl] : -1);
      tables_.veto[si][sl] = static_cast<std::int8_t>(real ? vetoes[si].threshold[sl] : -1);
    }
  }
}

RelationEngine::Masks RelationEngine::masks(const Alternative& y) const {
  if (!vectorized_) throw PreconditionError("masks are only available on the vectorized path");
  shape_.require(y);
  const std::size_t size = shape_.size();
  Masks m;
  m.ref_over_alt.resize(size);
  m.alt_over_ref.resize(size);
  m.ref_vetoes_alt.resize(size);
  m.alt_vetoes_ref.resize(size);
  kernels::LevelColumns cols;
  cols.attributes = shape_.attributes();
  cols.count = size;
  kernels::Reference ref;
  for (int i = 0; i < shape_.attributes(); ++i) {
    const auto si = static_cast<std::size_t>(i);
    cols.column[si] = columns_[si].data();
    ref.level[si] = static_cast<std::int8_t>(y[i]);
    ref.threshold[si] = static_cast<std::int8_t>(semiorders_[si].threshold[static_cast<std::size_t>(y[i])]);
    ref.veto[si] = static_cast<std::int8_t>(vetoes_[si].threshold[static_cast<std::size_t>(y[i])]);
  }
  kernels_->masks(cols, tables_, ref,
                  {m.ref_over_alt.data(), m.alt_over_ref.data(), m.ref_vetoes_alt.data(), m.alt_vetoes_ref.data()});
  return m;
}

ReferenceRelation RelationEngine::relate(const Masks& m, const CoalitionFamily& f) const {
  const std::size_t size = shape_.size();
  ReferenceRelation rel{Bits(size), Bits(size)};
  kernels_->outrank({m.ref_over_alt.data(), m.alt_over_ref.data(), m.ref_vetoes_alt.data(), m.alt_vetoes_ref.data()},
                    size, f.kernel_table(), rel.ref_S_alt.data(), rel.alt_S_ref.data());
  return rel;
}

ReferenceRelation RelationEngine::relate(const Alternative& y, const CoalitionFamily& f) const {
  if (vectorized_) return relate(masks(y), f);
  shape_.require(y);
  const std::size_t size = shape_.size();
  const int n = shape_.attributes();
  ReferenceRelation rel{Bits(size), Bits(size)};
  for (std::size_t r = 0; r < size; ++r) {
    Alternative x = shape_.unrank(r);
    std::uint32_t yx = 0, xy = 0, veto_yx = 0, veto_xy = 0;
    for (int i = 0; i < n; ++i) {
      const auto si = static_cast<std::size_t>(i);
      const std::uint32_t bit = std::uint32_t{1} << i;
      if (semiorders_[si].at_least(y[i], x[i])) yx |= bit;
      if (semiorders_[si].at_least(x[i], y[i])) xy |= bit;
      if (vetoes_[si].vetoes(y[i], x[i])) veto_yx |= bit;
      if (vetoes_[si].vetoes(x[i], y[i])) veto_xy |= bit;
    }
    if (f.contains(yx) && veto_xy == 0) rel.ref_S_alt.set(r);
    if (f.contains(xy) && veto_yx == 0) rel.alt_S_ref.set(r);
  }
  return rel;
}

Bits combine_rule(const std::vector<ReferenceRelation>& profiles, Rule rule, std::size_t size) {
  Bits first(size), blocked(size);
  for (const auto& p : profiles) {
    switch (rule) {
      case Rule::pc:
        first |= p.alt_S_ref;
        blocked |= p.ref_P_alt();
        break;
      case Rule::pd:
        first |= p.ref_P_alt();
        blocked |= p.alt_P_ref();
        break;
      case Rule::dual:
        first |= p.ref_S_alt;
        blocked |= p.alt_P_ref();
        break;
    }
  }
  first.subtract(blocked);
  return rule == Rule::pc ? first : first.complement();
}

TwofoldPartition induced_partition(const OutrankingSpec& spec, Rule rule, const kernels::KernelSet& kernels) {
  RelationEngine engine(spec.shape, spec.semiorders, spec.vetoes, kernels);
  std::vector<ReferenceRelation> rows;
  rows.reserve(spec.profiles.size());
  for (const auto& p : spec.profiles) rows.push_back(engine.relate(p, spec.coalitions));
  return TwofoldPartition::from_bits(spec.shape, combine_rule(rows, rule, spec.shape.size()));
}

OutrankingCache::OutrankingCache(const OutrankingSpec& spec) {
  RelationEngine engine(spec.shape, spec.semiorders, spec.vetoes);
  const std::size_t size = spec.shape.size();
  rows_.reserve(size);
  for (std::size_t r = 0; r < size; ++r) rows_.push_back(engine.relate(spec.shape.unrank(r), spec.coalitions));
}

}  // namespace trinb
