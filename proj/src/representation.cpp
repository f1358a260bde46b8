#include "trinb/representation.hpp"

#include <algorithm>
#include <bit>

#include "trinb/error.hpp"

namespace trinb {

std::string_view to_string(ModelClass c) {
  switch (c) {
    case ModelClass::E: return "E";
    case ModelClass::E_c: return "E_c";
    case ModelClass::E_u: return "E_u";
    case ModelClass::E_u_bar: return "E_u_bar";
    case ModelClass::F: return "F";
    case ModelClass::F_c: return "F_c";
    case ModelClass::F_u: return "F_u";
    case ModelClass::F_u_bar: return "F_u_bar";
  }
  return "?";
}

std::optional<ModelClass> parse_model_class(std::string_view text) {
  for (ModelClass c : {ModelClass::E, ModelClass::E_c, ModelClass::E_u, ModelClass::E_u_bar, ModelClass::F,
                       ModelClass::F_c, ModelClass::F_u, ModelClass::F_u_bar})
    if (to_string(c) == text) return c;
  return std::nullopt;
}

bool is_pseudo_disjunctive(ModelClass c) {
  return c == ModelClass::F || c == ModelClass::F_c || c == ModelClass::F_u || c == ModelClass::F_u_bar;
}

Rule rule_of(ModelClass c) { return is_pseudo_disjunctive(c) ? Rule::pd : Rule::pc; }

bool satisfies_class(const OutrankingSpec& spec, ModelClass c) {
  switch (c) {
    case ModelClass::E:
    case ModelClass::F: return true;
    case ModelClass::E_c:
    case ModelClass::F_c: return spec.no_vetoes();
    case ModelClass::E_u:
    case ModelClass::F_u: return spec.no_vetoes() && spec.coalitions.is_unanimity();
    case ModelClass::E_u_bar:
    case ModelClass::F_u_bar: return spec.no_vetoes() && spec.coalitions.is_unanimity() && spec.identity_semiorders();
  }
  return false;
}

namespace {

void require_analyzable(const TwofoldPartition& p, const char* what) {
  if (auto v = find_linearity_violation(p))
    throw PreconditionError(std::string(what) + ": partition is not linear (" + describe(*v, p.shape()) + ")");
  if (!is_monotone(p))
    throw PreconditionError(std::string(what) + ": partition is linear but not in canonical orientation; canonicalize it first");
}

}  // namespace

OutrankingSpec canonical_eu(const TwofoldPartition& p) {
  require_analyzable(p, "canonical_eu");
  OutrankingSpec s = OutrankingSpec::plain(p.shape());
  s.profiles = a_star(p);
  return s;
}

OutrankingSpec canonical_dual(const TwofoldPartition& p) {
  require_analyzable(p, "canonical_dual");
  if (p.satisfactory_count() == p.shape().size()) throw PreconditionError("canonical_dual: U is empty");
  OutrankingSpec s = OutrankingSpec::plain(p.shape());
  s.profiles = u_star(p);
  return s;
}

OutrankingSpec binary_fc(const TwofoldPartition& p) {
  const Shape& shape = p.shape();
  for (int i = 0; i < shape.attributes(); ++i)
    if (shape.levels(i) != 2)
      throw PreconditionError("binary_fc: attribute " + std::to_string(i + 1) + " is not binary");
  require_analyzable(p, "binary_fc");
  std::vector<std::uint32_t> generators;
  p.satisfactory_bits().for_each([&](std::size_t r) {
    Alternative x = shape.unrank(r);
    std::uint32_t c = 0;
    for (int i = 0; i < shape.attributes(); ++i)
      if (x[i] == 1) c |= std::uint32_t{1} << i;
    generators.push_back(c);
  });
  OutrankingSpec s = OutrankingSpec::plain(shape);
  s.coalitions = CoalitionFamily(shape.attributes(), std::move(generators));
  s.profiles = {shape.top()};
  return s;
}

FuUnderlineVerdict fu_underline_representable(const TwofoldPartition& p) {
  require_analyzable(p, "fu_underline_representable");
  FuUnderlineVerdict v;
  Antichain a = a_star(p);
  if (a.empty() || !is_maximal_antichain(a, p.shape())) return v;
  v.representable = true;
  OutrankingSpec s = OutrankingSpec::plain(p.shape());
  s.profiles = std::move(a);
  v.witness = std::move(s);
  return v;
}

std::string_view to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::found: return "found";
    case SearchOutcome::none: return "none";
    case SearchOutcome::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

std::vector<ThresholdSemiorder> all_semiorders(int levels) {
  std::vector<ThresholdSemiorder> out;
  std::vector<int> t(static_cast<std::size_t>(levels));
  auto rec = [&](auto&& self, int l) -> void {
    if (l == levels) {
      out.push_back(ThresholdSemiorder{t});
      return;
    }
    const int lo = l == 0 ? -1 : t[static_cast<std::size_t>(l - 1)];
    for (int v = lo; v <= l - 1; ++v) {
      t[static_cast<std::size_t>(l)] = v;
      self(self, l + 1);
    }
  };
  if (levels > 0) rec(rec, 0);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.strict_pairs() != b.strict_pairs()) return a.strict_pairs() < b.strict_pairs();
    return a.threshold < b.threshold;
  });
  return out;
}

std::vector<VetoRelation> all_vetoes(const ThresholdSemiorder& s) {
  std::vector<VetoRelation> out;
  const int levels = s.levels();
  std::vector<int> v(static_cast<std::size_t>(levels));
  auto rec = [&](auto&& self, int l) -> void {
    if (l == levels) {
      out.push_back(VetoRelation{v});
      return;
    }
    const int lo = l == 0 ? -1 : v[static_cast<std::size_t>(l - 1)];
    for (int w = lo; w <= s.threshold[static_cast<std::size_t>(l)]; ++w) {
      v[static_cast<std::size_t>(l)] = w;
      self(self, l + 1);
    }
  };
  if (levels > 0) rec(rec, 0);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.veto_pairs() != b.veto_pairs()) return a.veto_pairs() < b.veto_pairs();
    return a.threshold < b.threshold;
  });
  return out;
}

std::vector<CoalitionFamily> all_coalition_families(int attributes) {
  if (attributes < 1 || attributes > 5)
    throw PreconditionError("coalition family enumeration supports 1..5 attributes");
  Shape cube(std::vector<int>(static_cast<std::size_t>(attributes), 2));
  std::vector<CoalitionFamily> out;
  const std::uint32_t full = (std::uint32_t{1} << attributes) - 1;
  // Up-sets of 2^N are complements of down-sets; the minimal elements of the
  // up-set are the minimal elements of the complement.
  enumerate_downsets(cube, [&](const Antichain& maximal) {
    Bits down = down_closure(maximal, cube);
    std::vector<std::uint32_t> generators;
    bool has_empty = false, has_full = false;
    for (std::size_t r = 0; r < cube.size(); ++r) {
      if (down.test(r)) continue;
      Alternative x = cube.unrank(r);
      std::uint32_t c = 0;
      for (int i = 0; i < attributes; ++i)
        if (x[i]) c |= std::uint32_t{1} << i;
      has_empty = has_empty || c == 0;
      has_full = has_full || c == full;
      generators.push_back(c);
    }
    if (has_full && !has_empty) out.emplace_back(attributes, std::move(generators));
  });
  auto key_less = [](std::uint32_t a, std::uint32_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    const std::uint32_t diff = a ^ b;
    return (a & diff & (~diff + 1)) != 0;
  };
  std::sort(out.begin(), out.end(), [&](const CoalitionFamily& a, const CoalitionFamily& b) {
    if (a.minimal().size() != b.minimal().size()) return a.minimal().size() < b.minimal().size();
    return std::lexicographical_compare(a.minimal().begin(), a.minimal().end(), b.minimal().begin(),
                                        b.minimal().end(), key_less);
  });
  return out;
}

}  // namespace trinb
