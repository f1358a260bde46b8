#include "trinb/sampling.hpp"

#include <algorithm>

#include "trinb/error.hpp"

namespace trinb {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

OutrankingSpec random_spec(const Shape& shape, ModelClass model, std::mt19937_64& rng) {
  if (!is_pseudo_disjunctive(model)) throw PreconditionError("random_spec draws F-side specs only");
  const int n = shape.attributes();
  OutrankingSpec spec = OutrankingSpec::plain(shape);
  const bool free_semiorders = model != ModelClass::F_u_bar;
  const bool with_vetoes = model == ModelClass::F;
  const bool free_coalitions = model == ModelClass::F || model == ModelClass::F_c;

  for (int i = 0; i < n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    auto& t = spec.semiorders[si].threshold;
    auto& v = spec.vetoes[si].threshold;
    if (free_semiorders && uniform(rng, 0, 3) != 0)
      for (int l = 1; l < shape.levels(i); ++l)
        t[static_cast<std::size_t>(l)] = uniform(rng, t[static_cast<std::size_t>(l) - 1], l - 1);
    if (with_vetoes && uniform(rng, 0, 1) == 0)
      for (int l = 0; l < shape.levels(i); ++l) {
        const auto sl = static_cast<std::size_t>(l);
        const int lo = l ? v[sl - 1] : -1;
        v[sl] = lo >= t[sl] ? lo : uniform(rng, lo, t[sl]);
      }
  }

  if (free_coalitions) {
    std::vector<std::uint32_t> gens;
    const int k = uniform(rng, 1, 3);
    const int full = (1 << n) - 1;
    for (int g = 0; g < k; ++g) gens.push_back(static_cast<std::uint32_t>(uniform(rng, 1, full)));
    spec.coalitions = CoalitionFamily(n, std::move(gens));
  }

  std::vector<std::size_t> order(shape.size());
  for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
  std::shuffle(order.begin(), order.end(), rng);
  const int want = uniform(rng, 1, 3);
  for (std::size_t r : order) {
    if (static_cast<int>(spec.profiles.size()) == want) break;
    Alternative x = shape.unrank(r);
    const bool fits = std::none_of(spec.profiles.begin(), spec.profiles.end(), [&](const Alternative& p) {
      return strictly_outranks(p, x, spec) || strictly_outranks(x, p, spec);
    });
    if (fits) spec.profiles.push_back(std::move(x));
  }
  spec.profiles = sorted_unique(std::move(spec.profiles));
  return spec;
}

TwofoldPartition random_monotone_partition(const Shape& shape, std::mt19937_64& rng) {
  const int k = uniform(rng, 1, 4);
  std::vector<Alternative> gens;
  for (int g = 0; g < k; ++g)
    gens.push_back(shape.unrank(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(shape.size()) - 1))));
  return TwofoldPartition::from_bits(shape, up_closure(gens, shape));
}

std::vector<TwofoldPartition> all_monotone_partitions(const Shape& shape) {
  std::vector<TwofoldPartition> out;
  enumerate_downsets(shape, [&](const Antichain& maxima) {
    out.push_back(TwofoldPartition::from_bits(shape, down_closure(maxima, shape).complement()));
  });
  return out;
}

std::vector<Antichain> all_slice_antichains(const Shape& shape, int axis) {
  if (axis < 0 || axis >= shape.attributes()) throw DimensionMismatch("axis out of range");
  std::vector<int> rest;
  for (int i = 0; i < shape.attributes(); ++i)
    if (i != axis) rest.push_back(shape.levels(i));
  const int top = shape.levels(axis) - 1;
  std::vector<Antichain> out;
  auto lift = [&](const Alternative& y) {
    std::vector<int> levels = y.levels();
    levels.insert(levels.begin() + axis, top);
    return Alternative(std::move(levels));
  };
  if (rest.empty()) {
    out.push_back({});
    out.push_back({lift(Alternative{})});
    return out;
  }
  Shape slice(rest);
  enumerate_downsets(slice, [&](const Antichain& a) {
    Antichain lifted;
    for (const auto& y : a) lifted.push_back(lift(y));
    out.push_back(sorted_unique(std::move(lifted)));
  });
  return out;
}

}  // namespace trinb
