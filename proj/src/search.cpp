#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "trinb/error.hpp"
#include "trinb/representation.hpp"

namespace trinb {

namespace {

using Clock = std::chrono::steady_clock;

struct AttributeOption {
  ThresholdSemiorder semiorder;
  VetoRelation veto;
};

std::vector<AttributeOption> attribute_options(int levels, ModelClass model, bool chain_only) {
  std::vector<AttributeOption> out;
  if (model == ModelClass::F_u_bar) {
    out.push_back({ThresholdSemiorder::identity(levels), VetoRelation::none(levels)});
    return out;
  }
  for (auto& s : all_semiorders(levels)) {
    if (chain_only && !s.induces_chain()) continue;
    if (model == ModelClass::F) {
      for (auto& v : all_vetoes(s)) out.push_back({s, v});
    } else {
      out.push_back({s, VetoRelation::none(levels)});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const AttributeOption& a, const AttributeOption& b) {
    if (a.semiorder.strict_pairs() != b.semiorder.strict_pairs())
      return a.semiorder.strict_pairs() < b.semiorder.strict_pairs();
    return a.veto.veto_pairs() < b.veto.veto_pairs();
  });
  return out;
}

constexpr std::size_t kMaxConfigurations = 20'000'000;

// Index tuples into the per-attribute option lists, coarsest configuration
// first.
std::vector<std::vector<std::uint16_t>> configurations(const std::vector<std::vector<AttributeOption>>& options) {
  std::size_t total = 1;
  for (const auto& o : options) {
    total *= o.size();
    if (total > kMaxConfigurations) throw BudgetExceeded("too many semiorder/veto configurations to enumerate");
  }
  std::vector<std::vector<std::uint16_t>> out;
  out.reserve(total);
  std::vector<std::uint16_t> idx(options.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    out.push_back(idx);
    for (std::size_t i = options.size(); i-- > 0;) {
      if (++idx[i] < options[i].size()) break;
      idx[i] = 0;
    }
  }
  auto key = [&](const std::vector<std::uint16_t>& c) {
    int strict = 0, veto = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      strict += options[i][c[i]].semiorder.strict_pairs();
      veto += options[i][c[i]].veto.veto_pairs();
    }
    return std::pair{strict, veto};
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return out;
}

struct SharedState {
  std::uint64_t max_evaluations;
  Clock::time_point deadline;
  std::atomic<std::uint64_t> evaluations{0};
  std::atomic<bool> exhausted{false};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::map<std::size_t, OutrankingSpec> found;

  // Returns false once the budget is gone.
  bool charge(std::uint64_t n) {
    const std::uint64_t total = evaluations.fetch_add(n, std::memory_order_relaxed) + n;
    if (total > max_evaluations || Clock::now() > deadline) exhausted.store(true);
    return !exhausted.load(std::memory_order_relaxed);
  }
};

class Worker {
 public:
  Worker(const TwofoldPartition& p, const std::vector<std::size_t>& pool,
         const std::vector<std::vector<AttributeOption>>& options, const std::vector<CoalitionFamily>& families,
         SharedState& shared)
      : p_(p), pool_(pool), options_(options), families_(families), shared_(shared), size_(p.shape().size()) {
    unsat_ = p.unsatisfactory_bits();
  }

  // Returns true when a witness was found for this configuration.
  bool run(std::size_t config_index, const std::vector<std::uint16_t>& config) {
    const Shape& shape = p_.shape();
    std::vector<ThresholdSemiorder> semiorders;
    std::vector<VetoRelation> vetoes;
    for (std::size_t i = 0; i < config.size(); ++i) {
      semiorders.push_back(options_[i][config[i]].semiorder);
      vetoes.push_back(options_[i][config[i]].veto);
    }
    RelationEngine engine(shape, semiorders, vetoes);
    std::vector<RelationEngine::Masks> masks;
    if (engine.vectorized())
      for (std::size_t r : pool_) masks.push_back(engine.masks(shape.unrank(r)));

    for (const auto& family : families_) {
      if (shared_.exhausted.load(std::memory_order_relaxed) ||
          shared_.best.load(std::memory_order_relaxed) < config_index)
        return false;
      beats_.clear();
      beaten_.clear();
      candidates_.clear();
      Bits cover(size_);
      for (std::size_t k = 0; k < pool_.size(); ++k) {
        ReferenceRelation rel =
            engine.vectorized() ? engine.relate(masks[k], family) : engine.relate(shape.unrank(pool_[k]), family);
        Bits beaten = rel.alt_P_ref();
        // A profile strictly beaten by some x in U would put x in A.
        if (beaten.intersects(unsat_)) continue;
        Bits beats = rel.ref_P_alt();
        cover |= beats;
        candidates_.push_back(pool_[k]);
        beats_.push_back(std::move(beats));
        beaten_.push_back(std::move(beaten));
      }
      if (!unsat_.subset_of(cover)) continue;
      if (auto profiles = search_profiles()) {
        OutrankingSpec spec;
        spec.shape = shape;
        spec.semiorders = semiorders;
        spec.vetoes = vetoes;
        spec.coalitions = family;
        for (std::size_t r : *profiles) spec.profiles.push_back(shape.unrank(r));
        std::lock_guard lock(shared_.mutex);
        shared_.found.emplace(config_index, std::move(spec));
        std::size_t cur = shared_.best.load();
        while (config_index < cur && !shared_.best.compare_exchange_weak(cur, config_index)) {
        }
        return true;
      }
      if (shared_.exhausted.load(std::memory_order_relaxed)) return false;
    }
    return false;
  }

 private:
  // Profile sets among candidates_, by cardinality then lexicographically,
  // pairwise without strict preference.
  std::optional<std::vector<std::size_t>> search_profiles() {
    const std::size_t c = candidates_.size();
    conflict_.assign(c * c, 0);
    for (std::size_t a = 0; a < c; ++a)
      for (std::size_t b = 0; b < c; ++b)
        if (beats_[a].test(candidates_[b])) conflict_[a * c + b] = conflict_[b * c + a] = 1;
    chosen_.clear();
    for (std::size_t k = 1; k <= c; ++k) {
      or_beats_.assign(k + 1, Bits(size_));
      or_beaten_.assign(k + 1, Bits(size_));
      leaves_ = 0;
      if (dfs(0, k)) {
        std::vector<std::size_t> out;
        for (std::size_t i : chosen_) out.push_back(candidates_[i]);
        return out;
      }
      if (shared_.exhausted.load(std::memory_order_relaxed) || leaves_ == 0) return std::nullopt;
    }
    return std::nullopt;
  }

  bool dfs(std::size_t start, std::size_t k) {
    const std::size_t depth = chosen_.size();
    if (depth == k) {
      ++leaves_;
      if (++pending_ >= 256) {
        const bool ok = shared_.charge(pending_);
        pending_ = 0;
        if (!ok) return false;
      }
      Bits pred = or_beats_[depth];
      pred.subtract(or_beaten_[depth]);
      return pred == unsat_;
    }
    const std::size_t c = candidates_.size();
    for (std::size_t i = start; i + (k - depth) <= c; ++i) {
      bool ok = true;
      for (std::size_t j : chosen_)
        if (conflict_[i * c + j]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      or_beats_[depth + 1] = or_beats_[depth];
      or_beats_[depth + 1] |= beats_[i];
      or_beaten_[depth + 1] = or_beaten_[depth];
      or_beaten_[depth + 1] |= beaten_[i];
      chosen_.push_back(i);
      if (dfs(i + 1, k)) return true;
      chosen_.pop_back();
      if (shared_.exhausted.load(std::memory_order_relaxed)) return false;
    }
    return false;
  }

 public:
  void flush() {
    shared_.evaluations.fetch_add(pending_, std::memory_order_relaxed);
    pending_ = 0;
  }

 private:
  const TwofoldPartition& p_;
  const std::vector<std::size_t>& pool_;
  const std::vector<std::vector<AttributeOption>>& options_;
  const std::vector<CoalitionFamily>& families_;
  SharedState& shared_;
  std::size_t size_;
  Bits unsat_;
  std::vector<std::size_t> candidates_;
  std::vector<Bits> beats_, beaten_;
  std::vector<std::uint8_t> conflict_;
  std::vector<std::size_t> chosen_;
  std::vector<Bits> or_beats_, or_beaten_;
  std::uint64_t pending_ = 0;
  std::uint64_t leaves_ = 0;
};

}  // namespace

SearchResult search_representation(const TwofoldPartition& p, const SearchOptions& options) {
  const auto start = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };
  if (auto v = find_linearity_violation(p))
    throw PreconditionError("search: partition is not linear (" + describe(*v, p.shape()) + ")");
  if (!is_monotone(p)) throw PreconditionError("search: partition is not in canonical orientation; canonicalize it first");
  if (options.budget.max_evaluations == 0 || options.budget.max_seconds <= 0)
    throw PreconditionError("search budget must be positive");

  SearchResult result;
  if (!is_pseudo_disjunctive(options.model)) {
    // Every pc representation puts its profiles in A, so A = {} has none.
    if (p.satisfactory_count() > 0) {
      result.outcome = SearchOutcome::found;
      result.witness = canonical_eu(p);
    }
    result.seconds = elapsed();
    return result;
  }

  const Shape& shape = p.shape();
  std::vector<std::size_t> pool;
  for (std::size_t r = 0; r < shape.size(); ++r)
    if (options.profiles_from_all || p.satisfactory(r)) pool.push_back(r);

  std::vector<std::vector<AttributeOption>> attr;
  for (int i = 0; i < shape.attributes(); ++i) attr.push_back(attribute_options(shape.levels(i), options.model, options.chain_semiorders_only));
  std::vector<std::vector<std::uint16_t>> configs;
  try {
    configs = configurations(attr);
  } catch (const BudgetExceeded&) {
    result.outcome = SearchOutcome::budget_exhausted;
    result.seconds = elapsed();
    return result;
  }
  std::vector<CoalitionFamily> families;
  if (options.model == ModelClass::F || options.model == ModelClass::F_c)
    families = all_coalition_families(shape.attributes());
  else
    families = {CoalitionFamily::unanimity(shape.attributes())};
  result.configurations = configs.size();
  result.coalition_families = families.size();

  SharedState shared;
  shared.max_evaluations = options.budget.max_evaluations;
  shared.deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(options.budget.max_seconds));

  auto work = [&] {
    Worker w(p, pool, attr, families, shared);
    for (;;) {
      const std::size_t k = shared.next.fetch_add(1);
      if (k >= configs.size() || k > shared.best.load() || shared.exhausted.load()) break;
      w.run(k, configs[k]);
    }
    w.flush();
  };
  if (!pool.empty()) {
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
      work();
    } else {
      std::vector<std::thread> pool_threads;
      for (unsigned t = 0; t < threads; ++t) pool_threads.emplace_back(work);
      for (auto& t : pool_threads) t.join();
    }
  }

  result.evaluations = shared.evaluations.load();
  result.seconds = elapsed();
  if (!shared.found.empty()) {
    result.outcome = SearchOutcome::found;
    result.witness = shared.found.begin()->second;
  } else if (shared.exhausted.load()) {
    result.outcome = SearchOutcome::budget_exhausted;
  } else {
    result.outcome = SearchOutcome::none;
  }
  return result;
}

}  // namespace trinb
