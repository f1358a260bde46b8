#pragma once

#include <random>
#include <vector>

#include "trinb/outranking.hpp"
#include "trinb/partition.hpp"
#include "trinb/representation.hpp"

namespace trinb {

/// A random valid spec meeting the constraints of `model` (an F-side
/// class). Profiles are added greedily while they stay pairwise non-P, so
/// there is always at least one.
OutrankingSpec random_spec(const Shape& shape, ModelClass model, std::mt19937_64& rng);

/// Up-closure of a few random generators; never empty.
TwofoldPartition random_monotone_partition(const Shape& shape, std::mt19937_64& rng);

/// Every partition whose A is an up-set, A = X and A = {} included.
std::vector<TwofoldPartition> all_monotone_partitions(const Shape& shape);

/// Every antichain of the slice {x : x_axis = top}, as alternatives of X.
std::vector<Antichain> all_slice_antichains(const Shape& shape, int axis);

}  // namespace trinb
