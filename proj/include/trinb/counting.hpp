#pragma once

#include <cstdint>
#include <optional>

#include "trinb/big_count.hpp"
#include "trinb/chain_poset.hpp"

namespace trinb {

/// C(a, b); zero when b > a.
BigCount binomial(std::uint64_t a, std::uint64_t b);

/// Antichains of [m1] x [m2]: C(m1 + m2, m1).
BigCount d_e2(std::uint64_t m1, std::uint64_t m2);
/// Antichains of [m1] x [m2] x [m3]:
///   prod_{i=0}^{m3-1} C(m1 + m2 + i, m1) / C(m1 + i, m1).
BigCount d_e3(std::uint64_t m1, std::uint64_t m2, std::uint64_t m3);
/// Closed form for n <= 3 attributes, nullopt otherwise.
std::optional<BigCount> antichain_count_closed_form(const Shape& shape);

/// Maximal antichains of [m1] x [m2] by the recurrence
///   d(m1,m2) = d(m1-1,m2-1) + sum_{i<m1-1} d(i,m2-1) + sum_{i<m2-1} d(m1-1,i)
/// with d(0,k) = d(k,0) = 1. Memoized; thread-safe.
BigCount d_f2(std::uint64_t m1, std::uint64_t m2);

/// D_F(m,2) by the four-term recurrence
///   m D(m) = (4m-3) D(m-1) - (2m-5) D(m-2) + D(m-3) - (m-3) D(m-4)
/// seeded with 1, 3, 9, 27. Throws Error if a division is inexact.
BigCount d_f_square_heinz(std::uint64_t m);

BigCount count_antichains_bruteforce(const Shape& shape, const EnumerationLimits& limits = {});
BigCount count_maximal_antichains_bruteforce(const Shape& shape, const EnumerationLimits& limits = {});

/// Size of the largest rank level of X, a lower bound on its width.
std::uint64_t largest_rank_level(const Shape& shape);
/// A cheap lower bound on the number of antichains: the closed form when
/// n <= 3, otherwise 2^(largest rank level), capped at 2^64 - 1.
std::uint64_t antichain_count_lower_bound(const Shape& shape);

/// Extends an antichain `a` of the slice {x : x_axis = top} to a maximal
/// antichain of X whose intersection with the slice is exactly `a`. Adds
/// (0, z) for every minimal z of X_{-axis} not below the projection of `a`.
/// Requires m_axis >= 2 unless `a` is already maximal.
Antichain extend_to_maximal(const Antichain& a, const Shape& shape, int axis);

/// The one-step variant: take the minimal slice elements incomparable to all
/// of `a` and lower their axis coordinate by one. The result is an antichain
/// but need not be maximal (e.g. a = {10} in [2]^2 misses 01); kept to
/// exhibit that gap next to extend_to_maximal.
Antichain extend_by_lowering(const Antichain& a, const Shape& shape, int axis);

struct LowerBoundCheck {
  BigCount maximal_count;    // D_F(m, n)
  BigCount antichain_count;  // D_E(m, n-1)
  bool holds = false;
};

/// D_F(m, n) >= D_E(m, n-1), both sides computed (brute force on the left,
/// closed form on the right when n-1 <= 3).
LowerBoundCheck lower_bound_check(int m, int n, const EnumerationLimits& limits = {});

}  // namespace trinb
