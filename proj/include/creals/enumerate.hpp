#ifndef CREALS_ENUMERATE_HPP
#define CREALS_ENUMERATE_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "creals/intops.hpp"

namespace creals {

/// The first `count` rationals in the canonical enumeration: reduced
/// fractions ordered by height (max(|numerator|, denominator)) ascending,
/// ties by |numerator| ascending, nonnegative before negative, denominator
/// ascending. Starts 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3, 2/3, -2/3, 3,
/// 3/2, -3, -3/2, ... Every rational appears exactly once, so searches over
/// prefixes are density-complete in the limit.
std::vector<Rat> first_rationals(std::size_t count);

/// Visit index tuples of the given arity over {0, 1, 2, ...} in a
/// deterministic order that exhausts small indices first: tuples are grouped
/// by their maximum entry ascending, lexicographic within a group. Visits at
/// most `limit` tuples with every entry <= max_index; stops early when fn
/// returns true. Returns whether fn stopped the walk. Arity 0 visits the
/// single empty tuple.
bool for_each_index_tuple(
    std::size_t arity, std::size_t max_index, std::size_t limit,
    const std::function<bool(const std::vector<std::size_t>&)>& fn);

}  // namespace creals

#endif
