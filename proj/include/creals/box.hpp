#ifndef CREALS_BOX_HPP
#define CREALS_BOX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "creals/intops.hpp"
#include "creals/term.hpp"

namespace creals {

/// Axis-aligned box of closed rational intervals, one per variable.
struct Box {
    std::vector<std::pair<Rat, Rat>> sides;
};

/// Result of one refinement round: the chosen half-split subbox together
/// with the rational tuple that qualified inside it, or neither.
struct RefineOutcome {
    std::optional<Box> box;
    std::vector<Rat> point;
};

/// Per-subbox search effort cap: one unit per denominator considered plus
/// one per candidate tuple evaluated. Keeps a round's cost bounded while the
/// deterministic scan order stays reproducible.
inline constexpr std::size_t kRefineWorkCap = 200000;

/// Split `box` into the 2^m half-interval subboxes (coordinate 0 varies
/// slowest, lower half before upper half) and return the first subbox
/// containing a rational tuple at which every term of ts is certifiably
/// within 2^(-budget) of zero: exactly when exact rational evaluation
/// applies, else via an approximant at index 2^(budget+2). Candidate tuples
/// range over reduced rationals in the subbox with denominators up to
/// 2^budget, denominator ascending then numerator ascending per coordinate,
/// coordinates combined smallest-indices-first; subboxes whose interval
/// image certifiably excludes (-2^-budget, 2^-budget) for some term are
/// pruned without scanning. `outer` supplies values for variables of ts not
/// among `vars` (the box coordinates). Endpoint membership counts: a tuple
/// on the shared face of two subboxes is found in the earlier one.
///
/// A NoCandidate outcome (empty optional) means the budgeted search failed,
/// not that no solution exists. Requires budget >= 1 and one side per var.
RefineOutcome refine_box(const std::vector<TermPtr>& ts, const RatEnv& outer,
                         const std::vector<std::string>& vars, const Box& box,
                         unsigned budget);

}  // namespace creals

#endif
