#ifndef CREALS_DNF_HPP
#define CREALS_DNF_HPP

#include <cstddef>
#include <vector>

#include "creals/term.hpp"

namespace creals {

/// One disjunct of a negation-free normal form: a conjunction of equalities
/// (each term required = 0) and strict positivities (each term required > 0).
struct Conjunct {
    std::vector<TermPtr> zeros;
    std::vector<TermPtr> positives;
};

using Dnf = std::vector<Conjunct>;

inline constexpr std::size_t kDnfConjunctCap = 4096;

/// Negation-free disjunctive normal form, logically equivalent to f on every
/// assignment. Negations are eliminated by the order-ring rewrites
///   not (t = 0)  ->  (t > 0) or (0 - t > 0)
///   not (t > 0)  ->  (t = 0) or (0 - t > 0)
/// and De Morgan, then conjunctions distribute over disjunctions. Throws
/// BlowupCapError if the conjunct count would exceed cap.
Dnf to_dnf(const FormulaPtr& f, std::size_t cap = kDnfConjunctCap);

}  // namespace creals

#endif
