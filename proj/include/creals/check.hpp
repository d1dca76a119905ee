#ifndef CREALS_CHECK_HPP
#define CREALS_CHECK_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "creals/cauchy.hpp"
#include "creals/dnf.hpp"
#include "creals/intops.hpp"
#include "creals/term.hpp"

namespace creals {

/// Evidence that a term is within the zero tolerance 2^-budget at a witness
/// point: either the value was computed exactly (`exact`, `value` is the
/// exact rational and |value| < 2^-budget), or |approximant at `index`|
/// stayed below 3/index, which certifies |value| < 4/index = 2^-budget.
struct EqEvidence {
    bool exact = false;
    Int index;
    Rat value;
};

/// Certificate that one disjunct of the matrix holds at a witness tuple.
/// pos_certs are re-checkable comparison certificates (0 < term) and
/// zero_certs are the per-equality evidence, both in literal order.
struct WitnessCert {
    std::size_t conjunct = 0;
    std::vector<Rat> witness;
    std::vector<CompareResult> pos_certs;
    std::vector<EqEvidence> zero_certs;
};

/// Outcome for one sampled assignment of the universal variables.
struct SampleReport {
    std::vector<Rat> outer;
    bool certified = false;
    WitnessCert cert;
    unsigned zoom_rounds = 0;  // refinement rounds that narrowed the box
};

/// Overall verdict of a bounded check.
///
/// Refuted: some sampled universal assignment makes every disjunct exactly
/// false under exact rational evaluation — a genuine counterexample.
/// WitnessFound: every sampled assignment got a certified witness. This is
/// accumulated evidence for the sentence, not a proof of the universal part.
/// Unknown: the search budget ran out before either of the above.
struct Verdict {
    enum class Kind { Refuted, WitnessFound, Unknown };
    Kind kind = Kind::Unknown;
    std::vector<Rat> counterexample;  // set when kind == Refuted
    std::vector<SampleReport> samples;
    std::string note;
};

/// One-line explanation of what a verdict kind does and does not establish.
std::string verdict_semantics(Verdict::Kind kind);

/// Bounded search for evidence about a forall/exists sentence.
///
/// The matrix is put in disjunctive normal form first. The universal
/// variables range over the first `samples` tuples of small rationals in
/// enumeration order. Per sample, each disjunct is tried in order: witness
/// tuples over small rationals are certified directly (equalities to within
/// 2^-budget via approximants, inequalities via comparison certificates at
/// fuel `budget`); when direct search fails and the disjunct has equalities,
/// the box [-16,16]^k around the existential variables is refined `budget`
/// rounds with tightening tolerances 2^-1 .. 2^-budget, and a point
/// surviving the final round is re-certified in full. Refutation is only
/// claimed from exact rational evaluation, and only for sentences with no
/// existential variables. Requires budget >= 1 and samples >= 1.
Verdict check_sentence(const A2Sentence& s, unsigned budget,
                       std::size_t samples);

}  // namespace creals

#endif
