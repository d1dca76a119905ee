#ifndef CREALS_CAUCHY_HPP
#define CREALS_CAUCHY_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "creals/errors.hpp"
#include "creals/intops.hpp"

namespace creals {

/// A computable real: a total map from a precision index n >= 1 to a rational
/// approximant, under the modulus contract |approx(n) - x| <= 1/n for the
/// represented real x. approx is deterministic; results are memoized behind a
/// lock, so values are freely shareable across threads.
///
/// Values that are known to be an exact rational carry that rational; a few
/// operations (floor at integers, sqrt of zero) are only decidable on this
/// fast path.
class CauchyReal {
public:
    using ApproxFn = std::function<Rat(const Int&)>;

    /// The zero real.
    CauchyReal();

    /// Exact rational as a constant sequence: approx(n) = q for all n.
    static CauchyReal constant(const Rat& q);

    /// Wrap an approximation function. The caller owes the modulus contract:
    /// |fn(n) - x| <= 1/n for the real x the function converges to.
    static CauchyReal from_fn(ApproxFn fn);

    /// Like from_fn, but the value is additionally known to equal `exact`.
    static CauchyReal from_fn_exact(ApproxFn fn, const Rat& exact);

    /// n-th approximant. Requires n >= 1.
    Rat approx(const Int& n) const;

    /// The exact rational value, when the representation carries one.
    const std::optional<Rat>& exact() const { return state_->exact; }

private:
    struct State {
        ApproxFn fn;
        std::optional<Rat> exact;
        std::mutex mu;
        std::map<Int, Rat> memo;
    };
    explicit CauchyReal(std::shared_ptr<State> state) : state_(std::move(state)) {}
    std::shared_ptr<State> state_;
};

CauchyReal from_rational(const Rat& q);

/// approx(n) = x.approx(2n) + y.approx(2n).
/// Obligation: |result(n) - (x+y)| <= 1/(2n) + 1/(2n) = 1/n.
CauchyReal add(const CauchyReal& x, const CauchyReal& y);

CauchyReal neg(const CauchyReal& x);
CauchyReal sub(const CauchyReal& x, const CauchyReal& y);

/// approx(n) = x.approx(k) * y.approx(k), k = n * ceil(Bx + By + 1) where
/// Bx = |x.approx(1)| + 1 >= |x| and By likewise.
/// Obligation: |x_k y_k - xy| <= |x_k||y - y_k| + |y||x - x_k|
///   <= (Bx + 1/k)/k + By/k <= (Bx + By + 1)/k <= 1/n.
CauchyReal mul(const CauchyReal& x, const CauchyReal& y);

/// Certificate that a value is boundedly away from zero: an index n with
/// |approx(n)| > 2/n, hence |x| > 1/n with the recorded sign.
struct ApartnessWitness {
    Int index;
    int sign = 0;  // +1 or -1; 0 marks a default-constructed (invalid) witness
};

/// Re-check a witness against the value it claims to certify.
bool witness_valid(const CauchyReal& x, const ApartnessWitness& w);

/// Search indices 1, 2, 4, ..., 2^fuel for an apartness witness.
std::optional<ApartnessWitness> find_apartness(const CauchyReal& x, unsigned fuel);

/// 1/x given a valid apartness witness. approx(n) = 1 / x.approx(k) with
/// k = max(w.index, 4 n w.index^2).
/// Obligation: |x| > 1/w.index and |x.approx(k)| >= 1/w.index - 1/k >=
/// (3/4)/w.index, so |1/x_k - 1/x| = |x - x_k|/(|x||x_k|) <=
/// w.index * (4/3) w.index / k <= 1/(3n).
/// Throws InvalidWitnessError if the witness fails its re-check.
CauchyReal inverse(const CauchyReal& x, const ApartnessWitness& w);

/// Outcome of a semidecidable order test. A Less/Greater result certifies a
/// strict gap: for every l > k, smaller.approx(l) + 1/m < larger.approx(l).
struct CompareResult {
    enum class Kind { Less, Greater, UnknownAtFuel };
    Kind kind = Kind::UnknownAtFuel;
    Int m;          // gap certificate: gap > 1/m beyond index k
    Int k;          // certificate threshold index
    Int sep_index;  // the probe index that separated the values
    Rat left_at_n;  // approximants at sep_index
    Rat right_at_n;
    unsigned fuel = 0;  // set on UnknownAtFuel

    bool is_less() const { return kind == Kind::Less; }
    bool is_greater() const { return kind == Kind::Greater; }
    bool is_unknown() const { return kind == Kind::UnknownAtFuel; }
};

/// Probe indices n = 1, 2, 4, ..., 2^fuel. Returns Less once
/// x.approx(n) + 2/n < y.approx(n) (then x < y soundly), symmetrically
/// Greater; UnknownAtFuel otherwise. Complete for x != y given enough fuel;
/// equal reals are never separated.
CompareResult compare(const CauchyReal& x, const CauchyReal& y, unsigned fuel);

/// Re-verify a Less/Greater certificate against fresh approximants.
bool compare_certificate_valid(const CauchyReal& x, const CauchyReal& y,
                               const CompareResult& r);

/// Necessary equality test at resolution 1/n:
/// |x.approx(2n) - y.approx(2n)| <= 2/n. x ~ y implies true for every n.
bool equiv_up_to(const CauchyReal& x, const CauchyReal& y, const Int& n);

/// Integer part. Exact rationals floor exactly; otherwise probes
/// n = 2, 4, ..., 2^fuel until [approx(n) - 1/n, approx(n) + 1/n] contains no
/// integer. A non-exact value sitting at an integer is not decidable from
/// approximants and yields nullopt.
std::optional<Int> floor(const CauchyReal& x, unsigned fuel);

}  // namespace creals

#endif
