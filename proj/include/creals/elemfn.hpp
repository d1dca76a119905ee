#ifndef CREALS_ELEMFN_HPP
#define CREALS_ELEMFN_HPP

#include <optional>

#include "creals/cauchy.hpp"

namespace creals {

/// Integer approximation to n * a^(1/b) from below: introot(n^b * a, b).
/// Law: appr(n,a,b)^b <= n^b * a < (appr(n,a,b)+1)^b, hence
/// appr(n,a,b)/n <= a^(1/b) < appr(n,a,b)/n + 1/n.
/// Requires n >= 1, a >= 0, b >= 1.
Int appr(const Int& n, const Int& a, const Int& b);

/// 2^(p/q) for integer p and q >= 1.
///
/// When q divides p the value is an exact rational power of two. Otherwise,
/// writing the reduced exponent as p'/q':
///   p' > 0: approx(i) = appr(i, 2^p', q') / i, a lower approximant;
///           the appr law gives 0 <= 2^(p'/q') - approx(i) < 1/i.
///   p' < 0: approx(i) = i / appr(i, 2^|p'|, q'), an upper approximant;
///           with m = appr(i, 2^|p'|, q') and e = 2^(|p'|/q') >= 1 we have
///           m <= i*e < m+1 and m >= i, so
///           0 <= i/m - 1/e = (i*e - m)/(m*e) < 1/(m*e) <= 1/i.
CauchyReal exp2_rat(const Int& p, const Int& q);

/// 2^x for a CauchyReal x. Exact rational inputs delegate to exp2_rat, so
/// integer inputs give exact powers of two.
///
/// Otherwise approx(n): U = rat_floor(x.approx(1)) + 2 bounds x from above
/// (x <= approx(1) + 1 < U). Sample s = x.approx(m) at m = 2n * 2^max(U+2, 0)
/// and take r as the smallest-denominator rational in [s - 1/m, s + 1/m], so
/// |r - x| <= 2/m; since 2^t has derivative ln2 * 2^t <= ln2 * 2^(U+1) on
/// t <= U + 1, |2^r - 2^x| <= ln2 * 2^(U+1) * 2/m <= 1/(2n). Evaluating
/// exp2_rat at r to precision 2n adds at most 1/(2n), so the 1/n contract
/// holds. The denominator reduction keeps the integer-root inside exp2_rat
/// proportional to sqrt(m) digits instead of m digits.
/// Monotone: x < y (certified) implies exp2(x) < exp2(y) is certifiable.
CauchyReal exp2(const CauchyReal& x);

/// Square root of a nonnegative value.
///
/// Accepted inputs: the exact rational 0 (gives exact 0), an exact positive
/// rational, or any value accompanied by a sign-positive apartness witness.
/// A non-exact value without a witness gets a bounded internal witness search.
///
/// Core identity: for a fraction a/b sampled from x and a scale t,
///   isqrt(a*b*t^2) / (b*t) <= sqrt(a/b) < isqrt(a*b*t^2) / (b*t) + 1/(b*t),
/// i.e. the isqrt of numerator times denominator, taken at a representation
/// whose denominator is large enough, approximates the square root from below.
///
/// approx(n) for exact p/q > 0: value isqrt(p*q*(2n)^2) / (q*2n), error
/// < 1/(2nq) <= 1/n. Perfect squares are detected and returned exactly.
///
/// approx(n) with witness index w (so x > 1/w): sample s = x.approx(k) at
/// k = max(2w, n*(isqrt(2w)+1)). Then s, x >= 1/(2w), and sqrt is
/// 1/(2*sqrt(1/(2w)))-Lipschitz there, so |sqrt(s) - sqrt(x)| <=
/// sqrt(2w)/(2k) <= 1/(2n); the identity above at t = 2n adds < 1/(2n).
///
/// Errors: InvalidWitnessError if a supplied witness fails its re-check (or
/// none can be found for a non-exact input); NegativeInputError if the input
/// is an exact negative rational or the witness certifies a negative value.
CauchyReal sqrt(const CauchyReal& x,
                const std::optional<ApartnessWitness>& w = std::nullopt);

}  // namespace creals

#endif
