#ifndef CREALS_INTOPS_HPP
#define CREALS_INTOPS_HPP

#include <gmpxx.h>

#include <stdexcept>

// Arbitrary-precision integer and rational layer. Naturals are nonnegative
// Int values; preconditions are checked and violations throw std::domain_error.
// Rationals are always kept canonical: positive denominator, gcd(|num|, den) = 1.
// mpq_class arithmetic preserves canonical form; construction sites must call
// make_rat / canonicalize.

namespace creals {

using Int = mpz_class;
using Rat = mpq_class;

/// base^e over Int, e >= 0.
Int ipow(const Int& base, unsigned long e);

/// Largest k' with k'^2 <= k. Requires k >= 0.
Int isqrt(const Int& k);

/// Largest m with m^b <= k. Requires k >= 0, b >= 1.
/// Binary search on m in [0, 2^(ceil(bits(k)/b)+1)]; no floating point.
Int introot(const Int& k, const Int& b);

/// Signed-to-natural pairing: n >= 0 maps to 2n, -n (n > 0) maps to 2n+1.
Int encode_int(const Int& z);
Int decode_int(const Int& n);

/// The unique k with k*b <= a < (k+1)*b. Requires b > 0.
Int rat_floor(const Int& a, const Int& b);

/// Canonical rational from a signed numerator and positive denominator.
Rat make_rat(const Int& num, const Int& den);

/// floor / ceil of a rational, as Int.
Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

/// 1/n as a rational. Requires n >= 1.
Rat inv_index(const Int& n);

/// The rational in [lo, hi] with the smallest denominator (ties broken toward
/// the smallest |numerator|), by continued-fraction descent. Requires lo <= hi.
/// Used to re-represent a sampled approximant at the lowest height its
/// accuracy interval allows, which keeps downstream integer-root work small.
Rat simplest_rat_in(const Rat& lo, const Rat& hi);

}  // namespace creals

#endif
