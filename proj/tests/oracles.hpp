#ifndef CREALS_TESTS_ORACLES_HPP
#define CREALS_TESTS_ORACLES_HPP

// Test-side reference computations, kept independent of the library code
// paths they are used to check:
//   - integer nth-root floors via GMP's mpz_root (the library's introot is a
//     hand-rolled binary search; isqrt wraps mpz_sqrt, a different entry)
//   - brute-force scans for small inputs
//   - exact-rational interval bisection for algebraic reference values
//   - two-sided rational enclosures of 2^(p/q)
// Everything here is exact rational/integer arithmetic; no floating point.

#include <gmpxx.h>

#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "creals/intops.hpp"

namespace oracles {

using creals::Int;
using creals::Rat;
using creals::make_rat;

using RatInterval = std::pair<Rat, Rat>;

inline Int gmp_root_floor(const Int& k, unsigned long b) {
    Int r;
    mpz_root(r.get_mpz_t(), k.get_mpz_t(), b);
    return r;
}

/// Largest m with m^b <= k by linear scan; small k only.
inline Int brute_root_floor(const Int& k, unsigned long b) {
    Int m = 0;
    for (;;) {
        Int next;
        mpz_pow_ui(next.get_mpz_t(), Int(m + 1).get_mpz_t(), b);
        if (next > k) return m;
        m += 1;
    }
}

/// "-1.2599" / "1.414213" / "2" as an exact rational.
inline Rat parse_decimal(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(Int(s, 10));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    Int num(digits, 10);  // keeps the sign; base pinned (leading zeros stay decimal)
    Int den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return make_rat(num, den);
}

/// Interval bisection on an exact rational function with a sign change over
/// [lo, hi]. Preserves sign(f(lo)) != sign(f(hi)); after `steps` halvings the
/// returned interval has width (hi-lo)/2^steps and still brackets the root.
template <typename F>
RatInterval bisect(F f, Rat lo, Rat hi, int steps) {
    Rat flo = f(lo);
    Rat fhi = f(hi);
    if (sgn(flo) == 0) return {lo, lo};
    if (sgn(fhi) == 0) return {hi, hi};
    if (sgn(flo) == sgn(fhi)) throw std::invalid_argument("bisect: no sign change");
    for (int i = 0; i < steps; ++i) {
        Rat mid = (lo + hi) / 2;
        Rat fmid = f(mid);
        if (sgn(fmid) == 0) return {mid, mid};
        if (sgn(fmid) == sgn(flo)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

/// Enclosure of sqrt(x) for rational x >= 0, width <= (x+1)/2^steps.
inline RatInterval sqrt_enclosure(const Rat& x, int steps) {
    if (x < 0) throw std::invalid_argument("sqrt_enclosure: negative");
    if (x == 0) return {Rat(0), Rat(0)};
    Rat hi = x < 1 ? Rat(1) : x;
    return bisect([&x](const Rat& t) { return Rat(t * t - x); }, Rat(0), hi, steps);
}

/// Enclosure of 2^(p/q) with width <= 1/prec, via mpz_root at scale prec.
inline RatInterval pow2_enclosure(const Int& p, const Int& q, const Int& prec) {
    if (q < 1 || prec < 1) throw std::invalid_argument("pow2_enclosure: bad args");
    Int prec_q;
    mpz_pow_ui(prec_q.get_mpz_t(), prec.get_mpz_t(), q.get_ui());
    Int two_abs_p;
    mpz_ui_pow_ui(two_abs_p.get_mpz_t(), 2, Int(abs(p)).get_ui());
    Int m = gmp_root_floor(prec_q * two_abs_p, q.get_ui());
    if (p >= 0) {
        // m/prec <= 2^(p/q) < (m+1)/prec
        return {make_rat(m, prec), make_rat(m + 1, prec)};
    }
    // 2^(|p|/q) in [m/prec, (m+1)/prec] with m >= prec, so
    // 2^(p/q) in [prec/(m+1), prec/m], width prec/(m(m+1)) <= 1/prec.
    return {make_rat(prec, m + 1), make_rat(prec, m)};
}

/// Outward rounding of an interval onto the 1/den grid: lowers denominators
/// (e.g. before feeding exponents to pow2_enclosure) at the cost of widening
/// by at most 2/den.
inline RatInterval widen_to_grid(const RatInterval& iv, const Int& den) {
    Int lo_num = creals::floor_rat(Rat(iv.first * den));
    Int hi_num = creals::ceil_rat(Rat(iv.second * den));
    return {make_rat(lo_num, den), make_rat(hi_num, den)};
}

/// Enclosure of 2^e for e in a rational interval: endpoint enclosures of
/// width 1/prec each, glued by monotonicity. Exponent denominators must be
/// modest (the scale is raised to that power); widen_to_grid first if needed.
inline RatInterval pow2_enclosure_rat(const Rat& lo_e, const Rat& hi_e, const Int& prec) {
    RatInterval low = pow2_enclosure(lo_e.get_num(), lo_e.get_den(), prec);
    RatInterval high = pow2_enclosure(hi_e.get_num(), hi_e.get_den(), prec);
    return {low.first, high.second};
}

// Deterministic random helpers (seeds fixed at call sites).

inline long rand_long(std::mt19937& gen, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen);
}

inline Rat rand_rat(std::mt19937& gen, long max_num, long max_den) {
    long num = rand_long(gen, -max_num, max_num);
    long den = rand_long(gen, 1, max_den);
    return make_rat(num, den);
}

}  // namespace oracles

#endif
