#include "creals/intops.hpp"

namespace creals {

Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int isqrt(const Int& k) {
    if (k < 0) throw std::domain_error("isqrt: negative input");
    Int r;
    mpz_sqrt(r.get_mpz_t(), k.get_mpz_t());
    return r;
}

Int introot(const Int& k, const Int& b) {
    if (k < 0) throw std::domain_error("introot: negative radicand");
    if (b < 1) throw std::domain_error("introot: root index must be >= 1");
    if (!b.fits_ulong_p()) throw std::domain_error("introot: root index too large");
    const unsigned long bu = b.get_ui();
    if (k == 0) return 0;
    if (bu == 1) return k;

    // Search window [lo, hi) with lo^b <= k < hi^b.
    // hi = 2^(ceil(bits(k)/b)+1) satisfies hi^b >= 2^(bits(k)+b) > k.
    const size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    const unsigned long shift = static_cast<unsigned long>((bits + bu - 1) / bu + 1);
    Int lo = 0;
    Int hi;
    mpz_ui_pow_ui(hi.get_mpz_t(), 2, shift);
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (ipow(mid, bu) <= k)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

Int encode_int(const Int& z) {
    if (z >= 0) return 2 * z;
    return -2 * z + 1;
}

Int decode_int(const Int& n) {
    if (n < 0) throw std::domain_error("decode_int: negative code");
    Int q = n / 2;
    if (mpz_odd_p(n.get_mpz_t())) return -q;
    return q;
}

Int rat_floor(const Int& a, const Int& b) {
    if (b <= 0) throw std::domain_error("rat_floor: denominator must be > 0");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Rat make_rat(const Int& num, const Int& den) {
    if (den <= 0) throw std::domain_error("make_rat: denominator must be > 0");
    Rat q;
    q.get_num() = num;
    q.get_den() = den;
    q.canonicalize();
    return q;
}

Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Rat inv_index(const Int& n) {
    if (n < 1) throw std::domain_error("inv_index: index must be >= 1");
    return make_rat(1, n);
}

Rat simplest_rat_in(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw std::domain_error("simplest_rat_in: empty interval");
    if (lo <= 0 && hi >= 0) return Rat(0);
    if (hi < 0) return Rat(-simplest_rat_in(Rat(-hi), Rat(-lo)));
    // 0 < lo <= hi. If an integer lies inside, the least one is simplest.
    Int c = ceil_rat(lo);
    if (Rat(c) <= hi) return Rat(c);
    // Both endpoints sit strictly between consecutive integers: recurse on the
    // reciprocal of the fractional parts (one continued-fraction step).
    Int whole = floor_rat(lo);
    Rat inner = simplest_rat_in(Rat(1) / (hi - Rat(whole)), Rat(1) / (lo - Rat(whole)));
    return Rat(whole) + Rat(1) / inner;
}

}  // namespace creals
