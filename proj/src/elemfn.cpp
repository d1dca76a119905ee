#include "creals/elemfn.hpp"

namespace creals {

Int appr(const Int& n, const Int& a, const Int& b) {
    if (n < 1) throw std::domain_error("appr: index must be >= 1");
    if (a < 0) throw std::domain_error("appr: radicand must be >= 0");
    if (b < 1) throw std::domain_error("appr: root degree must be >= 1");
    if (!b.fits_ulong_p()) throw std::domain_error("appr: root degree too large");
    return introot(ipow(n, b.get_ui()) * a, b);
}

namespace {

Int pow2(const Int& e) {
    if (e < 0 || !e.fits_ulong_p()) throw std::domain_error("pow2: bad exponent");
    return ipow(2, e.get_ui());
}

}  // namespace

CauchyReal exp2_rat(const Int& p, const Int& q) {
    if (q < 1) throw std::domain_error("exp2_rat: denominator must be >= 1");
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    Int pr = p / g;
    Int qr = q / g;
    if (qr == 1) {
        // Integer exponent: exact power of two.
        if (pr >= 0) return CauchyReal::constant(Rat(pow2(pr)));
        return CauchyReal::constant(make_rat(1, pow2(-pr)));
    }
    if (pr > 0) {
        Int a = pow2(pr);
        return CauchyReal::from_fn(
            [a, qr](const Int& i) { return make_rat(appr(i, a, qr), i); });
    }
    if (pr < 0) {
        Int a = pow2(-pr);
        return CauchyReal::from_fn(
            [a, qr](const Int& i) { return make_rat(i, appr(i, a, qr)); });
    }
    // p = 0 with q > 1 is caught by the reduction above; unreachable.
    return CauchyReal::constant(Rat(1));
}

CauchyReal exp2(const CauchyReal& x) {
    if (x.exact()) {
        const Rat& q = *x.exact();
        return exp2_rat(Int(q.get_num()), Int(q.get_den()));
    }
    return CauchyReal::from_fn([x](const Int& n) {
        Int upper = floor_rat(x.approx(1)) + 2;  // x <= approx(1) + 1 < upper
        Int e = upper + 2;
        if (e < 0) e = 0;
        // Sample twice as fine as the Lipschitz budget needs, then spend the
        // slack on re-representing the sample at the smallest denominator its
        // accuracy interval allows: |r - x| <= 2/m = 1/(n*2^e), so the
        // Lipschitz step still contributes ln2 * 2^(upper+1) * 2/m <= 1/(2n).
        Int m = 2 * n * pow2(e);
        Rat s = x.approx(m);
        Rat h = inv_index(m);
        Rat r = simplest_rat_in(s - h, s + h);
        CauchyReal at_sample = exp2_rat(Int(r.get_num()), Int(r.get_den()));
        return at_sample.approx(2 * n);
    });
}

namespace {

/// Lower approximant of sqrt(a/b) with error < 1/(b*t): isqrt(a*b*t^2)/(b*t).
Rat sqrt_lower(const Int& a, const Int& b, const Int& t) {
    Int scaled = a * b * t * t;
    return make_rat(isqrt(scaled), b * t);
}

}  // namespace

CauchyReal sqrt(const CauchyReal& x, const std::optional<ApartnessWitness>& w) {
    if (w) {
        if (!witness_valid(x, *w))
            throw InvalidWitnessError("sqrt: apartness witness failed re-check");
        if (w->sign < 0)
            throw NegativeInputError("sqrt: witness certifies a negative value");
    }
    if (x.exact()) {
        const Rat& q = *x.exact();
        if (q == 0) return CauchyReal();
        if (q < 0) throw NegativeInputError("sqrt: negative rational input");
        Int num = q.get_num();
        Int den = q.get_den();
        Int nd = num * den;
        Int root = isqrt(nd);
        if (root * root == nd)  // sqrt(num/den) = isqrt(num*den)/den exactly
            return CauchyReal::constant(make_rat(root, den));
        return CauchyReal::from_fn([num, den](const Int& n) {
            return sqrt_lower(num, den, 2 * n);
        });
    }
    ApartnessWitness wit{};
    if (w) {
        wit = *w;
    } else {
        auto found = find_apartness(x, 64);
        if (!found)
            throw InvalidWitnessError(
                "sqrt: no apartness witness supplied and none found at default fuel");
        if (found->sign < 0)
            throw NegativeInputError("sqrt: value is apart from zero on the negative side");
        wit = *found;
    }
    Int wn = wit.index;
    return CauchyReal::from_fn([x, wn](const Int& n) {
        Int lipschitz = isqrt(2 * wn) + 1;  // >= 1/sqrt(L) for L = 1/(2*wn)
        Int k = n * lipschitz;
        if (k < 2 * wn) k = 2 * wn;
        Rat s = x.approx(k);  // >= 1/wn - 1/k >= 1/(2*wn) > 0
        return sqrt_lower(Int(s.get_num()), Int(s.get_den()), 2 * n);
    });
}

}  // namespace creals
