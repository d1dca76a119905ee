#include "creals/cauchy.hpp"

namespace creals {

CauchyReal::CauchyReal() : CauchyReal(constant(Rat(0))) {}

CauchyReal CauchyReal::constant(const Rat& q) {
    auto state = std::make_shared<State>();
    state->fn = [q](const Int&) { return q; };
    state->exact = q;
    return CauchyReal(std::move(state));
}

CauchyReal CauchyReal::from_fn(ApproxFn fn) {
    auto state = std::make_shared<State>();
    state->fn = std::move(fn);
    return CauchyReal(std::move(state));
}

CauchyReal CauchyReal::from_fn_exact(ApproxFn fn, const Rat& exact) {
    CauchyReal r = from_fn(std::move(fn));
    r.state_->exact = exact;
    return r;
}

Rat CauchyReal::approx(const Int& n) const {
    if (n < 1) throw std::domain_error("approx: precision index must be >= 1");
    if (state_->exact) return *state_->exact;
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->memo.find(n);
    if (it != state_->memo.end()) return it->second;
    Rat v = state_->fn(n);
    state_->memo.emplace(n, v);
    return v;
}

CauchyReal from_rational(const Rat& q) { return CauchyReal::constant(q); }

CauchyReal add(const CauchyReal& x, const CauchyReal& y) {
    if (x.exact() && y.exact()) return CauchyReal::constant(*x.exact() + *y.exact());
    return CauchyReal::from_fn([x, y](const Int& n) {
        Int k = 2 * n;
        return Rat(x.approx(k) + y.approx(k));
    });
}

CauchyReal neg(const CauchyReal& x) {
    if (x.exact()) return CauchyReal::constant(Rat(-*x.exact()));
    return CauchyReal::from_fn([x](const Int& n) { return Rat(-x.approx(n)); });
}

CauchyReal sub(const CauchyReal& x, const CauchyReal& y) { return add(x, neg(y)); }

CauchyReal mul(const CauchyReal& x, const CauchyReal& y) {
    if (x.exact() && y.exact()) return CauchyReal::constant(Rat(*x.exact() * *y.exact()));
    return CauchyReal::from_fn([x, y](const Int& n) {
        Rat bound_x = abs(x.approx(1)) + 1;
        Rat bound_y = abs(y.approx(1)) + 1;
        Int k = n * ceil_rat(bound_x + bound_y + 1);
        return Rat(x.approx(k) * y.approx(k));
    });
}

bool witness_valid(const CauchyReal& x, const ApartnessWitness& w) {
    if (w.index < 1 || (w.sign != 1 && w.sign != -1)) return false;
    Rat q = x.approx(w.index);
    if (abs(q) <= make_rat(2, w.index)) return false;
    return (w.sign > 0) == (q > 0);
}

std::optional<ApartnessWitness> find_apartness(const CauchyReal& x, unsigned fuel) {
    if (x.exact()) {
        const Rat& q = *x.exact();
        if (q == 0) return std::nullopt;
        // need |q| > 2/n, i.e. n > 2/|q|
        Int n = ceil_rat(Rat(2 / abs(q))) + 1;
        return ApartnessWitness{n, sgn(q)};
    }
    Int n = 1;
    for (unsigned j = 0; j <= fuel; ++j) {
        Rat q = x.approx(n);
        if (abs(q) > make_rat(2, n)) return ApartnessWitness{n, sgn(q)};
        n *= 2;
    }
    return std::nullopt;
}

CauchyReal inverse(const CauchyReal& x, const ApartnessWitness& w) {
    if (!witness_valid(x, w))
        throw InvalidWitnessError("inverse: apartness witness failed re-check");
    if (x.exact()) return CauchyReal::constant(Rat(1 / *x.exact()));
    Int wn = w.index;
    return CauchyReal::from_fn([x, wn](const Int& n) {
        Int k = 4 * n * wn * wn;
        if (k < wn) k = wn;
        return Rat(1 / x.approx(k));
    });
}

CompareResult compare(const CauchyReal& x, const CauchyReal& y, unsigned fuel) {
    Int n = 1;
    for (unsigned j = 0; j <= fuel; ++j) {
        Rat qx = x.approx(n);
        Rat qy = y.approx(n);
        Rat two_over_n = make_rat(2, n);
        Rat gap = qy - qx - two_over_n;
        if (gap > 0) {
            // True separation y - x >= gap. For l > k = ceil(4/gap):
            // y_l - x_l >= gap - 2/l > gap/2 >= 1/m with m = ceil(2/gap).
            CompareResult r;
            r.kind = CompareResult::Kind::Less;
            r.m = ceil_rat(Rat(2 / gap));
            r.k = ceil_rat(Rat(4 / gap));
            r.sep_index = n;
            r.left_at_n = qx;
            r.right_at_n = qy;
            return r;
        }
        gap = qx - qy - two_over_n;
        if (gap > 0) {
            CompareResult r;
            r.kind = CompareResult::Kind::Greater;
            r.m = ceil_rat(Rat(2 / gap));
            r.k = ceil_rat(Rat(4 / gap));
            r.sep_index = n;
            r.left_at_n = qx;
            r.right_at_n = qy;
            return r;
        }
        n *= 2;
    }
    CompareResult r;
    r.kind = CompareResult::Kind::UnknownAtFuel;
    r.fuel = fuel;
    return r;
}

bool compare_certificate_valid(const CauchyReal& x, const CauchyReal& y,
                               const CompareResult& r) {
    if (r.is_unknown()) return false;
    Int l = r.k + 1;
    Rat qx = x.approx(l);
    Rat qy = y.approx(l);
    Rat inv_m = make_rat(1, r.m);
    if (r.is_less()) return qy - qx > inv_m;
    return qx - qy > inv_m;
}

bool equiv_up_to(const CauchyReal& x, const CauchyReal& y, const Int& n) {
    if (n < 1) throw std::domain_error("equiv_up_to: resolution must be >= 1");
    Int k = 2 * n;
    return abs(x.approx(k) - y.approx(k)) <= make_rat(2, n);
}

std::optional<Int> floor(const CauchyReal& x, unsigned fuel) {
    if (x.exact()) return floor_rat(*x.exact());
    Int n = 2;
    for (unsigned j = 1; j <= fuel; ++j) {
        Rat q = x.approx(n);
        Rat r = inv_index(n);
        Rat lo = q - r;
        Rat hi = q + r;
        // [lo, hi] is integer-free iff ceil(lo) > hi.
        if (Rat(ceil_rat(lo)) > hi) return floor_rat(q);
        n *= 2;
    }
    return std::nullopt;
}

}  // namespace creals
