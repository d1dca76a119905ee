#include "creals/poly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "creals/errors.hpp"

namespace creals {

long degree(const Polynomial& p) {
    return static_cast<long>(p.coeffs.size()) - 1;
}

Polynomial polynomial_from_rationals(const std::vector<Rat>& cs) {
    if (cs.empty()) {
        throw InvalidWitnessError("polynomial needs at least one coefficient");
    }
    if (cs.back() == 0) {
        throw InvalidWitnessError("leading coefficient is zero");
    }
    Polynomial p;
    p.coeffs.reserve(cs.size());
    for (const Rat& c : cs) {
        p.coeffs.push_back(from_rational(c));
    }
    auto w = find_apartness(p.coeffs.back(), 64);
    if (!w) {
        throw InvalidWitnessError("no apartness witness for leading coefficient");
    }
    p.lead_witness = *w;
    return p;
}

CauchyReal eval_poly(const Polynomial& p, const CauchyReal& x) {
    if (p.coeffs.empty()) {
        return CauchyReal::constant(Rat(0));
    }
    CauchyReal acc = p.coeffs.back();
    for (auto it = p.coeffs.rbegin() + 1; it != p.coeffs.rend(); ++it) {
        acc = add(mul(acc, x), *it);
    }
    return acc;
}

namespace {

Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// A rational probe point together with p evaluated there, so repeated sign
/// queries at escalating fuel reuse the memoized approximants.
struct ProbePoint {
    Rat q;
    CauchyReal value;
};

/// Certified sign of v: (+1, certificate) if 0 < v, (-1, certificate) if
/// v < 0, nullopt if fuel ran out first.
std::optional<std::pair<int, CompareResult>> certified_sign(const CauchyReal& v,
                                                            unsigned fuel) {
    CompareResult c = compare(CauchyReal::constant(Rat(0)), v, fuel);
    if (c.is_less()) return std::make_pair(+1, c);
    if (c.is_greater()) return std::make_pair(-1, c);
    return std::nullopt;
}

/// Shared bisection state: the current certified bracket. Nested across
/// approx calls so all approximants enclose the same root. Mutation happens
/// inside the owning CauchyReal's approximation function, which the real's
/// own memo lock already serializes.
struct BisectState {
    Rat lo;
    Rat hi;
    int lo_sign;  // certified sign of p(lo); opposite of hi_sign
    int hi_sign;
    CompareResult lo_cert;
    CompareResult hi_cert;
    bool initialized = false;
};

}  // namespace

CauchyReal root_odd(const Polynomial& p, unsigned fuel,
                    std::shared_ptr<BisectTrace> trace) {
    long deg = degree(p);
    if (deg < 1 || deg % 2 == 0) {
        std::ostringstream os;
        os << "root_odd requires odd degree, got " << deg;
        throw DegreeNotOddError(os.str());
    }
    if (!witness_valid(p.coeffs.back(), p.lead_witness)) {
        throw InvalidWitnessError("leading-coefficient witness failed re-check");
    }

    // Cauchy root bound from certified coefficient bounds: U_i >= |c_i| and
    // L <= |c_lead|, so M = 1 + max U_i / L dominates 1 + max |c_i / c_lead|
    // and every real root lies in [-M, M]. The same estimate gives
    // |p(+-M)| >= L > 0, so the endpoint signs are certifiable.
    const Int wn = p.lead_witness.index;
    const Rat lead_low =
        abs_rat(p.coeffs.back().approx(wn)) - inv_index(wn);
    Rat max_upper(0);
    for (std::size_t i = 0; i + 1 < p.coeffs.size(); ++i) {
        Rat u = abs_rat(p.coeffs[i].approx(1)) + 1;
        if (u > max_upper) max_upper = u;
    }
    const Rat bound = Rat(1) + max_upper / lead_low;

    auto state = std::make_shared<BisectState>();
    state->lo = -bound;
    state->hi = bound;

    Polynomial pc = p;  // value copy shares coefficient states
    return CauchyReal::from_fn([pc, state, fuel, trace](const Int& n) -> Rat {
        if (!state->initialized) {
            auto lo_s = certified_sign(eval_poly(pc, from_rational(state->lo)), fuel);
            auto hi_s = certified_sign(eval_poly(pc, from_rational(state->hi)), fuel);
            if (!lo_s || !hi_s || lo_s->first == hi_s->first) {
                throw FuelExhaustedError(
                    "root_odd: could not certify a sign change over the initial "
                    "bracket");
            }
            state->lo_sign = lo_s->first;
            state->hi_sign = hi_s->first;
            state->lo_cert = lo_s->second;
            state->hi_cert = hi_s->second;
            state->initialized = true;
            if (trace) {
                trace->push_back({state->lo, state->hi, state->lo_cert,
                                  state->hi_cert});
            }
        }

        const Rat target = inv_index(n);
        while (state->hi - state->lo > target) {
            const Rat width = state->hi - state->lo;
            // Candidate split points: midpoint first, then the 1/3 and 2/3
            // points. Escalate fuel jointly so an uncertifiable midpoint (for
            // instance, an exact root) cannot burn the whole budget before
            // the perturbed points get a chance.
            ProbePoint cand[3] = {
                {state->lo + width / 2, CauchyReal()},
                {state->lo + width / 3, CauchyReal()},
                {state->lo + width * 2 / 3, CauchyReal()},
            };
            for (ProbePoint& c : cand) {
                c.value = eval_poly(pc, from_rational(c.q));
            }
            std::optional<std::pair<int, CompareResult>> hit;
            const ProbePoint* hit_at = nullptr;
            for (unsigned f = std::min(2u, fuel);; f = std::min(f * 2, fuel)) {
                for (const ProbePoint& c : cand) {
                    auto s = certified_sign(c.value, f);
                    if (s) {
                        hit = s;
                        hit_at = &c;
                        break;
                    }
                }
                if (hit || f >= fuel) break;
            }
            if (!hit) {
                throw FuelExhaustedError(
                    "root_odd: no probe point's sign certified at the given "
                    "fuel");
            }
            if (hit->first == state->lo_sign) {
                state->lo = hit_at->q;
                state->lo_cert = hit->second;
            } else {
                state->hi = hit_at->q;
                state->hi_cert = hit->second;
            }
            if (trace) {
                trace->push_back({state->lo, state->hi, state->lo_cert,
                                  state->hi_cert});
            }
        }
        return Rat(state->lo + (state->hi - state->lo) / 2);
    });
}

}  // namespace creals
