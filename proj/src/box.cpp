#include "creals/box.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "creals/cauchy.hpp"
#include "creals/elemfn.hpp"
#include "creals/errors.hpp"
#include "creals/intops.hpp"

namespace creals {

namespace {

Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// 2^e for a (possibly negative) integer exponent.
Rat pow2_int(const Int& e) {
    if (e >= 0) {
        return Rat(ipow(Int(2), e.get_ui()));
    }
    Int neg = -e;
    return make_rat(Int(1), ipow(Int(2), neg.get_ui()));
}

// ---------------------------------------------------------------------------
// Interval arithmetic used only to discard subboxes. Bounds are certified
// outer enclosures: every defined value of the term over the subbox lies in
// [lo, hi]. `valid == false` records that evaluation fails (square root of a
// certainly-negative argument) at every point of the subbox.
// ---------------------------------------------------------------------------

struct Iv {
    Rat lo;
    Rat hi;
    bool valid = true;
};

Iv iv_invalid() { return Iv{Rat(0), Rat(0), false}; }

Iv iv_point(const Rat& q) { return Iv{q, q, true}; }

Iv iv_add(const Iv& a, const Iv& b) {
    if (!a.valid || !b.valid) return iv_invalid();
    return Iv{Rat(a.lo + b.lo), Rat(a.hi + b.hi), true};
}

Iv iv_sub(const Iv& a, const Iv& b) {
    if (!a.valid || !b.valid) return iv_invalid();
    return Iv{Rat(a.lo - b.hi), Rat(a.hi - b.lo), true};
}

Iv iv_mul(const Iv& a, const Iv& b) {
    if (!a.valid || !b.valid) return iv_invalid();
    Rat p1(a.lo * b.lo), p2(a.lo * b.hi), p3(a.hi * b.lo), p4(a.hi * b.hi);
    Rat lo = p1, hi = p1;
    for (const Rat& p : {p2, p3, p4}) {
        if (p < lo) lo = p;
        if (p > hi) hi = p;
    }
    return Iv{lo, hi, true};
}

/// Lower bound for 2^a. Small denominators go through the exact one-sided
/// approximants; otherwise fall back to the integer power below a, which
/// avoids extracting roots of astronomically high degree when a carries a
/// grid-sized denominator.
Rat exp2_lo_bound(const Rat& a) {
    if (a.get_den() <= 64) {
        Rat approx = exp2(from_rational(a)).approx(Int(16));
        return Rat(approx - make_rat(Int(1), Int(16)));
    }
    return pow2_int(floor_rat(a));
}

/// Upper bound for 2^a (same regime split as exp2_lo_bound).
Rat exp2_hi_bound(const Rat& a) {
    if (a.get_den() <= 64) {
        Rat approx = exp2(from_rational(a)).approx(Int(16));
        return Rat(approx + make_rat(Int(1), Int(16)));
    }
    return pow2_int(ceil_rat(a));
}

Iv iv_exp2(const Iv& a) {
    if (!a.valid) return iv_invalid();
    return Iv{exp2_lo_bound(a.lo), exp2_hi_bound(a.hi), true};
}

Rat sqrt_hi_bound(const Rat& b) {
    if (b <= 0) return Rat(0);
    Rat approx = sqrt(from_rational(b)).approx(Int(16));
    return Rat(approx + make_rat(Int(1), Int(16)));
}

Rat sqrt_lo_bound(const Rat& a) {
    if (a <= 0) return Rat(0);
    Rat approx = sqrt(from_rational(a)).approx(Int(16));
    Rat lo(approx - make_rat(Int(1), Int(16)));
    return lo < 0 ? Rat(0) : lo;
}

Iv iv_sqrt(const Iv& a) {
    if (!a.valid) return iv_invalid();
    if (a.hi < 0) return iv_invalid();  // negative on the whole subbox
    return Iv{sqrt_lo_bound(a.lo), sqrt_hi_bound(a.hi), true};
}

Iv interval_eval(const TermPtr& t, const std::map<std::string, Iv>& env) {
    switch (t->kind) {
        case Term::Kind::Constant:
            return iv_point(t->value);
        case Term::Kind::Variable: {
            auto it = env.find(t->name);
            if (it == env.end()) {
                throw UnboundVariableError(t->name);
            }
            return it->second;
        }
        case Term::Kind::Add:
            return iv_add(interval_eval(t->lhs, env), interval_eval(t->rhs, env));
        case Term::Kind::Sub:
            return iv_sub(interval_eval(t->lhs, env), interval_eval(t->rhs, env));
        case Term::Kind::Mul:
            return iv_mul(interval_eval(t->lhs, env), interval_eval(t->rhs, env));
        case Term::Kind::Exp2:
            return iv_exp2(interval_eval(t->lhs, env));
        case Term::Kind::Sqrt:
            return iv_sqrt(interval_eval(t->lhs, env));
    }
    throw EvalError("corrupt term");
}

/// True when the interval image of some term certifiably misses the strip
/// (-threshold, threshold), so no point of the subbox can qualify.
bool subbox_pruned(const std::vector<TermPtr>& ts,
                   const std::map<std::string, Iv>& env, const Rat& threshold) {
    for (const TermPtr& t : ts) {
        Iv iv = interval_eval(t, env);
        if (!iv.valid) return true;  // evaluation fails everywhere
        if (iv.lo >= threshold || iv.hi <= -threshold) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Deterministic per-coordinate candidate stream: reduced rationals inside a
// closed interval with denominator at most max_den, ordered by denominator
// then numerator. Each denominator considered costs one work unit.
// ---------------------------------------------------------------------------

class GridStream {
   public:
    GridStream(const Rat& lo, const Rat& hi, Int max_den)
        : lo_(lo), hi_(hi), max_den_(std::move(max_den)) {}

    std::optional<Rat> next(std::size_t& work, std::size_t cap) {
        while (true) {
            while (num_ <= num_end_) {
                Int n = num_;
                num_ += 1;
                Int g;
                mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), den_.get_mpz_t());
                if (g == 1) return make_rat(n, den_);
            }
            den_ += 1;
            if (den_ > max_den_ || work >= cap) return std::nullopt;
            ++work;
            num_ = ceil_rat(Rat(lo_ * den_));
            num_end_ = floor_rat(Rat(hi_ * den_));
        }
    }

   private:
    Rat lo_;
    Rat hi_;
    Int max_den_;
    Int den_{0};
    Int num_{0};
    Int num_end_{-1};
};

/// One candidate tuple: check every term, exactly where exact evaluation is
/// total on the term, otherwise through a certified approximant.
bool tuple_qualifies(const std::vector<TermPtr>& ts, const RatEnv& rat_env,
                     const Rat& threshold, const Int& cert_index,
                     const Rat& cert_margin) {
    std::optional<Env> real_env;  // built lazily, only if some term needs it
    for (const TermPtr& t : ts) {
        std::optional<Rat> exact = eval_exact_term(t, rat_env);
        if (exact) {
            if (!(abs_rat(*exact) < threshold)) return false;
            continue;
        }
        try {
            if (!real_env) {
                Env env;
                for (const auto& [name, q] : rat_env) {
                    env.emplace(name, from_rational(q));
                }
                real_env = std::move(env);
            }
            Rat v = eval_term(t, *real_env).approx(cert_index);
            if (!(abs_rat(v) < cert_margin)) return false;
        } catch (const NegativeInputError&) {
            return false;  // undefined at this tuple
        } catch (const InvalidWitnessError&) {
            return false;  // square root argument not separable from zero
        }
    }
    return true;
}

}  // namespace

RefineOutcome refine_box(const std::vector<TermPtr>& ts, const RatEnv& outer,
                         const std::vector<std::string>& vars, const Box& box,
                         unsigned budget) {
    if (budget < 1) {
        throw std::invalid_argument("refine_box: budget must be at least 1");
    }
    if (vars.size() != box.sides.size()) {
        throw std::invalid_argument("refine_box: one box side per variable");
    }
    const std::size_t m = vars.size();
    if (m >= 8 * sizeof(std::size_t) - 1) {
        throw std::invalid_argument("refine_box: too many coordinates");
    }
    for (const auto& [lo, hi] : box.sides) {
        if (lo > hi) throw std::invalid_argument("refine_box: empty side");
    }

    const Rat threshold = pow2_int(Int(-static_cast<long>(budget)));
    const Int cert_index = ipow(Int(2), budget + 2);
    // |approx| < 3/2^(budget+2) certifies |value| < 2^-budget.
    const Rat cert_margin = make_rat(Int(3), cert_index);
    const Int max_den = ipow(Int(2), budget);

    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        // Coordinate 0 is the most significant bit: lower halves first.
        Box sub;
        sub.sides.reserve(m);
        std::map<std::string, Iv> iv_env;
        for (const auto& [name, q] : outer) iv_env.emplace(name, iv_point(q));
        for (std::size_t i = 0; i < m; ++i) {
            const auto& [lo, hi] = box.sides[i];
            Rat mid((lo + hi) / 2);
            bool upper = (mask >> (m - 1 - i)) & 1u;
            Rat slo = upper ? mid : lo;
            Rat shi = upper ? hi : mid;
            sub.sides.emplace_back(slo, shi);
            iv_env[vars[i]] = Iv{slo, shi, true};
        }

        if (subbox_pruned(ts, iv_env, threshold)) continue;

        // Budgeted grid scan of this subbox.
        std::size_t work = 0;
        std::vector<GridStream> streams;
        streams.reserve(m);
        for (const auto& [slo, shi] : sub.sides) {
            streams.emplace_back(slo, shi, max_den);
        }
        std::vector<std::vector<Rat>> lists(m);
        auto ensure = [&](std::size_t coord, std::size_t k) -> bool {
            while (lists[coord].size() <= k) {
                auto q = streams[coord].next(work, kRefineWorkCap);
                if (!q) return false;
                lists[coord].push_back(std::move(*q));
            }
            return true;
        };

        std::vector<Rat> found;
        if (m == 0) {
            if (tuple_qualifies(ts, outer, threshold, cert_index, cert_margin)) {
                return RefineOutcome{std::move(sub), {}};
            }
            continue;
        }

        std::vector<std::size_t> idx(m, 0);
        // Visit tuples grouped by their largest per-coordinate index, the
        // group ordered lexicographically; at the last coordinate the index
        // is forced up to the group bound when nothing earlier reached it.
        std::function<bool(std::size_t, std::size_t, bool)> walk =
            [&](std::size_t coord, std::size_t bound, bool has_bound) -> bool {
            if (coord == m) {
                ++work;
                RatEnv env = outer;
                for (std::size_t i = 0; i < m; ++i) {
                    env[vars[i]] = lists[i][idx[i]];
                }
                if (tuple_qualifies(ts, env, threshold, cert_index,
                                    cert_margin)) {
                    found.assign(m, Rat(0));
                    for (std::size_t i = 0; i < m; ++i) {
                        found[i] = lists[i][idx[i]];
                    }
                    return true;
                }
                return false;
            }
            std::size_t first = (!has_bound && coord + 1 == m) ? bound : 0;
            for (std::size_t v = first; v <= bound; ++v) {
                if (!ensure(coord, v)) break;  // list exhausted at v
                idx[coord] = v;
                if (walk(coord + 1, bound, has_bound || v == bound)) {
                    return true;
                }
                if (work >= kRefineWorkCap) return false;
            }
            return false;
        };

        bool hit = false;
        for (std::size_t bound = 0; work < kRefineWorkCap; ++bound) {
            bool any = false;
            for (std::size_t i = 0; i < m && !any; ++i) {
                any = ensure(i, bound);
            }
            if (!any) break;  // every coordinate list is exhausted
            if (walk(0, bound, false)) {
                hit = true;
                break;
            }
        }
        if (hit) {
            return RefineOutcome{std::move(sub), std::move(found)};
        }
    }
    return RefineOutcome{};
}

}  // namespace creals
