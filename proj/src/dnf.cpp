#include "creals/dnf.hpp"

#include <sstream>

#include "creals/errors.hpp"

namespace creals {

namespace {

void check_cap(std::size_t size, std::size_t cap) {
    if (size > cap) {
        std::ostringstream os;
        os << "DNF conjunct count " << size << " exceeds cap " << cap;
        throw BlowupCapError(os.str());
    }
}

/// Disjunction: concatenation.
Dnf dnf_or(Dnf a, Dnf b, std::size_t cap) {
    check_cap(a.size() + b.size(), cap);
    a.insert(a.end(), std::make_move_iterator(b.begin()),
             std::make_move_iterator(b.end()));
    return a;
}

/// Conjunction: pairwise merge (distributivity).
Dnf dnf_and(const Dnf& a, const Dnf& b, std::size_t cap) {
    check_cap(a.size() * b.size(), cap);
    Dnf out;
    out.reserve(a.size() * b.size());
    for (const Conjunct& ca : a) {
        for (const Conjunct& cb : b) {
            Conjunct merged = ca;
            merged.zeros.insert(merged.zeros.end(), cb.zeros.begin(),
                                cb.zeros.end());
            merged.positives.insert(merged.positives.end(),
                                    cb.positives.begin(), cb.positives.end());
            out.push_back(std::move(merged));
        }
    }
    return out;
}

TermPtr negate_term(const TermPtr& t) { return t_sub(t_const(Rat(0)), t); }

/// DNF of f (negated = false) or of not-f (negated = true), with negation
/// pushed to the atoms and eliminated there by the order-ring rewrites.
Dnf normalize(const FormulaPtr& f, bool negated, std::size_t cap) {
    switch (f->kind) {
        case Formula::Kind::Atom: {
            const Literal& lit = f->atom;
            if (!negated) {
                Conjunct c;
                (lit.is_equality ? c.zeros : c.positives).push_back(lit.term);
                return {c};
            }
            // not (t = 0) -> (t > 0) or (-t > 0);
            // not (t > 0) -> (t = 0) or (-t > 0).
            Conjunct first, second;
            if (lit.is_equality) {
                first.positives.push_back(lit.term);
            } else {
                first.zeros.push_back(lit.term);
            }
            second.positives.push_back(negate_term(lit.term));
            return {first, second};
        }
        case Formula::Kind::Not:
            return normalize(f->lhs, !negated, cap);
        case Formula::Kind::And: {
            Dnf a = normalize(f->lhs, negated, cap);
            Dnf b = normalize(f->rhs, negated, cap);
            // De Morgan: a negated conjunction is a disjunction.
            return negated ? dnf_or(std::move(a), std::move(b), cap)
                           : dnf_and(a, b, cap);
        }
        case Formula::Kind::Or: {
            Dnf a = normalize(f->lhs, negated, cap);
            Dnf b = normalize(f->rhs, negated, cap);
            return negated ? dnf_and(a, b, cap)
                           : dnf_or(std::move(a), std::move(b), cap);
        }
    }
    throw EvalError("corrupt formula");
}

}  // namespace

Dnf to_dnf(const FormulaPtr& f, std::size_t cap) {
    return normalize(f, false, cap);
}

}  // namespace creals
