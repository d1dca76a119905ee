#ifndef CREALS_POLY_HPP
#define CREALS_POLY_HPP

#include <memory>
#include <vector>

#include "creals/cauchy.hpp"
#include "creals/intops.hpp"

namespace creals {

/// Dense polynomial over computable reals. coeffs[i] is the coefficient of
/// x^i, so the degree is coeffs.size() - 1. The leading coefficient carries an
/// apartness witness: without a certified nonzero lead, the degree itself is
/// unknowable and no root bound can be computed.
struct Polynomial {
    std::vector<CauchyReal> coeffs;
    ApartnessWitness lead_witness;
};

/// Degree of p (coeffs.size() - 1); -1 for an empty coefficient vector.
long degree(const Polynomial& p);

/// Build a polynomial from exact rational coefficients (ascending degree),
/// locating the leading-coefficient witness automatically. Throws
/// InvalidWitnessError if the vector is empty or the leading coefficient is
/// zero.
Polynomial polynomial_from_rationals(const std::vector<Rat>& cs);

/// Horner evaluation. The result inherits the modulus guarantees of add/mul
/// and is exact whenever x and every coefficient are exact rationals.
CauchyReal eval_poly(const Polynomial& p, const CauchyReal& x);

/// One bisection step as evidence: the bracket endpoints together with the
/// comparison certificates that pinned the sign of p at each endpoint.
/// lo_sign / hi_sign record compare(0, p(endpoint)); Less certifies
/// p(endpoint) > 0 and Greater certifies p(endpoint) < 0.
struct BisectStep {
    Rat lo;
    Rat hi;
    CompareResult lo_sign;
    CompareResult hi_sign;
};
using BisectTrace = std::vector<BisectStep>;

/// A root of an odd-degree polynomial as a computable real.
///
/// approx(n) bisects a sign-change bracket down to width <= 1/n and returns
/// its midpoint; brackets are nested across calls, so the sequence converges
/// to a single point r with p(r) = 0 and |approx(n) - r| <= 1/n.
///
/// The initial bracket is [-M, M] with M = 1 + max_i U_i / L where
/// U_i = |coeffs[i].approx(1)| + 1 bounds |c_i| from above (i < degree) and
/// L = |c_lead.approx(w)| - 1/w bounds the leading coefficient from below via
/// its witness; every real root lies inside, and |p(+-M)| >= L keeps the
/// endpoint signs certifiable.
///
/// Sign queries run compare against zero with escalating fuel. When the
/// midpoint's sign cannot be certified (it may sit on a root), the points at
/// 1/3 and 2/3 of the bracket are probed instead and the first certifiable
/// one splits it, so every step shrinks the bracket by at least 1/3.
///
/// If `trace` is non-null, each completed step appends its bracket and
/// endpoint certificates for later re-checking.
///
/// Throws DegreeNotOddError if the degree is not an odd positive integer,
/// InvalidWitnessError if the leading witness fails its re-check, and
/// FuelExhaustedError if no probe point's sign certifies at the given fuel.
CauchyReal root_odd(const Polynomial& p, unsigned fuel,
                    std::shared_ptr<BisectTrace> trace = nullptr);

}  // namespace creals

#endif
