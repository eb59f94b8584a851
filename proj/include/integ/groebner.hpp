#pragma once
/** @file groebner.hpp
 *
 *  Ideal arithmetic in Q[x1..xn]: monomial orders, multivariate division
 *  with remainder, S-polynomials, Buchberger's algorithm (a plain variant
 *  and one with the coprime/chain pair criteria), reduced bases and ideal
 *  membership.  Coefficients stay rational throughout; parameters such as
 *  the log-part's t are handled as ordinary low-priority variables.
 */

#include "integ/mpoly.hpp"

#include <utility>
#include <vector>

namespace integ {

enum class OrderTag { Lex, GrLex, GrevLex };

/** A monomial order: comparison tag plus variable priority.
 *
 *  `priority` lists variable indices from most to least significant; an
 *  empty list means 0,1,...,n-1.  The constant monomial is minimal under
 *  all three tags.
 */
struct MonomialOrder {
    OrderTag tag = OrderTag::Lex;
    std::vector<int> priority;

    /** Strict comparison: is monomial `a` smaller than `b`? */
    bool less(const MPoly::Key& a, const MPoly::Key& b) const;
};

/** Leading (monomial, coefficient) of a nonzero polynomial. */
std::pair<MPoly::Key, Q> leadingTerm(const MPoly& f, const MonomialOrder& ord);

struct MDivision {
    std::vector<MPoly> quotients;
    MPoly remainder;
};

/** Division with remainder by an ordered list of divisors.  At every step
 *  the minimal divisor index whose leading term divides the current one is
 *  used, so the output is canonical for the given list order.  Guarantees
 *  f = sum(quotients[i]*divisors[i]) + remainder, and no remainder
 *  monomial is divisible by any leading monomial of the divisors.
 */
MDivision mDivide(const MPoly& f, const std::vector<MPoly>& divisors, const MonomialOrder& ord);

/** S(g,h) = (lcm/lt(g))g - (lcm/lt(h))h, with lcm over leading monomials. */
MPoly sPolynomial(const MPoly& g, const MPoly& h, const MonomialOrder& ord);

/** Buchberger completion of F.  `improved` switches on the coprime
 *  leading-term skip and the chain criterion; both variants return a basis
 *  of the same ideal.  Pairs are processed smallest lcm-degree first.
 */
std::vector<MPoly> buchberger(std::vector<MPoly> F, const MonomialOrder& ord, bool improved);

/** The unique reduced basis: minimal, monic, every element fully reduced
 *  against the others.  Input must already be a Groebner basis.  Elements
 *  come out sorted by leading monomial, largest first.
 */
std::vector<MPoly> reducedBasis(std::vector<MPoly> G, const MonomialOrder& ord);

/** Remainder of f on division by G; unique normal form when G is a
 *  Groebner basis. */
MPoly normalForm(const MPoly& f, const std::vector<MPoly>& G, const MonomialOrder& ord);

/** Ideal membership via normalForm == 0; requires G Groebner. */
bool memberQ(const MPoly& f, const std::vector<MPoly>& G, const MonomialOrder& ord);

}  // namespace integ
