#pragma once
/** @file risch.hpp
 *
 *  Reductions for integration in a monomial extension k(t): Hermite
 *  reduction of the normal part, polynomial reduction for nonlinear
 *  monomials, and the Rothstein-Trager resultant data used by the
 *  residue criterion.  These run over any level of a Tower; the
 *  top-level elementary-integration driver builds on them.
 */

#include <utility>
#include <vector>

#include "integ/fe.hpp"
#include "integ/polyring.hpp"
#include "integ/tower.hpp"

namespace integ {

/** f = D(g) + h + r with h simple (squarefree normal denominator,
 *  proper, so h = 0 exactly when no first-order normal pole remains)
 *  and r reduced (special denominator plus a polynomial part). */
struct HermiteMonomial {
    FE g;
    FE h;
    FE r;
};

/** Quadratic Hermite reduction of f at the given tower level. */
HermiteMonomial hermiteReduceMonomial(const FE& f, const Tower& tw, int level);

/** p = D(q) + r with deg r < delta(t).  Only meaningful for nonlinear
 *  monomials; throws std::domain_error when delta(t) < 2. */
std::pair<PolyF, PolyF> polynomialReduceMonomial(const PolyF& p, const Tower& tw, int level);

/** Bivariate polynomials in (t, z): main variable t, coefficients
 *  polynomials in the resultant indeterminate z over the lower field. */
using BiPolyF = Poly<RingElem<PolyF>>;

/** Lift p(t) to a BiPolyF with constant z-coefficients. */
BiPolyF biLift(const PolyF& p);

/** Substitute a lower-field value for z, collapsing to a t-polynomial. */
PolyF biSubstZF(const BiPolyF& s, const FE& z0);

/** Rothstein-Trager data for the log part of a/d: the resultant
 *  res_t(d, a - z*D(d)) together with the subresultant PRS it came
 *  from.  `swapped` records the orientation (pencil first) imposed by
 *  the degree requirement of the PRS; the resultant is only used for
 *  its roots, so its sign is not normalized. */
struct ResidueData {
    PolyF resultant;            ///< element of k[z]
    std::vector<BiPolyF> prs;   ///< R_0, R_1, ..., last nonzero remainder
    bool swapped = false;
};
ResidueData rothsteinTragerData(const PolyF& d, const PolyF& a, const Tower& tw, int level);

}  // namespace integ
