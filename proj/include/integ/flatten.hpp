#pragma once
/** @file flatten.hpp
 *
 *  Conversions between tower field elements (recursive fractions) and
 *  flat multivariate polynomials over Q.  Variable i of the MPoly side
 *  corresponds to tower level i+1.  Flattening a fraction reduces it,
 *  so the numerator/denominator pair that comes back is coprime as
 *  multivariate polynomials.
 */

#include "integ/fe.hpp"
#include "integ/mpoly.hpp"

namespace integ {

struct MFrac {
    MPoly num, den;
};

/** f as a reduced fraction of polynomials in the first nvars tower
 *  variables; requires f.level() <= nvars. */
MFrac flattenFE(const FE& f, int nvars);

/** Rebuild a tower element from a flat polynomial. */
FE unflattenMPoly(const MPoly& p);

/** Clear coefficient denominators of p (a polynomial in the level-th
 *  tower variable): returns a flat polynomial equal to d * p for some
 *  nonzero lower-level d, using nvars = level variables. */
MPoly flattenPolyCleared(const PolyF& p, int level);

}  // namespace integ
