#pragma once
/** @file numbers.hpp
 *
 *  Integer and rational root extraction for polynomials over Q, plus a
 *  best-effort factorization into irreducible pieces (linear factors
 *  from rational roots, quadratics split by discriminant).  Higher
 *  degree residuals are returned unsplit; callers treat them as atomic
 *  blocks and never rely on their irreducibility for correctness.
 */

#include <optional>
#include <vector>

#include "integ/poly.hpp"
#include "integ/rational.hpp"

namespace integ {

/** All divisors of |n| (positive), or nullopt when n has too many or
 *  resists factoring within the effort cap. */
std::optional<std::vector<mpz_class>> divisorsOf(const mpz_class& n, size_t cap = 4096);

/** All rational roots of p (each listed once, multiplicity ignored).
 *  nullopt means the search was abandoned (factoring cap); an empty
 *  vector is a definitive "no rational roots". */
std::optional<std::vector<Q>> rationalRoots(const Poly<Q>& p);

/** Integer roots only; same contract as rationalRoots. */
std::optional<std::vector<Q>> integerRoots(const Poly<Q>& p);

/** Factor over Q as far as rational roots and square discriminants
 *  reach.  Returns the leading coefficient and monic blocks with
 *  multiplicities; blocks of degree > 2 may still be reducible. */
struct QFactor {
    Poly<Q> factor;  ///< monic
    int multiplicity;
};
std::pair<Q, std::vector<QFactor>> factorQ(const Poly<Q>& p);

}  // namespace integ
