#pragma once
/** @file polyring.hpp
 *
 *  Adapter that turns Poly<K> itself into a coefficient "scalar", so the
 *  generic routines in poly.hpp can run over polynomial rings.  The main
 *  customer is the resultant with respect to an inner variable: to
 *  compute res_t(A, B) for A, B in k[z][t] one forms Poly<RingElem<...>>
 *  in t whose coefficients are z-polynomials.  Division is exact
 *  division (throws when a quotient does not exist in the ring), which
 *  is all the subresultant PRS requires.
 */

#include <string>

#include "integ/poly.hpp"

namespace integ {

template <class P>
struct RingElem {
    using Inner = P;
    P p;

    RingElem() = default;
    RingElem(long n) : p(P::constant(typename P::coeff_type(n))) {}
    explicit RingElem(P q) : p(std::move(q)) {}

    bool isZero() const { return p.isZero(); }
    bool isOne() const { return p.isOne(); }

    friend RingElem operator+(const RingElem& a, const RingElem& b) { return RingElem(a.p + b.p); }
    friend RingElem operator-(const RingElem& a, const RingElem& b) { return RingElem(a.p - b.p); }
    friend RingElem operator*(const RingElem& a, const RingElem& b) { return RingElem(a.p * b.p); }
    RingElem operator-() const { return RingElem(-p); }
    friend RingElem operator/(const RingElem& a, const RingElem& b) {
        return RingElem(polyExactDivide(a.p, b.p));
    }
    friend bool operator==(const RingElem& a, const RingElem& b) { return a.p == b.p; }
    friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a.p == b.p); }

    std::string str() const { return "(" + p.str("z") + ")"; }
};

}  // namespace integ
