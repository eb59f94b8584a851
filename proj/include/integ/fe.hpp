#pragma once
/** @file fe.hpp
 *
 *  Elements of a differential tower C(x, t1, ..., tn), represented
 *  recursively.  A field element (FE) carries a level:
 *
 *    - level 0: an exact constant from Q (optionally Gaussian),
 *    - level L > 0: a reduced fraction num/den of polynomials in the
 *      L-th tower variable whose coefficients are FEs of lower level.
 *
 *  The canonical form is maintained by every operation: denominators
 *  are monic, num and den are coprime, and any fraction that collapses
 *  to a lower level (constant numerator over denominator 1) is stored
 *  at that lower level.  Zero is always the level-0 constant 0, so
 *  isZero() is structural.
 *
 *  Levels are not uniform inside a polynomial: a coefficient may sit at
 *  any level strictly below its parent, and binary operations lift the
 *  lower operand on the fly.  Derivations live in tower.hpp; this file
 *  is pure field arithmetic.
 */

#include <memory>
#include <string>

#include "integ/poly.hpp"
#include "integ/rational.hpp"

namespace integ {

class FE;
using PolyF = Poly<FE>;

struct FERep;

class FE {
public:
    FE() : lvl_(0), q_() {}
    FE(long n) : lvl_(0), q_(n) {}
    explicit FE(Q v) : lvl_(0), q_(std::move(v)) {}

    /** Build num/den at the given level and normalize fully. */
    static FE fromFraction(int level, PolyF num, PolyF den);
    static FE fromPoly(int level, PolyF num);
    /** The tower variable of the given level (level >= 1). */
    static FE var(int level);

    int level() const { return lvl_; }
    bool isRationalConstant() const { return lvl_ == 0; }
    /** The Q value; only valid at level 0. */
    const Q& qval() const;

    bool isZero() const { return lvl_ == 0 && q_.isZero(); }
    bool isOne() const { return lvl_ == 0 && q_.isOne(); }

    /** View as a fraction of polynomials in the variable of `level`,
     *  which must be >= level().  Elements of lower level become
     *  constant polynomials. */
    std::pair<PolyF, PolyF> asFraction(int level) const;
    /** Numerator / denominator at the element's own level. */
    const PolyF& num() const;
    const PolyF& den() const;

    FE operator-() const;
    FE inverse() const;
    FE pow(long e) const;

    friend FE operator+(const FE& a, const FE& b);
    friend FE operator-(const FE& a, const FE& b);
    friend FE operator*(const FE& a, const FE& b);
    friend FE operator/(const FE& a, const FE& b);
    FE& operator+=(const FE& o) { return *this = *this + o; }
    FE& operator-=(const FE& o) { return *this = *this - o; }
    FE& operator*=(const FE& o) { return *this = *this * o; }
    FE& operator/=(const FE& o) { return *this = *this / o; }

    friend bool operator==(const FE& a, const FE& b);
    friend bool operator!=(const FE& a, const FE& b) { return !(a == b); }

    /** Debug rendering with generic variable names t1, t2, ... */
    std::string str() const;

private:
    static FE make(int level, PolyF num, PolyF den);  // no gcd; trusts coprimality

    int lvl_;
    Q q_;
    std::shared_ptr<const FERep> rep_;
};

struct FERep {
    PolyF num, den;
};

/** Monic gcd in the top variable over the tower field. */
PolyF gcdPolyF(const PolyF& a, const PolyF& b);
PolyF lcmPolyF(const PolyF& a, const PolyF& b);

}  // namespace integ
