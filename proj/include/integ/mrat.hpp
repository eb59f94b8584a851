#pragma once
/** @file mrat.hpp
 *
 *  Fraction field of MPoly with a compile-time variable count, shaped to
 *  satisfy the coefficient concept of Poly<K>.  The only heavyweight
 *  client is the parametric arc-tangent conversion, which runs the
 *  Euclidean machinery of poly.hpp over Q(u, v); sizes there stay small,
 *  so every operation simply reduces through mGcd instead of trying to
 *  be clever about common-factor tracking.
 */

#include <string>
#include <utility>

#include "integ/mpoly.hpp"

namespace integ {

template <int NV>
struct MRatT {
    MPoly num, den;

    MRatT() : num(NV), den(MPoly::constant(NV, Q(1))) {}
    MRatT(long n) : num(MPoly::constant(NV, Q(n))), den(MPoly::constant(NV, Q(1))) {}
    explicit MRatT(MPoly n) : num(std::move(n)), den(MPoly::constant(NV, Q(1))) {}
    MRatT(MPoly n, MPoly d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    bool isZero() const { return num.isZero(); }
    bool isOne() const { return num == den; }

    friend MRatT operator+(const MRatT& a, const MRatT& b) {
        return MRatT(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend MRatT operator-(const MRatT& a, const MRatT& b) {
        return MRatT(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    MRatT operator-() const {
        MRatT r = *this;
        r.num = -r.num;
        return r;
    }
    friend MRatT operator*(const MRatT& a, const MRatT& b) {
        return MRatT(a.num * b.num, a.den * b.den);
    }
    friend MRatT operator/(const MRatT& a, const MRatT& b) {
        if (b.isZero()) throw std::domain_error("MRat: division by zero");
        return MRatT(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const MRatT& a, const MRatT& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator!=(const MRatT& a, const MRatT& b) { return !(a == b); }

    /** Substitute rational values for all variables; the denominator
     *  must not vanish there. */
    Q evalAt(const std::vector<Q>& point) const {
        Q n = evalPoly(num, point), d = evalPoly(den, point);
        if (d.isZero()) throw std::domain_error("MRat: pole at evaluation point");
        return n / d;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (den.isOne()) return num.str(names);
        return "(" + num.str(names) + ")/(" + den.str(names) + ")";
    }

private:
    static Q evalPoly(const MPoly& p, const std::vector<Q>& point) {
        MPoly v = p;
        for (int i = 0; i < NV; ++i) v = v.substVar(i, MPoly::constant(NV, point[static_cast<size_t>(i)]));
        return v.isZero() ? Q() : v.terms().begin()->second;
    }

    void reduce() {
        if (den.isZero()) throw std::domain_error("MRat: zero denominator");
        if (num.isZero()) {
            den = MPoly::constant(NV, Q(1));
            return;
        }
        MPoly g = mGcd(num, den);
        if (!g.isOne()) {
            num = *mExactDivide(num, g);
            den = *mExactDivide(den, g);
        }
        // Pin the representative: denominator integer-primitive with the
        // canonical sign, so == could even be a plain field compare.
        Q c = mContentQ(den);
        den = mCanonical(den);
        num = num * MPoly::constant(NV, Q(1) / c);
    }
};

/** The two-variable instance used for real-form conversions over Q(u, v). */
using MRat = MRatT<2>;

}  // namespace integ
