#pragma once
/** @file rational.hpp
 *
 *  Exact constants for the integration engine: arbitrary-precision
 *  rationals with an optional Gaussian (a+bi) part.  The imaginary
 *  component stays identically zero until some algorithm explicitly
 *  adjoins i (the hypertangent machinery does), so ordinary use pays
 *  only for plain rational arithmetic.
 */

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace integ {

/** Exact constant: re + im*i with re, im arbitrary-precision rationals.
 *
 *  Canonical form is inherited from mpq_class: numerator and denominator
 *  coprime, denominator positive, zero stored as 0/1.  All operations are
 *  value-semantic and the class is immutable in spirit (no in-place
 *  mutators beyond assignment).
 */
class Q {
public:
    Q() : re_(0), im_(0) {}
    Q(long n) : re_(n), im_(0) {}
    Q(long num, long den) : re_(num, den), im_(0) {
        if (den == 0) throw std::domain_error("Q: zero denominator");
        re_.canonicalize();
    }
    explicit Q(const mpz_class& z) : re_(z), im_(0) {}
    explicit Q(const mpq_class& q) : re_(q), im_(0) { re_.canonicalize(); }
    Q(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {
        re_.canonicalize();
        im_.canonicalize();
    }

    /** Parse "n" or "n/d" (base 10). */
    static Q fromString(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw std::invalid_argument("Q: bad literal '" + s + "'");
        v.canonicalize();
        return Q(v);
    }
    /** The imaginary unit. */
    static Q i() { return Q(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool isZero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool isOne() const { return re_ == 1 && sgn(im_) == 0; }
    bool isReal() const { return sgn(im_) == 0; }
    /** True when the value is a rational integer. */
    bool isInt() const { return isReal() && re_.get_den() == 1; }
    /** True when the value is a nonnegative rational integer. */
    bool isNat() const { return isInt() && sgn(re_) >= 0; }

    /** The value as a machine integer; throws unless isInt() and small. */
    long asLong() const {
        if (!isInt() || !re_.get_num().fits_slong_p())
            throw std::domain_error("Q: not a machine integer");
        return re_.get_num().get_si();
    }

    Q operator-() const { return Q(-re_, -im_); }
    Q conj() const { return Q(re_, -im_); }
    /** re^2 + im^2 (the Gaussian norm), a real rational. */
    Q norm() const { return Q(re_ * re_ + im_ * im_); }

    friend Q operator+(const Q& a, const Q& b) { return Q(a.re_ + b.re_, a.im_ + b.im_); }
    friend Q operator-(const Q& a, const Q& b) { return Q(a.re_ - b.re_, a.im_ - b.im_); }
    friend Q operator*(const Q& a, const Q& b) {
        if (a.isReal() && b.isReal()) return Q(mpq_class(a.re_ * b.re_));
        return Q(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Q operator/(const Q& a, const Q& b) {
        if (b.isZero()) throw std::domain_error("Q: division by zero");
        if (a.isReal() && b.isReal()) return Q(mpq_class(a.re_ / b.re_));
        mpq_class n = b.re_ * b.re_ + b.im_ * b.im_;
        return Q((a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n);
    }
    Q& operator+=(const Q& o) { return *this = *this + o; }
    Q& operator-=(const Q& o) { return *this = *this - o; }
    Q& operator*=(const Q& o) { return *this = *this * o; }
    Q& operator/=(const Q& o) { return *this = *this / o; }

    friend bool operator==(const Q& a, const Q& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Q& a, const Q& b) { return !(a == b); }
    /** Real-part ordering; only meaningful for real values. */
    friend bool operator<(const Q& a, const Q& b) { return a.re_ < b.re_; }

    Q inverse() const { return Q(1) / *this; }

    /** Total order for sorting keys: by real part, ties by imaginary part. */
    int cmpKey(const Q& o) const {
        int c = cmp(re_, o.re_);
        return c != 0 ? c : cmp(im_, o.im_);
    }

    /** Integer power (negative allowed for nonzero values). */
    Q pow(long e) const {
        if (e == 0) return Q(1);
        if (e < 0) return inverse().pow(-e);
        Q base = *this, acc(1);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /** Exact square root if one exists in Q(i) restricted to rational real/imag parts. */
    std::optional<Q> sqrtExact() const {
        if (!isReal()) return std::nullopt;
        if (sgn(re_) == 0) return Q(0);
        mpq_class a = re_ > 0 ? re_ : mpq_class(-re_);
        mpz_class n = a.get_num(), d = a.get_den(), rn, rd;
        if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
        if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        mpq_class r(rn, rd);
        r.canonicalize();
        return re_ > 0 ? Q(r) : Q(mpq_class(0), r);
    }

    std::string str() const {
        if (isReal()) return re_.get_str();
        std::string s;
        if (sgn(re_) != 0) s += re_.get_str() + (sgn(im_) > 0 ? "+" : "");
        if (im_ == 1) s += "i";
        else if (im_ == -1) s += "-i";
        else s += im_.get_str() + "*i";
        return s;
    }

private:
    mpq_class re_, im_;
};

/** gcd of two rational integers (as Q values); gcd(0,0)=0. */
inline Q gcdQ(const Q& a, const Q& b) {
    if (!a.isInt() || !b.isInt()) throw std::domain_error("gcdQ: integer arguments required");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.re().get_num().get_mpz_t(), b.re().get_num().get_mpz_t());
    return Q(g);
}

/** lcm of two rational integers; lcm(0,x)=0. */
inline Q lcmQ(const Q& a, const Q& b) {
    if (a.isZero() || b.isZero()) return Q(0);
    return a * b / gcdQ(a, b);
}

}  // namespace integ
