#pragma once
/** @file mpoly.hpp
 *
 *  Sparse multivariate polynomials over Q. They serve two masters: the
 *  Groebner-basis module, and the tower-field gcd (fe.cpp flattens a
 *  tower fraction to a pair of these, so that gcds can run as primitive
 *  pseudo-remainder sequences over Z instead of a fraction-field Euclid,
 *  which is hopeless for coefficient growth).
 *
 *  Exponent vectors all have the same length nvars(); the zero
 *  polynomial stores no terms.  Terms live in a std::map under plain
 *  lexicographic key order, giving deterministic iteration; monomial
 *  ORDERS for Groebner purposes are imposed externally (groebner.hpp).
 */

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "integ/rational.hpp"

namespace integ {

class MPoly {
public:
    using Key = std::vector<int>;

    MPoly() : nv_(0) {}
    explicit MPoly(int nvars) : nv_(nvars) {}

    static MPoly constant(int nvars, const Q& v) {
        MPoly p(nvars);
        if (!v.isZero()) p.t_[Key(static_cast<size_t>(nvars), 0)] = v;
        return p;
    }
    /** The monomial x_i^e. */
    static MPoly var(int nvars, int i, int e = 1) {
        MPoly p(nvars);
        Key k(static_cast<size_t>(nvars), 0);
        k[static_cast<size_t>(i)] = e;
        p.t_[std::move(k)] = Q(1);
        return p;
    }

    int nvars() const { return nv_; }
    bool isZero() const { return t_.empty(); }
    bool isConstant() const;
    bool isOne() const;
    const std::map<Key, Q>& terms() const { return t_; }
    size_t termCount() const { return t_.size(); }

    /** Degree in variable v; DEG_NEG_INF-like -1 is avoided: zero gives 0. */
    int degIn(int v) const;
    int totalDeg() const;

    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator-() const;
    friend MPoly operator*(const MPoly& a, const Q& s);
    friend MPoly operator*(const Q& s, const MPoly& a) { return a * s; }
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nv_ == b.nv_ && a.t_ == b.t_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly pow(int e) const;

    /** Exponent-in-v -> coefficient (with v zeroed out of the keys). */
    std::map<int, MPoly> coeffsWrt(int v) const;
    static MPoly fromCoeffsWrt(int v, int nvars, const std::map<int, MPoly>& c);
    /** Leading coefficient with respect to v. */
    MPoly lcWrt(int v) const;
    /** Formal derivative with respect to v. */
    MPoly derivWrt(int v) const;
    /** Substitute x_v -> value (a polynomial in the same variable set). */
    MPoly substVar(int v, const MPoly& value) const;

    void addTerm(const Key& k, const Q& c);

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    int nv_;
    std::map<Key, Q> t_;
};

/** Pseudo-division with respect to v: lc^(da-db+1) A = B q + r, deg_v r < deg_v B. */
std::pair<MPoly, MPoly> mPseudoDivWrt(int v, const MPoly& A, const MPoly& B);

/** Exact division A / B, or nullopt when B does not divide A. */
std::optional<MPoly> mExactDivide(const MPoly& A, const MPoly& B);

/** gcd over Q[x...]: integer-primitive with positive leading (lex) coefficient. */
MPoly mGcd(const MPoly& A, const MPoly& B);

/** gcd of the v-coefficients. */
MPoly mContentWrt(int v, const MPoly& A);
/** A divided by its v-content. */
MPoly mPpWrt(int v, const MPoly& A);

/** Divide out rational content and fix the sign of the lex-leading term. */
MPoly mCanonical(const MPoly& A);
/** The rational c with A = c * mCanonical(A); 0 for the zero polynomial. */
Q mContentQ(const MPoly& A);

/** Squarefree decomposition: primitive squarefree blocks with multiplicities
 *  (content handled recursively), plus the rational multiplier. */
std::pair<Q, std::vector<std::pair<MPoly, int>>> mSquarefree(const MPoly& A);

}  // namespace integ
