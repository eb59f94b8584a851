#pragma once
/** @file poly.hpp
 *
 *  Dense univariate polynomials over a generic coefficient field K,
 *  together with the Euclidean toolbox the integrator is built on:
 *  plain and pseudo division, extended Euclidean algorithm and its
 *  diophantine variants, partial fractions, the subresultant PRS with
 *  exact resultant extraction, and squarefree factorization (Musser and
 *  Yun).
 *
 *  K must be default-constructible to its zero, provide +, -, *, /,
 *  unary -, ==, and the members isZero()/isOne().  Everything here is
 *  exact; there is no floating point anywhere in the engine.
 */

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace integ {

/** Degree of the zero polynomial.  A dedicated sentinel (not -1) so that
 *  arithmetic on degrees cannot silently produce a plausible value. */
constexpr int DEG_NEG_INF = std::numeric_limits<int>::min() / 2;

/** Thrown by diophantineEuclidean when c is not in the ideal (a, b). */
struct NotInIdeal : std::domain_error {
    NotInIdeal() : std::domain_error("diophantine equation: rhs not in the ideal") {}
};

template <class K>
class Poly {
public:
    using coeff_type = K;

    Poly() = default;
    /** Coefficients in ascending order; trailing zeros are trimmed. */
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(K(1)); }
    static Poly constant(K v) {
        Poly p;
        if (!v.isZero()) p.c_.push_back(std::move(v));
        return p;
    }
    /** The monomial v * x^n. */
    static Poly monomial(K v, int n) {
        Poly p;
        if (!v.isZero()) {
            p.c_.assign(static_cast<size_t>(n) + 1, K());
            p.c_.back() = std::move(v);
        }
        return p;
    }
    static Poly variable() { return monomial(K(1), 1); }

    bool isZero() const { return c_.empty(); }
    bool isConstant() const { return c_.size() <= 1; }
    bool isOne() const { return c_.size() == 1 && c_[0].isOne(); }

    int deg() const { return c_.empty() ? DEG_NEG_INF : static_cast<int>(c_.size()) - 1; }
    /** Leading coefficient; lc(0) = 0. */
    K lc() const { return c_.empty() ? K() : c_.back(); }
    /** Coefficient of x^i (zero outside the stored range). */
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K();
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<K>& coeffs() const { return c_; }

    K eval(const K& x) const {
        K acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /** Formal derivative with respect to the polynomial variable. */
    Poly derivative() const {
        Poly d;
        for (size_t i = 1; i < c_.size(); ++i) d.c_.push_back(c_[i] * K(static_cast<long>(i)));
        d.trim();
        return d;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), K());
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), K());
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        r.trim();
        return r;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.isZero() || b.isZero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, K());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].isZero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const K& s) {
        if (s.isZero()) return Poly();
        Poly r = a;
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }
    friend Poly operator*(const K& s, const Poly& a) { return a * s; }
    /** Exact scalar division. */
    friend Poly operator/(const Poly& a, const K& s) {
        Poly r = a;
        for (auto& x : r.c_) x = x / s;
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a.c_ == b.c_); }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /** Multiply by x^n. */
    Poly shift(int n) const {
        if (isZero() || n == 0) return *this;
        if (n < 0) throw std::domain_error("Poly::shift: negative shift");
        Poly r;
        r.c_.assign(c_.size() + static_cast<size_t>(n), K());
        std::copy(c_.begin(), c_.end(), r.c_.begin() + n);
        return r;
    }

    Poly pow(int e) const {
        if (e < 0) throw std::domain_error("Poly::pow: negative exponent");
        Poly acc = one(), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /** this / lc(); no-op on zero. */
    Poly monic() const {
        if (isZero() || lc().isOne()) return *this;
        return *this / lc();
    }

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().isZero()) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
struct DivResult {
    Poly<K> quo, rem;
};

/** Euclidean division over a field: a = b*quo + rem with deg rem < deg b. */
template <class K>
DivResult<K> polyDivide(const Poly<K>& a, const Poly<K>& b) {
    if (b.isZero()) throw std::domain_error("polyDivide: division by zero polynomial");
    Poly<K> q, r = a;
    const K ilc = K(1) / b.lc();
    while (!r.isZero() && r.deg() >= b.deg()) {
        K t = r.lc() * ilc;
        int d = r.deg() - b.deg();
        Poly<K> m = Poly<K>::monomial(t, d);
        q += m;
        r -= m * b;
    }
    return {q, r};
}

/** Remainder only. */
template <class K>
Poly<K> polyRem(const Poly<K>& a, const Poly<K>& b) {
    return polyDivide(a, b).rem;
}

/** Exact quotient; throws if the division leaves a remainder. */
template <class K>
Poly<K> polyExactDivide(const Poly<K>& a, const Poly<K>& b) {
    auto d = polyDivide(a, b);
    if (!d.rem.isZero()) throw std::domain_error("polyExactDivide: inexact division");
    return d.quo;
}

/** Pseudo-division: lc(b)^(deg a - deg b + 1) * a = b*pquo + prem.
 *  Only ring operations on K are used, so this is safe over any
 *  integral domain embedded in K. */
template <class K>
DivResult<K> polyPseudoDivide(const Poly<K>& a, const Poly<K>& b) {
    if (b.isZero()) throw std::domain_error("polyPseudoDivide: division by zero polynomial");
    int N = a.deg() - b.deg() + 1;
    if (N <= 0) return {Poly<K>(), a};
    const K bl = b.lc();
    Poly<K> q, r = a;
    while (!r.isZero() && r.deg() >= b.deg()) {
        int d = r.deg() - b.deg();
        Poly<K> m = Poly<K>::monomial(r.lc(), d);
        q = q * bl + m;
        r = r * bl - m * b;
        --N;
    }
    // Normalize so the defining identity holds with the full power of lc(b).
    K f(1);
    for (; N > 0; --N) f = f * bl;
    return {q * f, r * f};
}

/** Monic gcd by the Euclidean algorithm (coefficients in a field).
 *  Each remainder is rescaled to monic, which keeps coefficient growth
 *  tolerable for the base field; tower fields use the subresultant
 *  route in fe.hpp instead. */
template <class K>
Poly<K> gcdEuclid(Poly<K> a, Poly<K> b) {
    while (!b.isZero()) {
        Poly<K> r = polyRem(a, b).monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class K>
Poly<K> lcmPoly(const Poly<K>& a, const Poly<K>& b) {
    if (a.isZero() || b.isZero()) return Poly<K>();
    return polyExactDivide(a * b, gcdEuclid(a, b)).monic();
}

template <class K>
struct ExtEuclid {
    Poly<K> g, s, t;  ///< s*a + t*b = g, g the monic gcd
};

/** Extended Euclidean algorithm; returns the monic gcd together with
 *  the Bezout cofactors. */
template <class K>
ExtEuclid<K> extendedEuclidean(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> s0 = Poly<K>::one(), s1 = Poly<K>::zero();
    Poly<K> t0 = Poly<K>::zero(), t1 = Poly<K>::one();
    while (!r1.isZero()) {
        auto d = polyDivide(r0, r1);
        Poly<K> r2 = d.rem;
        Poly<K> s2 = s0 - d.quo * s1;
        Poly<K> t2 = t0 - d.quo * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.isZero()) return {r0, s0, t0};
    K l = r0.lc();
    return {r0 / l, s0 / l, t0 / l};
}

/** Half-extended variant: only the cofactor of a is carried through the
 *  recursion; the second cofactor can be recovered as (g - s*a)/b. */
template <class K>
std::pair<Poly<K>, Poly<K>> halfExtendedEuclidean(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> s0 = Poly<K>::one(), s1 = Poly<K>::zero();
    while (!r1.isZero()) {
        auto d = polyDivide(r0, r1);
        Poly<K> r2 = d.rem;
        Poly<K> s2 = s0 - d.quo * s1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    if (r0.isZero()) return {r0, s0};
    K l = r0.lc();
    return {r0 / l, s0 / l};
}

/** Solve s*a + t*b = c with deg s < deg b (a, b nonzero, not both
 *  sharing a factor with c missing).  Throws NotInIdeal when c is not a
 *  multiple of gcd(a, b). */
template <class K>
std::pair<Poly<K>, Poly<K>> diophantineEuclidean(const Poly<K>& a, const Poly<K>& b,
                                                 const Poly<K>& c) {
    auto e = extendedEuclidean(a, b);
    auto d = polyDivide(c, e.g);
    if (!d.rem.isZero()) throw NotInIdeal();
    Poly<K> s = e.s * d.quo;
    if (!s.isZero() && s.deg() >= b.deg()) s = polyDivide(s, b).rem;
    Poly<K> t = polyExactDivide(c - s * a, b);
    return {s, t};
}

/** Half version of the diophantine solver: just s with s*a = c (mod b),
 *  deg s < deg b. */
template <class K>
Poly<K> diophantineHalf(const Poly<K>& a, const Poly<K>& b, const Poly<K>& c) {
    auto e = halfExtendedEuclidean(a, b);
    auto d = polyDivide(c, e.first);
    if (!d.rem.isZero()) throw NotInIdeal();
    Poly<K> s = e.second * d.quo;
    if (!s.isZero() && s.deg() >= b.deg()) s = polyDivide(s, b).rem;
    return s;
}

/** Complete partial fraction decomposition:
 *      a / prod d_i^{e_i}  =  a0 + sum_{i,j<=e_i} parts[i][j-1] / d_i^j
 *  with deg parts[i][j-1] < deg d_i.  The d_i must be pairwise coprime. */
template <class K>
struct PartialFractions {
    Poly<K> a0;
    std::vector<std::vector<Poly<K>>> parts;
};

template <class K>
PartialFractions<K> partialFraction(const Poly<K>& a,
                                    const std::vector<std::pair<Poly<K>, int>>& factors) {
    PartialFractions<K> out;
    // Peel the polynomial part first, then split across the coprime
    // moduli, then expand each numerator d_i-adically.
    Poly<K> den = Poly<K>::one();
    for (auto& [d, e] : factors) den *= d.pow(e);
    auto qr = polyDivide(a, den);
    out.a0 = qr.quo;
    Poly<K> num = qr.rem;

    std::vector<Poly<K>> nums(factors.size());
    Poly<K> rest = den;
    for (size_t i = 0; i < factors.size(); ++i) {
        Poly<K> di = factors[i].first.pow(factors[i].second);
        rest = polyExactDivide(rest, di);
        if (i + 1 == factors.size()) {
            nums[i] = num;
            break;
        }
        // num/(di*rest) = s/di + t/rest with s = num * rest^{-1} mod di
        Poly<K> s = diophantineHalf(rest, di, polyRem(num, di));
        nums[i] = s;
        num = polyExactDivide(num - s * rest, di);
    }
    for (size_t i = 0; i < factors.size(); ++i) {
        const Poly<K>& d = factors[i].first;
        int e = factors[i].second;
        std::vector<Poly<K>> col(static_cast<size_t>(e));
        Poly<K> n = nums[i];
        for (int j = e; j >= 1; --j) {
            auto dd = polyDivide(n, d);
            col[static_cast<size_t>(j - 1)] = dd.rem;
            n = dd.quo;
        }
        out.parts.push_back(std::move(col));
    }
    return out;
}

/** Subresultant polynomial remainder sequence together with the exact
 *  resultant res(A, B).  Requires deg A >= deg B >= 0; resultant() below
 *  handles the general case including the swap sign. */
template <class K>
struct PRSRecord {
    std::vector<Poly<K>> prs;  ///< R_0 = A, R_1 = B, ..., last nonzero remainder
    K resultant;
};

template <class K>
PRSRecord<K> subResultantPRS(const Poly<K>& A, const Poly<K>& B) {
    if (A.deg() < B.deg() || B.isZero())
        throw std::domain_error("subResultantPRS: requires deg A >= deg B >= 0");
    PRSRecord<K> out;
    std::vector<Poly<K>>& R = out.prs;
    R.push_back(A);
    R.push_back(B);
    std::vector<K> beta;   // beta[i] used to produce R_{i+1}
    std::vector<int> delta;  // delta[i] = deg R_{i-1} - deg R_i
    K gamma = -K(1);
    delta.push_back(0);  // placeholder for index 0
    delta.push_back(A.deg() - B.deg());
    {
        K b1 = (delta[1] % 2 == 0) ? -K(1) : K(1);  // (-1)^(delta_1 + 1)
        beta.push_back(K());                        // placeholder index 0
        beta.push_back(b1);
    }
    size_t i = 1;
    while (!R[i].isZero()) {
        auto pd = polyPseudoDivide(R[i - 1], R[i]);
        Poly<K> next = pd.rem / beta[i];
        R.push_back(next);
        K rlc = R[i].lc();
        // gamma_{i+1} = (-lc R_i)^{delta_i} * gamma_i^{1 - delta_i}
        K g = K(1);
        for (int k = 0; k < delta[i]; ++k) g = g * (-rlc);
        if (delta[i] == 0)
            g = g * gamma;
        else
            for (int k = 0; k < delta[i] - 1; ++k) g = g / gamma;
        gamma = g;
        int dnext = next.isZero() ? 0 : R[i].deg() - next.deg();
        delta.push_back(dnext);
        K b = -rlc;
        for (int k = 0; k < dnext; ++k) b = b * gamma;
        beta.push_back(b);
        ++i;
    }
    size_t k = i - 1;  // last nonzero remainder
    R.pop_back();      // drop the trailing zero from the record
    if (R[k].deg() > 0) {
        out.resultant = K();
        return out;
    }
    if (k >= 1 && R[k - 1].deg() == 1) {
        out.resultant = R[k].lc();
        return out;
    }
    // Accumulate the correction factor as one numerator/denominator pair
    // and divide exactly once at the end, so the same code path works for
    // coefficient rings (where intermediate quotients need not exist).
    K s(1), cNum(1), cDen(1);
    for (size_t j = 1; j < k; ++j) {
        bool odd0 = (R[j - 1].deg() % 2) != 0;
        bool odd1 = (R[j].deg() % 2) != 0;
        if (odd0 && odd1) s = -s;
        K rj = R[j].lc();
        for (int t = 0; t < R[j].deg(); ++t) cNum = cNum * beta[j];
        int e = R[j - 1].deg() - R[j + 1].deg() - (1 + delta[j]) * R[j].deg();
        for (int t = 0; t < e; ++t) cNum = cNum * rj;
        for (int t = 0; t < -e; ++t) cDen = cDen * rj;
    }
    K rk = R[k].lc();
    for (int t = 0; t < R[k - 1].deg(); ++t) cNum = cNum * rk;
    out.resultant = (s * cNum) / cDen;
    return out;
}

/** Resultant for arbitrary degrees; res(A,B) = (-1)^(deg A * deg B) res(B,A). */
template <class K>
K resultant(const Poly<K>& A, const Poly<K>& B) {
    if (A.isZero() || B.isZero()) return K();
    if (A.isConstant() && B.isConstant()) return K(1);
    if (A.isConstant()) {
        K r(1);
        for (int t = 0; t < B.deg(); ++t) r = r * A.lc();
        return r;
    }
    if (B.isConstant()) {
        K r(1);
        for (int t = 0; t < A.deg(); ++t) r = r * B.lc();
        return r;
    }
    if (A.deg() >= B.deg()) return subResultantPRS(A, B).resultant;
    K r = subResultantPRS(B, A).resultant;
    if ((A.deg() % 2) != 0 && (B.deg() % 2) != 0) r = -r;
    return r;
}

/** One factor of a squarefree decomposition: factor^multiplicity. */
template <class K>
struct SqfPart {
    Poly<K> factor;
    int multiplicity;
};

/** Squarefree decomposition, Musser's algorithm.  Returns the leading
 *  coefficient and the nontrivial parts; prod factor^mult * lead == input. */
template <class K>
std::pair<K, std::vector<SqfPart<K>>> squarefreeMusser(const Poly<K>& A) {
    std::vector<SqfPart<K>> parts;
    if (A.isZero()) return {K(), parts};
    K lead = A.lc();
    Poly<K> a = A.monic();
    if (a.deg() <= 0) return {lead, parts};
    Poly<K> g = gcdEuclid(a, a.derivative());
    if (g.isConstant()) {
        parts.push_back({a, 1});
        return {lead, parts};
    }
    Poly<K> s = polyExactDivide(a, g);
    int k = 1;
    while (g.deg() > 0) {
        Poly<K> y = gcdEuclid(s, g);
        Poly<K> ak = polyExactDivide(s, y);
        if (ak.deg() > 0) parts.push_back({ak, k});
        s = y;
        g = polyExactDivide(g, y);
        ++k;
    }
    if (s.deg() > 0) parts.push_back({s, k});
    return {lead, parts};
}

/** Squarefree decomposition, Yun's algorithm (fewer gcds; same output
 *  contract as squarefreeMusser). */
template <class K>
std::pair<K, std::vector<SqfPart<K>>> squarefreeYun(const Poly<K>& A) {
    std::vector<SqfPart<K>> parts;
    if (A.isZero()) return {K(), parts};
    K lead = A.lc();
    Poly<K> a = A.monic();
    if (a.deg() <= 0) return {lead, parts};
    Poly<K> g = gcdEuclid(a, a.derivative());
    if (g.isConstant()) {
        parts.push_back({a, 1});
        return {lead, parts};
    }
    Poly<K> c = polyExactDivide(a, g);
    Poly<K> d = polyExactDivide(a.derivative(), g) - c.derivative();
    int k = 1;
    while (c.deg() > 0) {
        Poly<K> ak = gcdEuclid(c, d);
        if (ak.deg() > 0) parts.push_back({ak, k});
        c = polyExactDivide(c, ak);
        d = polyExactDivide(d, ak) - c.derivative();
        ++k;
    }
    return {lead, parts};
}

/** content/primitive-part with a caller-supplied gcd on K.
 *  content(0) = 0 and pp(0) = 0 by convention. */
template <class K, class GcdF>
std::pair<K, Poly<K>> contentPP(const Poly<K>& p, GcdF&& gcd) {
    if (p.isZero()) return {K(), Poly<K>()};
    K c{};
    bool first = true;
    for (const K& x : p.coeffs()) {
        if (x.isZero()) continue;
        c = first ? x : gcd(c, x);
        first = false;
    }
    return {c, p / c};
}

template <class K>
std::string Poly<K>::str(const std::string& var) const {
    if (isZero()) return "0";
    std::string out;
    for (int i = deg(); i >= 0; --i) {
        K v = coeff(i);
        if (v.isZero()) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || !v.isOne()) {
            out += "(" + v.str() + ")";
            if (i > 0) out += "*";
        }
        if (i > 0) {
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace integ
