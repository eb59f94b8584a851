#pragma once
/** @file ratint.hpp
 *
 *  Rational function integration over Q(x): Hermite reduction (quadratic
 *  and linear variants), the Horowitz-Ostrogradsky ansatz, log parts by
 *  subresultant PRS and by reduced lex Groebner basis, full partial
 *  fractions through symbolic-root Laurent expansions, the Rioboo
 *  real-form conversions, and the in-field derivative recognizers.
 *
 *  Conventions.  RF keeps fractions reduced with a monic denominator.
 *  Log parts come back as (rootpoly, argument) pairs meaning
 *      sum over { a : rootpoly(a) = 0 } of a * log(argument(a, x)),
 *  with the argument monic in x and its z-coefficients reduced modulo
 *  the rootpoly.  Assembly into Expr trees happens at the end, where
 *  rootsums over polynomials with rational roots collapse on their own.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "integ/expr.hpp"
#include "integ/mpoly.hpp"
#include "integ/mrat.hpp"
#include "integ/poly.hpp"
#include "integ/polyring.hpp"
#include "integ/rational.hpp"

namespace integ {

using PolyQ = Poly<Q>;
/** Bivariate polynomials in (z, x): main variable x, coefficients in Q[z]. */
using BiPoly = Poly<RingElem<PolyQ>>;

/** Reduced rational function: den monic and nonzero, gcd(num, den) = 1. */
struct RF {
    PolyQ num, den;

    RF() : den(PolyQ::one()) {}
    RF(PolyQ n, PolyQ d);
    static RF fromPoly(PolyQ p) { return RF(std::move(p), PolyQ::one()); }

    bool isZero() const { return num.isZero(); }
    bool isPoly() const { return den.isOne(); }
    RF derivative() const;
    /** Evaluate; nullopt at a pole. */
    std::optional<Q> evalAt(const Q& x) const;

    friend RF operator+(const RF& a, const RF& b) { return RF(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend RF operator-(const RF& a, const RF& b) { return RF(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend RF operator*(const RF& a, const RF& b) { return RF(a.num * b.num, a.den * b.den); }
    friend RF operator/(const RF& a, const RF& b);
    RF operator-() const;
    friend bool operator==(const RF& a, const RF& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const RF& a, const RF& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const;
};

/** One block of a logarithmic part: sum of a*log(arg(a,x)) over the
 *  roots a of rootpoly.  rootpoly is squarefree and nonconstant; arg is
 *  monic in x with coefficients reduced mod rootpoly. */
struct LogTerm {
    PolyQ rootpoly;
    BiPoly arg;
};

/** coeff * arctan(arg). */
struct AtanTerm {
    Q coeff;
    RF arg;
};

/** Assembled integral of a rational function. */
struct RatIntResult {
    RF rationalPart;                ///< proper fraction with the multiple factors
    PolyQ polyPart;                 ///< integral of the polynomial part, already integrated
    std::vector<LogTerm> logTerms;
    std::vector<AtanTerm> atanTerms;  ///< populated by the real-form passes only
};

enum class HermiteVariant { Quadratic, Mack };

/** A/D = g' + h with h having a squarefree denominator.  Requires D
 *  nonzero and coprime with A; A may be improper. */
std::pair<RF, RF> hermiteReduce(const PolyQ& A, const PolyQ& D,
                                HermiteVariant variant = HermiteVariant::Quadratic);

/** Same contract via the undetermined-coefficients linear system;
 *  requires deg A < deg D. */
std::pair<RF, RF> horowitzOstrogradsky(const PolyQ& A, const PolyQ& D);

/** Logarithmic part of the integral of A/D for squarefree D, coprime
 *  with A, deg A < deg D, by the subresultant-PRS method. */
std::vector<LogTerm> intRationalLogPart(const PolyQ& A, const PolyQ& D);

/** Same contract through a reduced lex Groebner basis of (D, A - t D')
 *  with x > t; arguments are monic by construction. */
std::vector<LogTerm> czichowskiLogPart(const PolyQ& A, const PolyQ& D);

/** One principal-part block: sum of coeff(a)/(x-a)^order over the roots
 *  a of rootpoly (coeff reduced mod rootpoly, order >= 1). */
struct PrincipalPart {
    PolyQ rootpoly;
    PolyQ coeff;
    int order;
};

/** Principal parts of A/D at every root of F, where F is the
 *  multiplicity-n block of D's squarefree factorization.  D monic,
 *  gcd(A, D) = 1. */
std::vector<PrincipalPart> laurentSeries(const PolyQ& A, const PolyQ& D, const PolyQ& F, int n);

/** Complete partial fraction decomposition: f = polyPart + sum of parts. */
struct PartialFractionForm {
    PolyQ polyPart;  ///< quotient, not integrated
    std::vector<PrincipalPart> parts;
};
PartialFractionForm fullPartialFraction(const RF& f);

/** Termwise integral of a complete partial fraction decomposition. */
Expr integrateFullPartialFraction(const PartialFractionForm& pf, const std::string& var);

/** Rioboo conversion: a sum of arctangents whose derivative equals
 *  d/dx [ i log((A+iB)/(A-iB)) ].  Entries are (coefficient, argument);
 *  arguments are polynomials in x. */
std::vector<std::pair<Q, PolyQ>> logToAtanTerms(PolyQ A, PolyQ B);
Expr logToAtan(const PolyQ& A, const PolyQ& B, const std::string& var);

/** The same descent over Q(u, v), for the parametric form phi(u, v, x)
 *  used when the root system cannot be solved rationally. */
std::vector<std::pair<Q, Poly<MRat>>> logToAtanParametric(const Poly<MRat>& A, const Poly<MRat>& B);

/** Unconverted complex block kept in parametric form: the sum of
 *  v * phi(u, v, x) over the solutions of P = Q = 0 with v > 0, where
 *  P + iQ = factor(u + iv). */
struct ParametricPhi {
    PolyQ factor;            ///< the rootpoly block this stands for
    MPoly P, Q;              ///< real and imaginary parts of factor(u+iv)
    Expr phi;                ///< phi(u, v, x) as a sum of arctangents
    std::string uName, vName;
};

/** Split of one log block into real-presentable pieces. */
struct RealLogForm {
    std::vector<LogTerm> realLogs;     ///< blocks whose roots are all real
    std::vector<AtanTerm> atans;
    std::vector<LogTerm> unconverted;  ///< left in complex-rootsum form
    std::vector<ParametricPhi> parametric;  ///< phi data for the unconverted blocks
    bool fullyReal = true;
};

/** Rioboo's LogToReal on one block: real-root logs stay logs; complex
 *  conjugate pairs with rational (a, b) become a*log(A^2+B^2) plus
 *  b * LogToAtan(A, B); anything else falls back to the parametric phi
 *  sum and is reported in `unconverted` / `parametric`. */
RealLogForm logToRealForm(const PolyQ& R, const BiPoly& S, const std::string& var);

/** Convenience wrapper assembling the pieces of logToRealForm. */
Expr logToReal(const PolyQ& R, const BiPoly& S, const std::string& var);

/** Hermite reduction, polynomial division, and the LRT log part. */
RatIntResult integrateRationalFunction(const RF& f);

/** Rewrite the log terms of a result in real form (fills atanTerms). */
RealLogForm realizeLogTerms(const std::vector<LogTerm>& terms, const std::string& var);

Expr ratIntResultToExpr(const RatIntResult& r, const std::string& var);

/** One-call driver: integrate and assemble, optionally in real form. */
Expr integrateRationalFunctionExpr(const RF& f, const std::string& var, bool realForm = false);

/** In-field recognizers: u with u' = f, or u with u'/u = f. */
std::optional<RF> isRationalDerivative(const RF& f);
std::optional<RF> isRationalLogDerivative(const RF& f);

// --- support / verification helpers --------------------------------------

/** Number of distinct real roots via a Sturm chain (real coefficients). */
int sturmRealRootCount(const PolyQ& p);

/** Sum of e(a) over the roots a of the squarefree monic modulus,
 *  via Newton power sums; e need not be reduced beforehand. */
Q traceOfMod(const PolyQ& e, const PolyQ& modulus);

/** Inverse of e mod m, or nullopt when gcd(e, m) is nonconstant. */
std::optional<PolyQ> inverseMod(const PolyQ& e, const PolyQ& m);

/** Lift a univariate polynomial to a BiPoly with constant z-coefficients. */
BiPoly biFromPoly(const PolyQ& p);
/** Evaluate the main (x) variable, leaving a polynomial in z. */
PolyQ biEvalX(const BiPoly& s, const Q& x0);
/** Substitute a rational value for z. */
PolyQ biSubstZ(const BiPoly& s, const Q& z0);
/** Reduce every z-coefficient mod m. */
BiPoly biReduceMod(const BiPoly& s, const PolyQ& m);
Expr biToExpr(const BiPoly& s, const std::string& zvar, const std::string& xvar);

/** Value of d/dx [ sum over rootpoly roots of a*log(arg(a,x)) ] at x0;
 *  nullopt when the point is unlucky (pole or non-invertible modulus). */
std::optional<Q> logTermDerivAt(const LogTerm& t, const Q& x0);
/** Value of one principal-part block at x0; same luck contract. */
std::optional<Q> principalPartAt(const PrincipalPart& p, const Q& x0);

/** Exact sample-based identity check: derivative of the assembled
 *  result equals f at enough rational points to force equality. */
bool ratIntVerify(const RatIntResult& r, const RF& f);

}  // namespace integ
