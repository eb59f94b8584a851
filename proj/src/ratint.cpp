#include "integ/ratint.hpp"

#include <algorithm>
#include <stdexcept>

#include "integ/groebner.hpp"
#include "integ/numbers.hpp"

namespace integ {

// ---------------------------------------------------------------- RF ----

RF::RF(PolyQ n, PolyQ d) : num(std::move(n)), den(std::move(d)) {
    if (den.isZero()) throw std::domain_error("RF: zero denominator");
    if (num.isZero()) {
        den = PolyQ::one();
        return;
    }
    PolyQ g = gcdEuclid(num, den);
    if (g.deg() > 0) {
        num = polyExactDivide(num, g);
        den = polyExactDivide(den, g);
    }
    Q l = den.lc();
    if (!l.isOne()) {
        num = num / l;
        den = den / l;
    }
}

RF RF::derivative() const {
    return RF(num.derivative() * den - num * den.derivative(), den * den);
}

std::optional<Q> RF::evalAt(const Q& x) const {
    Q d = den.eval(x);
    if (d.isZero()) return std::nullopt;
    return num.eval(x) / d;
}

RF operator/(const RF& a, const RF& b) {
    if (b.isZero()) throw std::domain_error("RF: division by zero");
    return RF(a.num * b.den, a.den * b.num);
}

RF RF::operator-() const {
    RF r = *this;
    r.num = -r.num;
    return r;
}

std::string RF::str(const std::string& var) const {
    if (den.isOne()) return num.str(var);
    return "(" + num.str(var) + ")/(" + den.str(var) + ")";
}

// ------------------------------------------------------------- helpers ----

namespace {

PolyQ polyIntegrate(const PolyQ& p) {
    if (p.isZero()) return PolyQ();
    std::vector<Q> c(static_cast<size_t>(p.deg() + 2), Q());
    for (int i = 0; i <= p.deg(); ++i)
        c[static_cast<size_t>(i + 1)] = p.coeff(i) / Q(static_cast<long>(i + 1));
    return PolyQ(std::move(c));
}

PolyQ powMod(PolyQ base, int e, const PolyQ& m) {
    PolyQ acc = PolyQ::one();
    base = polyRem(base, m);
    while (e > 0) {
        if (e & 1) acc = polyRem(acc * base, m);
        base = polyRem(base * base, m);
        e >>= 1;
    }
    return acc;
}

int sgnQ(const Q& q) {
    if (q.isZero()) return 0;
    return q < Q(0) ? -1 : 1;
}

/** Exact solution of a rectangular linear system (nullopt when
 *  inconsistent; free unknowns are pinned to zero). */
std::optional<std::vector<Q>> solveLinearQ(std::vector<std::vector<Q>> rows,
                                           std::vector<Q> rhs) {
    size_t n = rows.size();
    size_t m = n == 0 ? 0 : rows[0].size();
    std::vector<int> pivotOf(m, -1);
    size_t rank = 0;
    for (size_t col = 0; col < m && rank < n; ++col) {
        size_t pr = rank;
        while (pr < n && rows[pr][col].isZero()) ++pr;
        if (pr == n) continue;
        std::swap(rows[pr], rows[rank]);
        std::swap(rhs[pr], rhs[rank]);
        Q inv = Q(1) / rows[rank][col];
        for (size_t j = col; j < m; ++j) rows[rank][j] = rows[rank][j] * inv;
        rhs[rank] = rhs[rank] * inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == rank || rows[r][col].isZero()) continue;
            Q f = rows[r][col];
            for (size_t j = col; j < m; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
            rhs[r] = rhs[r] - f * rhs[rank];
        }
        pivotOf[col] = static_cast<int>(rank);
        ++rank;
    }
    for (size_t r = rank; r < n; ++r)
        if (!rhs[r].isZero()) return std::nullopt;
    std::vector<Q> x(m, Q());
    for (size_t col = 0; col < m; ++col)
        if (pivotOf[col] >= 0) x[col] = rhs[static_cast<size_t>(pivotOf[col])];
    return x;
}

std::string freshName(const std::string& avoid) {
    for (const char* c : {"a", "b", "r", "s", "w"})
        if (avoid != c) return c;
    return "a0";
}

}  // namespace

// ------------------------------------------------------ Hermite family ----

static std::pair<RF, RF> hermiteQuadratic(const PolyQ& A0, const PolyQ& D0) {
    RF g;
    PolyQ A = A0, D = D0;
    auto [lead, parts] = squarefreeMusser(D);
    (void)lead;
    for (auto& [V, i] : parts) {
        if (i < 2 || V.deg() == 0) continue;
        PolyQ U = polyExactDivide(D, V.pow(i));
        PolyQ Vp = V.derivative();
        for (int j = i - 1; j >= 1; --j) {
            auto [B, C] = diophantineEuclidean(U * Vp, V, (-A) / Q(static_cast<long>(j)));
            g = g + RF(B, V.pow(j));
            A = C * Q(static_cast<long>(-j)) - U * B.derivative();
        }
        D = U * V;
    }
    return {g, RF(A, D)};
}

static std::pair<RF, RF> hermiteMack(const PolyQ& A0, const PolyQ& D0) {
    RF g;
    PolyQ A = A0;
    PolyQ Dminus = gcdEuclid(D0, D0.derivative());
    PolyQ Dstar = polyExactDivide(D0, Dminus);
    while (Dminus.deg() > 0) {
        PolyQ D2 = gcdEuclid(Dminus, Dminus.derivative());
        PolyQ Dmstar = polyExactDivide(Dminus, D2);
        PolyQ lhs = -polyExactDivide(Dstar * Dminus.derivative(), Dminus);
        auto [B, C] = diophantineEuclidean(lhs, Dmstar, A);
        A = C - B.derivative() * polyExactDivide(Dstar, Dmstar);
        g = g + RF(B, Dminus);
        Dminus = D2;
    }
    return {g, RF(A, Dstar)};
}

std::pair<RF, RF> hermiteReduce(const PolyQ& A, const PolyQ& D, HermiteVariant variant) {
    if (D.isZero()) throw std::domain_error("hermiteReduce: zero denominator");
    return variant == HermiteVariant::Quadratic ? hermiteQuadratic(A, D)
                                                : hermiteMack(A, D);
}

std::pair<RF, RF> horowitzOstrogradsky(const PolyQ& A, const PolyQ& D) {
    if (D.isZero() || A.deg() >= D.deg())
        throw std::domain_error("horowitzOstrogradsky: needs a proper fraction");
    PolyQ Dminus = gcdEuclid(D, D.derivative());
    PolyQ Dstar = polyExactDivide(D, Dminus);
    int nb = Dminus.deg(), nc = Dstar.deg();
    if (nb == 0) return {RF(), RF(A, D)};
    PolyQ T = polyExactDivide(Dstar * Dminus.derivative(), Dminus);
    // Coefficient-match  A = B' D* - B T + C D-  with deg B < deg D-,
    // deg C < deg D*.
    int neq = D.deg();
    std::vector<std::vector<Q>> rows(static_cast<size_t>(neq),
                                     std::vector<Q>(static_cast<size_t>(nb + nc), Q()));
    std::vector<Q> rhs(static_cast<size_t>(neq), Q());
    for (int i = 0; i < neq; ++i) rhs[static_cast<size_t>(i)] = A.coeff(i);
    for (int i = 0; i < nb; ++i) {
        PolyQ xi = PolyQ::monomial(Q(1), i);
        PolyQ col = xi.derivative() * Dstar - xi * T;
        for (int r = 0; r < neq; ++r) rows[static_cast<size_t>(r)][static_cast<size_t>(i)] = col.coeff(r);
    }
    for (int j = 0; j < nc; ++j) {
        PolyQ col = PolyQ::monomial(Q(1), j) * Dminus;
        for (int r = 0; r < neq; ++r)
            rows[static_cast<size_t>(r)][static_cast<size_t>(nb + j)] = col.coeff(r);
    }
    auto sol = solveLinearQ(std::move(rows), std::move(rhs));
    if (!sol) throw std::logic_error("horowitzOstrogradsky: system inconsistent");
    std::vector<Q> bc(sol->begin(), sol->begin() + nb);
    std::vector<Q> cc(sol->begin() + nb, sol->end());
    return {RF(PolyQ(std::move(bc)), Dminus), RF(PolyQ(std::move(cc)), Dstar)};
}

// ------------------------------------------------------ BiPoly support ----

BiPoly biFromPoly(const PolyQ& p) {
    std::vector<RingElem<PolyQ>> c;
    for (int i = 0; i <= p.deg(); ++i) c.emplace_back(PolyQ::constant(p.coeff(i)));
    return BiPoly(std::move(c));
}

PolyQ biEvalX(const BiPoly& s, const Q& x0) {
    PolyQ acc;
    for (int i = s.deg(); i >= 0; --i) acc = acc * x0 + s.coeff(i).p;
    return acc;
}

PolyQ biSubstZ(const BiPoly& s, const Q& z0) {
    std::vector<Q> c;
    for (int i = 0; i <= s.deg(); ++i) c.push_back(s.coeff(i).p.eval(z0));
    return PolyQ(std::move(c));
}

BiPoly biReduceMod(const BiPoly& s, const PolyQ& m) {
    std::vector<RingElem<PolyQ>> c;
    for (int i = 0; i <= s.deg(); ++i) c.emplace_back(polyRem(s.coeff(i).p, m));
    return BiPoly(std::move(c));
}

std::optional<PolyQ> inverseMod(const PolyQ& e, const PolyQ& m) {
    PolyQ er = polyRem(e, m);
    if (er.isZero()) return std::nullopt;
    auto ext = extendedEuclidean(er, m);
    if (!ext.g.isOne()) return std::nullopt;
    return polyRem(ext.s, m);
}

/** Make s monic in x working mod m (the leading x-coefficient is a unit
 *  there whenever the LRT normalization succeeded). */
static BiPoly biMonicMod(const BiPoly& s, const PolyQ& m) {
    if (s.isZero()) return s;
    auto inv = inverseMod(s.lc().p, m);
    if (!inv) throw std::domain_error("log argument: leading coefficient not a unit");
    std::vector<RingElem<PolyQ>> c;
    for (int i = 0; i <= s.deg(); ++i) c.emplace_back(polyRem(s.coeff(i).p * *inv, m));
    return BiPoly(std::move(c));
}

Expr biToExpr(const BiPoly& s, const std::string& zvar, const std::string& xvar) {
    std::vector<Expr> terms;
    Expr x = Expr::var(xvar);
    for (int i = 0; i <= s.deg(); ++i) {
        if (s.coeff(i).isZero()) continue;
        Expr c = polyToExpr(s.coeff(i).p, zvar);
        terms.push_back(i == 0 ? c : Expr::mul({c, Expr::pow(x, Q(static_cast<long>(i)))}));
    }
    return Expr::add(std::move(terms));
}

// ------------------------------------------------------------ log part ----

/** Subresultant PRS of (D, A - z D') with respect to x. */
static PRSRecord<RingElem<PolyQ>> rtPRS(const PolyQ& A, const PolyQ& D) {
    BiPoly Dbi = biFromPoly(D);
    PolyQ Dp = D.derivative();
    int top = std::max(A.deg(), Dp.deg());
    std::vector<RingElem<PolyQ>> w;
    for (int k = 0; k <= top; ++k)
        w.emplace_back(PolyQ(std::vector<Q>{A.coeff(k), -Dp.coeff(k)}));
    BiPoly W(std::move(w));
    return subResultantPRS(Dbi, W);
}

static void checkLogPartInputs(const PolyQ& A, const PolyQ& D, const char* who) {
    if (D.deg() < 1 || A.isZero() || A.deg() >= D.deg())
        throw std::domain_error(std::string(who) + ": needs a proper nonzero fraction");
    if (gcdEuclid(D, D.derivative()).deg() > 0)
        throw std::domain_error(std::string(who) + ": denominator must be squarefree");
    if (gcdEuclid(A, D).deg() > 0)
        throw std::domain_error(std::string(who) + ": gcd(A, D) != 1");
}

std::vector<LogTerm> intRationalLogPart(const PolyQ& A, const PolyQ& D) {
    checkLogPartInputs(A, D, "intRationalLogPart");
    auto rec = rtPRS(A, D);
    PolyQ R = rec.resultant.p;
    if (R.isZero()) throw std::logic_error("intRationalLogPart: vanishing resultant");
    auto [lead, parts] = squarefreeMusser(R);
    (void)lead;
    std::vector<LogTerm> out;
    for (auto& [Qi, i] : parts) {
        if (Qi.deg() == 0) continue;
        BiPoly Si;
        if (i == D.deg()) {
            Si = biFromPoly(D);
        } else {
            bool found = false;
            for (size_t m = 1; m < rec.prs.size(); ++m) {
                if (rec.prs[m].deg() == i) {
                    Si = rec.prs[m];
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("intRationalLogPart: missing PRS degree");
            // Strip the leading-coefficient square content that does not
            // vanish on the roots of Qi.
            auto [l2, aparts] = squarefreeMusser(Si.lc().p);
            (void)l2;
            for (auto& [af, j] : aparts) {
                PolyQ gg = gcdEuclid(af, Qi);
                if (gg.deg() == 0) continue;
                PolyQ gj = gg.pow(j);
                std::vector<RingElem<PolyQ>> c;
                for (int k = 0; k <= Si.deg(); ++k)
                    c.emplace_back(polyExactDivide(Si.coeff(k).p, gj));
                Si = BiPoly(std::move(c));
            }
        }
        out.push_back({Qi, biMonicMod(biReduceMod(Si, Qi), Qi)});
    }
    return out;
}

namespace {

constexpr int kVarX = 0, kVarT = 1;

MPoly mpolyFromPolyIn(const PolyQ& p, int var, int nv) {
    MPoly out(nv);
    MPoly::Key k(static_cast<size_t>(nv), 0);
    for (int i = 0; i <= p.deg(); ++i) {
        if (p.coeff(i).isZero()) continue;
        k[static_cast<size_t>(var)] = i;
        out.addTerm(k, p.coeff(i));
    }
    return out;
}

PolyQ mpolyToPolyIn(const MPoly& p, int var) {
    std::vector<Q> c(static_cast<size_t>(p.degIn(var)) + 1, Q());
    for (auto& [k, v] : p.terms()) {
        for (size_t j = 0; j < k.size(); ++j)
            if (static_cast<int>(j) != var && k[j] != 0)
                throw std::logic_error("mpolyToPolyIn: polynomial not univariate");
        c[static_cast<size_t>(k[static_cast<size_t>(var)])] = v;
    }
    return PolyQ(std::move(c));
}

/** View an (x, t)-polynomial as main variable `mainVar` with univariate
 *  coefficients in the other variable. */
Poly<RingElem<PolyQ>> mpolyToBivar(const MPoly& p, int mainVar, int coefVar) {
    std::vector<RingElem<PolyQ>> c(static_cast<size_t>(p.degIn(mainVar)) + 1,
                                   RingElem<PolyQ>());
    for (auto& [deg, coeff] : p.coeffsWrt(mainVar))
        c[static_cast<size_t>(deg)] = RingElem<PolyQ>(mpolyToPolyIn(coeff, coefVar));
    return Poly<RingElem<PolyQ>>(std::move(c));
}

}  // namespace

std::vector<LogTerm> czichowskiLogPart(const PolyQ& A, const PolyQ& D) {
    checkLogPartInputs(A, D, "czichowskiLogPart");
    MonomialOrder ord{OrderTag::Lex, {kVarX, kVarT}};
    MPoly mD = mpolyFromPolyIn(D, kVarX, 2);
    MPoly mW = mpolyFromPolyIn(A, kVarX, 2) -
               MPoly::var(2, kVarT) * mpolyFromPolyIn(D.derivative(), kVarX, 2);
    std::vector<MPoly> G = reducedBasis(buchberger({mD, mW}, ord, true), ord);
    std::sort(G.begin(), G.end(), [&](const MPoly& a, const MPoly& b) {
        return ord.less(leadingTerm(a, ord).first, leadingTerm(b, ord).first);
    });
    if (G.size() < 2) throw std::logic_error("czichowskiLogPart: degenerate basis");
    std::vector<MPoly> content;
    for (auto& g : G) content.push_back(mContentWrt(kVarX, g));
    std::vector<LogTerm> out;
    for (size_t i = 0; i + 1 < G.size(); ++i) {
        auto quo = mExactDivide(content[i], content[i + 1]);
        if (!quo) throw std::logic_error("czichowskiLogPart: content chain broken");
        if (quo->degIn(kVarT) == 0) continue;
        PolyQ Qi = mpolyToPolyIn(*quo, kVarT);
        MPoly pp = mPpWrt(kVarX, G[i + 1]);
        BiPoly Si = mpolyToBivar(pp, kVarX, kVarT);
        // The primitive part is monic in x up to a rational unit.
        if (!Si.lc().p.isConstant())
            throw std::logic_error("czichowskiLogPart: non-constant leading coefficient");
        Q lc = Si.lc().p.coeff(0);
        std::vector<RingElem<PolyQ>> c;
        for (int k = 0; k <= Si.deg(); ++k)
            c.emplace_back(polyRem(Si.coeff(k).p / lc, Qi));
        out.push_back({Qi, BiPoly(std::move(c))});
    }
    return out;
}

// ------------------------------------------------- full partial fractions ----

std::vector<PrincipalPart> laurentSeries(const PolyQ& A, const PolyQ& D,
                                         const PolyQ& F, int n) {
    std::vector<PrincipalPart> out;
    if (F.deg() == 0) return out;
    PolyQ E = polyExactDivide(D, F.pow(n));
    PolyQ Ep = E.derivative();
    auto eB = extendedEuclidean(E, F);
    auto eC = extendedEuclidean(F.derivative(), F);
    if (!eB.g.isOne() || !eC.g.isOne())
        throw std::domain_error("laurentSeries: F must be one squarefree block of D");
    PolyQ B = polyRem(eB.s, F), C = polyRem(eC.s, F);

    // h = N / (u0^a E^b) with u and its derivatives as fresh variables:
    // variable 0 is x, variable k+1 is u^(k).
    int nv = n + 1;
    MPoly N = mpolyFromPolyIn(A, 0, nv);
    MPoly mE = mpolyFromPolyIn(E, 0, nv), mEp = mpolyFromPolyIn(Ep, 0, nv);
    int a = n, b = 1;

    std::vector<PolyQ> v;  // v_k = F^(k+1) / (k+1)
    PolyQ fd = F;
    for (int k = 0; k < n; ++k) {
        fd = fd.derivative();
        v.push_back(fd / Q(static_cast<long>(k + 1)));
    }

    for (int j = 0; j < n; ++j) {
        MPoly P = N;
        for (int k = 0; k <= j; ++k)
            P = P.substVar(k + 1, mpolyFromPolyIn(v[static_cast<size_t>(k)], 0, nv));
        PolyQ Qx = P.isZero() ? PolyQ() : mpolyToPolyIn(P, 0);
        PolyQ Fstar = Qx.isZero() ? PolyQ::one() : polyExactDivide(F, gcdEuclid(F, Qx));
        if (Fstar.deg() > 0) {
            PolyQ H = polyRem(Qx, Fstar);
            H = polyRem(H * powMod(B, 1 + j, Fstar), Fstar);
            H = polyRem(H * powMod(C, n + j, Fstar), Fstar);
            if (!H.isZero()) out.push_back({Fstar, H, n - j});
        }
        if (j + 1 == n) break;
        // h <- h' / (j+1): quotient rule over the structural denominator.
        MPoly Nd = N.derivWrt(0);
        for (int k = 0; k <= j; ++k)
            Nd += N.derivWrt(k + 1) * MPoly::var(nv, k + 2);
        MPoly u0 = MPoly::var(nv, 1), u1 = MPoly::var(nv, 2);
        N = Nd * u0 * mE -
            N * (MPoly::constant(nv, Q(static_cast<long>(a))) * u1 * mE +
                 MPoly::constant(nv, Q(static_cast<long>(b))) * mEp * u0);
        N = N * (Q(1) / Q(static_cast<long>(j + 1)));
        ++a;
        ++b;
    }
    return out;
}

PartialFractionForm fullPartialFraction(const RF& f) {
    PartialFractionForm out;
    auto qr = polyDivide(f.num, f.den);
    out.polyPart = qr.quo;
    if (qr.rem.isZero()) return out;
    auto [lead, parts] = squarefreeMusser(f.den);
    (void)lead;  // den is monic
    for (auto& [Di, i] : parts) {
        auto blocks = laurentSeries(qr.rem, f.den, Di, i);
        out.parts.insert(out.parts.end(), blocks.begin(), blocks.end());
    }
    return out;
}

Expr integrateFullPartialFraction(const PartialFractionForm& pf, const std::string& var) {
    Expr e = polyToExpr(polyIntegrate(pf.polyPart), var);
    Expr x = Expr::var(var);
    for (auto& part : pf.parts) {
        std::string rv = freshName(var);
        Expr r = Expr::var(rv);
        Expr coeff = polyToExpr(part.coeff, rv);
        Expr summand;
        if (part.order == 1) {
            summand = coeff * Expr::log(x - r);
        } else {
            Q scale = Q(1) / Q(static_cast<long>(1 - part.order));
            summand = Expr::mul({Expr::constant(scale), coeff,
                                 Expr::pow(x - r, Q(static_cast<long>(1 - part.order)))});
        }
        e = e + Expr::rootSum(rv, part.rootpoly, summand);
    }
    return e;
}

// ------------------------------------------------------- real formings ----

template <class K>
static void logToAtanRec(const Poly<K>& A, const Poly<K>& B,
                         std::vector<std::pair<Q, Poly<K>>>& out) {
    auto d = polyDivide(A, B);
    if (d.rem.isZero()) {
        out.emplace_back(Q(2), d.quo);
        return;
    }
    if (A.deg() < B.deg()) {
        logToAtanRec(-B, A, out);
        return;
    }
    auto e = extendedEuclidean(B, -A);
    out.emplace_back(Q(2), polyExactDivide(A * e.s + B * e.t, e.g));
    logToAtanRec(e.s, e.t, out);
}

std::vector<std::pair<Q, PolyQ>> logToAtanTerms(PolyQ A, PolyQ B) {
    if (B.isZero()) throw std::domain_error("logToAtan: zero second argument");
    std::vector<std::pair<Q, PolyQ>> out;
    logToAtanRec(A, B, out);
    return out;
}

Expr logToAtan(const PolyQ& A, const PolyQ& B, const std::string& var) {
    Expr e = Expr::constant(0);
    for (auto& [c, arg] : logToAtanTerms(A, B))
        e = e + Expr::constant(c) * Expr::atan(polyToExpr(arg, var));
    return e;
}

std::vector<std::pair<Q, Poly<MRat>>> logToAtanParametric(const Poly<MRat>& A,
                                                          const Poly<MRat>& B) {
    if (B.isZero()) throw std::domain_error("logToAtan: zero second argument");
    std::vector<std::pair<Q, Poly<MRat>>> out;
    logToAtanRec(A, B, out);
    return out;
}

int sturmRealRootCount(const PolyQ& p) {
    if (p.deg() <= 0) return 0;
    PolyQ g = gcdEuclid(p, p.derivative());
    PolyQ p0 = g.deg() > 0 ? polyExactDivide(p, g) : p;
    std::vector<PolyQ> chain{p0, p0.derivative()};
    while (chain.back().deg() > 0) {
        PolyQ r = -polyRem(chain[chain.size() - 2], chain.back());
        if (r.isZero()) break;
        chain.push_back(r);
    }
    auto variations = [&](bool atPlusInf) {
        int count = 0, prev = 0;
        for (auto& q : chain) {
            if (q.isZero()) continue;
            int s = sgnQ(q.lc());
            if (!atPlusInf && q.deg() % 2 == 1) s = -s;
            if (prev != 0 && s != 0 && s != prev) ++count;
            if (s != 0) prev = s;
        }
        return count;
    };
    return variations(false) - variations(true);
}

namespace {

/** Real/imaginary parts of c(u + iv) as polynomials in (u, v); c must
 *  have real coefficients. */
std::pair<MPoly, MPoly> complexSplit(const PolyQ& c) {
    MPoly re(2), im(2);
    MPoly pr = MPoly::constant(2, Q(1)), pi(2);  // (u+iv)^k
    MPoly u = MPoly::var(2, 0), v = MPoly::var(2, 1);
    for (int k = 0; k <= c.deg(); ++k) {
        Q ck = c.coeff(k);
        if (!ck.isReal())
            throw std::domain_error("logToReal: input must have real coefficients");
        if (!ck.isZero()) {
            re += pr * ck;
            im += pi * ck;
        }
        MPoly nr = pr * u - pi * v;
        pi = pr * v + pi * u;
        pr = std::move(nr);
    }
    return {re, im};
}

Q mEval2(const MPoly& p, const Q& a, const Q& b) {
    MPoly r = p.substVar(0, MPoly::constant(2, a)).substVar(1, MPoly::constant(2, b));
    return r.isZero() ? Q() : r.terms().begin()->second;
}

/** All solutions of P = Q = 0 with rational coordinates and v > 0, or
 *  nullopt when rational elimination cannot certify them. */
std::optional<std::vector<std::pair<Q, Q>>> solvePairSystem(const MPoly& P, const MPoly& Qm) {
    auto Pv = mpolyToBivar(P, 1, 0), Qv = mpolyToBivar(Qm, 1, 0);
    PolyQ Hu = resultant(Pv, Qv).p;
    if (Hu.isZero()) return std::nullopt;
    auto ra = rationalRoots(Hu);
    if (!ra) return std::nullopt;
    std::vector<std::pair<Q, Q>> pairs;
    for (auto& a : *ra) {
        MPoly Pa = P.substVar(0, MPoly::constant(2, a));
        MPoly Qa = Qm.substVar(0, MPoly::constant(2, a));
        PolyQ pv = Pa.isZero() ? PolyQ() : mpolyToPolyIn(Pa, 1);
        PolyQ qv = Qa.isZero() ? PolyQ() : mpolyToPolyIn(Qa, 1);
        PolyQ g;
        if (pv.isZero()) g = qv.monic();
        else if (qv.isZero()) g = pv.monic();
        else g = gcdEuclid(pv, qv);
        if (g.deg() == 0) continue;
        auto rb = rationalRoots(g);
        if (!rb) return std::nullopt;
        for (auto& b : *rb) {
            if (!(Q(0) < b)) continue;
            if (mEval2(P, a, b).isZero() && mEval2(Qm, a, b).isZero())
                pairs.emplace_back(a, b);
        }
    }
    return pairs;
}

Expr mpolyToExpr2(const MPoly& p, const std::string& un, const std::string& vn) {
    std::vector<Expr> terms;
    for (auto& [k, c] : p.terms()) {
        std::vector<Expr> fs{Expr::constant(c)};
        if (k[0] > 0) fs.push_back(Expr::pow(Expr::var(un), Q(static_cast<long>(k[0]))));
        if (k[1] > 0) fs.push_back(Expr::pow(Expr::var(vn), Q(static_cast<long>(k[1]))));
        terms.push_back(Expr::mul(std::move(fs)));
    }
    return Expr::add(std::move(terms));
}

Expr mratToExpr(const MRat& r, const std::string& un, const std::string& vn) {
    Expr n = mpolyToExpr2(r.num, un, vn);
    if (r.den.isOne()) return n;
    return n / mpolyToExpr2(r.den, un, vn);
}

ParametricPhi buildParametricPhi(const PolyQ& factor, const BiPoly& S,
                                 const std::string& var) {
    ParametricPhi out;
    out.factor = factor;
    out.uName = (var == "u" || var == "v") ? "p" : "u";
    out.vName = (var == "u" || var == "v") ? "q" : "v";
    auto [P, Qm] = complexSplit(factor);
    out.P = P;
    out.Q = Qm;
    std::vector<MRat> ac, bc;
    for (int k = 0; k <= S.deg(); ++k) {
        auto [re, im] = complexSplit(S.coeff(k).p);
        ac.emplace_back(std::move(re));
        bc.emplace_back(std::move(im));
    }
    Poly<MRat> Ap(std::move(ac)), Bp(std::move(bc));
    Expr phi = Expr::constant(0);
    Expr x = Expr::var(var);
    for (auto& [c, arg] : logToAtanParametric(Ap, Bp)) {
        std::vector<Expr> terms;
        for (int k = 0; k <= arg.deg(); ++k) {
            if (arg.coeff(k).isZero()) continue;
            Expr ce = mratToExpr(arg.coeff(k), out.uName, out.vName);
            terms.push_back(k == 0 ? ce
                                   : Expr::mul({ce, Expr::pow(x, Q(static_cast<long>(k)))}));
        }
        phi = phi + Expr::constant(c) * Expr::atan(Expr::add(std::move(terms)));
    }
    out.phi = phi;
    return out;
}

Expr logTermToExpr(const LogTerm& t, const std::string& var) {
    if (t.rootpoly.deg() == 1) {
        Q alpha = -(t.rootpoly.coeff(0) / t.rootpoly.coeff(1));
        if (alpha.isZero()) return Expr::constant(0);
        return Expr::constant(alpha) * Expr::log(polyToExpr(biSubstZ(t.arg, alpha), var));
    }
    std::string rv = freshName(var);
    return Expr::rootSum(rv, t.rootpoly,
                         Expr::var(rv) * Expr::log(biToExpr(t.arg, rv, var)));
}

}  // namespace

RealLogForm logToRealForm(const PolyQ& R, const BiPoly& S, const std::string& var) {
    RealLogForm out;
    auto [lead, facs] = factorQ(R);
    (void)lead;
    for (auto& [f, mult] : facs) {
        (void)mult;  // R squarefree
        if (f.deg() == 1) {
            if (!(-f.coeff(0)).isZero()) out.realLogs.push_back({f, biReduceMod(S, f)});
            continue;
        }
        int nReal = sturmRealRootCount(f);
        if (nReal == f.deg()) {
            out.realLogs.push_back({f, biReduceMod(S, f)});
            continue;
        }
        if (nReal == 0) {
            auto [P, Qm] = complexSplit(f);
            auto pairs = solvePairSystem(P, Qm);
            if (pairs && 2 * static_cast<int>(pairs->size()) == f.deg()) {
                for (auto& [a, b] : *pairs) {
                    std::vector<Q> ac, bc;
                    Q z = a + Q::i() * b;
                    for (int k = 0; k <= S.deg(); ++k) {
                        Q val = S.coeff(k).p.eval(z);
                        ac.push_back(Q(val.re()));
                        bc.push_back(Q(val.im()));
                    }
                    PolyQ Ax(std::move(ac)), Bx(std::move(bc));
                    if (!a.isZero())
                        out.realLogs.push_back({PolyQ(std::vector<Q>{-a, Q(1)}),
                                                biFromPoly(Ax * Ax + Bx * Bx)});
                    for (auto& [c, arg] : logToAtanTerms(Ax, Bx))
                        out.atans.push_back({b * c, RF::fromPoly(arg)});
                }
                continue;
            }
        }
        // RootIsolationUnavailable: keep the block as a (real-valued)
        // rootsum and report the parametric phi alongside it.
        out.fullyReal = false;
        out.unconverted.push_back({f, biReduceMod(S, f)});
        out.parametric.push_back(buildParametricPhi(f, S, var));
    }
    return out;
}

Expr logToReal(const PolyQ& R, const BiPoly& S, const std::string& var) {
    RealLogForm form = logToRealForm(R, S, var);
    Expr e = Expr::constant(0);
    for (auto& t : form.realLogs) e = e + logTermToExpr(t, var);
    for (auto& at : form.atans)
        e = e + Expr::constant(at.coeff) *
                    Expr::atan(polyToExpr(at.arg.num, var) / polyToExpr(at.arg.den, var));
    for (auto& t : form.unconverted) e = e + logTermToExpr(t, var);
    return e;
}

RealLogForm realizeLogTerms(const std::vector<LogTerm>& terms, const std::string& var) {
    RealLogForm out;
    for (auto& t : terms) {
        RealLogForm one = logToRealForm(t.rootpoly, t.arg, var);
        out.realLogs.insert(out.realLogs.end(), one.realLogs.begin(), one.realLogs.end());
        out.atans.insert(out.atans.end(), one.atans.begin(), one.atans.end());
        out.unconverted.insert(out.unconverted.end(), one.unconverted.begin(),
                               one.unconverted.end());
        out.parametric.insert(out.parametric.end(), one.parametric.begin(),
                              one.parametric.end());
        out.fullyReal = out.fullyReal && one.fullyReal;
    }
    return out;
}

// ------------------------------------------------------------- drivers ----

RatIntResult integrateRationalFunction(const RF& f) {
    RatIntResult r;
    if (f.isZero()) return r;
    auto [g, h] = hermiteReduce(f.num, f.den, HermiteVariant::Quadratic);
    r.rationalPart = g;
    auto qr = polyDivide(h.num, h.den);
    r.polyPart = polyIntegrate(qr.quo);
    if (!qr.rem.isZero()) r.logTerms = intRationalLogPart(qr.rem, h.den);
    return r;
}

Expr ratIntResultToExpr(const RatIntResult& r, const std::string& var) {
    Expr e = polyToExpr(r.polyPart, var);
    if (!r.rationalPart.isZero())
        e = e + polyToExpr(r.rationalPart.num, var) / polyToExpr(r.rationalPart.den, var);
    for (auto& t : r.logTerms) e = e + logTermToExpr(t, var);
    for (auto& at : r.atanTerms)
        e = e + Expr::constant(at.coeff) *
                    Expr::atan(polyToExpr(at.arg.num, var) / polyToExpr(at.arg.den, var));
    return e;
}

Expr integrateRationalFunctionExpr(const RF& f, const std::string& var, bool realForm) {
    RatIntResult r = integrateRationalFunction(f);
    if (realForm) {
        RealLogForm form = realizeLogTerms(r.logTerms, var);
        r.logTerms = form.realLogs;
        r.logTerms.insert(r.logTerms.end(), form.unconverted.begin(), form.unconverted.end());
        r.atanTerms.insert(r.atanTerms.end(), form.atans.begin(), form.atans.end());
    }
    return ratIntResultToExpr(r, var);
}

// ---------------------------------------------------------- recognizers ----

std::optional<RF> isRationalDerivative(const RF& f) {
    auto [g, h] = hermiteReduce(f.num, f.den, HermiteVariant::Quadratic);
    if (!h.isPoly()) return std::nullopt;
    return g + RF::fromPoly(polyIntegrate(h.num));
}

std::optional<RF> isRationalLogDerivative(const RF& f) {
    if (f.isZero()) return RF::fromPoly(PolyQ::one());
    if (f.isPoly() || f.num.deg() >= f.den.deg()) return std::nullopt;
    if (gcdEuclid(f.den, f.den.derivative()).deg() > 0) return std::nullopt;
    PolyQ R = rtPRS(f.num, f.den).resultant.p;
    if (R.isZero()) return std::nullopt;
    auto roots = integerRoots(R);
    if (!roots) return std::nullopt;
    PolyQ rest = R.monic();
    for (auto& r : *roots) {
        PolyQ lin(std::vector<Q>{-r, Q(1)});
        for (;;) {
            auto d = polyDivide(rest, lin);
            if (!d.rem.isZero()) break;
            rest = d.quo;
        }
    }
    if (rest.deg() > 0) return std::nullopt;  // some residue is not an integer
    RF u = RF::fromPoly(PolyQ::one());
    PolyQ Dp = f.den.derivative();
    for (auto& r : *roots) {
        if (r.isZero()) continue;
        PolyQ g = gcdEuclid(f.den, f.num - r * Dp);
        if (g.deg() == 0) continue;
        long e = r.asLong();
        RF piece = e > 0 ? RF::fromPoly(g.pow(static_cast<int>(e)))
                         : RF(PolyQ::one(), g.pow(static_cast<int>(-e)));
        u = u * piece;
    }
    if (u.derivative() / u != f) return std::nullopt;
    return u;
}

// --------------------------------------------------------- verification ----

Q traceOfMod(const PolyQ& e, const PolyQ& modulus) {
    PolyQ M = modulus.monic();
    int m = M.deg();
    if (m <= 0) return Q();
    PolyQ er = polyRem(e, M);
    std::vector<Q> p(static_cast<size_t>(m), Q());
    p[0] = Q(static_cast<long>(m));
    for (int k = 1; k < m; ++k) {
        Q acc = Q(static_cast<long>(-k)) * M.coeff(m - k);
        for (int i = 1; i < k; ++i) acc = acc - M.coeff(m - i) * p[static_cast<size_t>(k - i)];
        p[static_cast<size_t>(k)] = acc;
    }
    Q tr;
    for (int k = 0; k <= er.deg(); ++k) tr = tr + er.coeff(k) * p[static_cast<size_t>(k)];
    return tr;
}

std::optional<Q> logTermDerivAt(const LogTerm& t, const Q& x0) {
    PolyQ M = t.rootpoly.monic();
    PolyQ s = biEvalX(t.arg, x0);
    PolyQ sd = biEvalX(t.arg.derivative(), x0);
    auto inv = inverseMod(s, M);
    if (!inv) return std::nullopt;
    PolyQ e = polyRem(PolyQ::variable() * sd * *inv, M);
    return traceOfMod(e, M);
}

std::optional<Q> principalPartAt(const PrincipalPart& p, const Q& x0) {
    PolyQ M = p.rootpoly.monic();
    PolyQ base(std::vector<Q>{x0, Q(-1)});  // x0 - z
    auto inv = inverseMod(powMod(base, p.order, M), M);
    if (!inv) return std::nullopt;
    return traceOfMod(polyRem(p.coeff * *inv, M), M);
}

bool ratIntVerify(const RatIntResult& r, const RF& f) {
    auto d0 = [](const auto& p) { return p.isZero() ? 0 : p.deg(); };
    int bound = d0(f.num) + d0(f.den) + 2 * d0(r.rationalPart.den) + d0(r.polyPart) + 1;
    for (auto& t : r.logTerms) bound += 2 * d0(t.rootpoly) * (d0(t.arg) + 1);
    for (auto& at : r.atanTerms) bound += 2 * (d0(at.arg.num) + d0(at.arg.den) + 1);
    int needed = bound + 10;
    RF gd = r.rationalPart.derivative();
    PolyQ pd = r.polyPart.derivative();
    int good = 0;
    for (long k = 1; good < needed && k < 20L * needed + 100; ++k) {
        Q x0(k);
        auto fv = f.evalAt(x0);
        auto gv = gd.evalAt(x0);
        if (!fv || !gv) continue;
        Q acc = *gv + pd.eval(x0);
        bool ok = true;
        for (auto& t : r.logTerms) {
            auto val = logTermDerivAt(t, x0);
            if (!val) { ok = false; break; }
            acc = acc + *val;
        }
        for (auto& at : r.atanTerms) {
            if (!ok) break;
            auto a0 = at.arg.evalAt(x0);
            auto d0 = at.arg.derivative().evalAt(x0);
            if (!a0 || !d0) { ok = false; break; }
            acc = acc + at.coeff * *d0 / (Q(1) + *a0 * *a0);
        }
        if (!ok) continue;
        if (acc != *fv) return false;
        ++good;
    }
    return good == needed;
}

}  // namespace integ
