#include "integ/diffield.hpp"

#include <gmpxx.h>

#include <numeric>
#include <utility>

#include "integ/numbers.hpp"
#include "integ/risch.hpp"

namespace integ {

// ===========================================================================
// Derivations

PolyMap fullDerivation(const Tower& tw, int level) {
    // The map keeps a pointer to the tower; the caller keeps it alive.
    return [t = &tw, level](const PolyF& p) { return t->derivPoly(p, level); };
}

PolyMap kappaDerivation(const Tower& tw, int level) {
    return [t = &tw, level](const PolyF& p) { return t->derivCoeffwise(p, level); };
}

PolyMap formalDerivation() {
    return [](const PolyF& p) { return p.derivative(); };
}

// ===========================================================================
// Splitting factorizations

std::pair<PolyF, PolyF> splitFactor(const PolyF& p, const PolyMap& D) {
    if (p.isZero()) throw std::invalid_argument("splitFactor: zero polynomial");
    if (p.deg() <= 0) return {p, PolyF::one()};
    // gcd(p, Dp) picks up both the special factors and the repeated
    // ones; dividing out gcd(p, dp/dt) leaves exactly one copy of each
    // special factor.  Both gcds are monic, and the second divides the
    // first, so the quotient is exact.
    const PolyF g1 = gcdPolyF(p, D(p));
    const PolyF g2 = gcdPolyF(p, p.derivative());
    const PolyF s = polyExactDivide(g1, g2);
    if (s.deg() == 0) return {p, PolyF::one()};
    auto rec = splitFactor(polyExactDivide(p, s), D);
    return {rec.first, s * rec.second};
}

std::pair<PolyF, PolyF> splitFactor(const PolyF& p, const Tower& tw, int level) {
    return splitFactor(p, fullDerivation(tw, level));
}

std::pair<FE, std::vector<SplitSqfBlock>> splitSquarefreeFactor(const PolyF& p, const PolyMap& D) {
    auto sq = squarefreeMusser(p);
    std::vector<SplitSqfBlock> blocks;
    blocks.reserve(sq.second.size());
    for (const auto& part : sq.second) {
        SplitSqfBlock b;
        b.multiplicity = part.multiplicity;
        // On a squarefree layer the special part is exactly gcd(p_i, D p_i).
        b.special = gcdPolyF(part.factor, D(part.factor));
        b.normal = polyExactDivide(part.factor, b.special);
        blocks.push_back(std::move(b));
    }
    return {sq.first, std::move(blocks)};
}

std::pair<FE, std::vector<SplitSqfBlock>> splitSquarefreeFactor(const PolyF& p, const Tower& tw,
                                                                int level) {
    return splitSquarefreeFactor(p, fullDerivation(tw, level));
}

CanonicalRep canonicalRepresentation(const FE& f, const Tower& tw, int level) {
    auto frac = f.asFraction(level);
    auto qr = polyDivide(frac.first, frac.second);
    CanonicalRep out;
    out.polyPart = qr.quo;
    out.special = FE(0);
    out.normal = FE(0);
    const PolyF& d = frac.second;  // monic
    if (d.deg() == 0) return out;
    auto sp = splitFactor(d, tw, level);
    const PolyF& dn = sp.first;
    const PolyF& ds = sp.second;
    if (ds.deg() == 0) {
        out.normal = FE::fromFraction(level, qr.rem, d);
        return out;
    }
    if (dn.deg() == 0) {
        out.special = FE::fromFraction(level, qr.rem, d);
        return out;
    }
    // r/(dn*ds) = b/ds + c/dn with deg b < deg ds; both summands proper.
    auto bc = diophantineEuclidean(dn, ds, qr.rem);
    out.special = FE::fromFraction(level, bc.first, ds);
    out.normal = FE::fromFraction(level, bc.second, dn);
    return out;
}

// ===========================================================================
// Local data

int orderAtPoly(const PolyF& a, const PolyF& p) {
    if (p.deg() <= 0) throw std::invalid_argument("orderAtPoly: modulus must be nonconstant");
    if (a.isZero()) return ORDER_INF;
    int n = 0;
    PolyF r = a;
    for (;;) {
        auto d = polyDivide(r, p);
        if (!d.rem.isZero()) return n;
        r = std::move(d.quo);
        ++n;
    }
}

int orderAt(const FE& f, const PolyF& p, int level) {
    if (f.isZero()) return ORDER_INF;
    auto frac = f.asFraction(level);
    return orderAtPoly(frac.first, p) - orderAtPoly(frac.second, p);
}

int orderAtInfinity(const FE& f, int level) {
    if (f.isZero()) return ORDER_INF;
    auto frac = f.asFraction(level);
    return frac.second.deg() - frac.first.deg();
}

PolyF remainderAt(const FE& f, const PolyF& a, int level) {
    if (a.deg() <= 0) throw std::invalid_argument("remainderAt: modulus must be nonconstant");
    auto frac = f.asFraction(level);
    try {
        // s*a + t*den = 1, so t is den^{-1} mod a.
        auto st = diophantineEuclidean(a, frac.second, PolyF::one());
        return polyRem(frac.first * st.second, a);
    } catch (const NotInIdeal&) {
        throw NotInLocalRing("remainderAt: denominator vanishes at a root of the modulus");
    }
}

PolyF residueAt(const FE& f, const PolyF& p, const Tower& tw, int level) {
    if (p.deg() <= 0) throw std::invalid_argument("residueAt: p must be nonconstant");
    const PolyF Dp = tw.derivPoly(p, level);
    if (gcdPolyF(p, Dp).deg() != 0) throw std::invalid_argument("residueAt: p is not normal");
    const FE shift = FE::fromFraction(level, p, Dp);
    try {
        return remainderAt(f * shift, p, level);
    } catch (const NotInLocalRing&) {
        throw PoleTooHigh("residueAt: pole of order > 1 at p");
    }
}

// ===========================================================================
// Base-field conversions

static PolyQ polyFToQ(const PolyF& p) {
    PolyQ out;
    for (int i = p.deg(); i >= 0; --i) {
        const FE& c = p.coeff(i);
        if (c.isZero()) continue;
        if (c.level() != 0) throw std::domain_error("expected constant coefficients");
        out += PolyQ::monomial(c.qval(), i);
    }
    return out;
}

static PolyF polyQToF(const PolyQ& p) {
    PolyF out;
    for (int i = p.deg(); i >= 0; --i)
        if (!p.coeff(i).isZero()) out += PolyF::monomial(FE(p.coeff(i)), i);
    return out;
}

RF toBaseRF(const FE& f) {
    if (f.level() > 1) throw std::domain_error("toBaseRF: element is not in the base field");
    auto frac = f.asFraction(1);
    return RF(polyFToQ(frac.first), polyFToQ(frac.second));
}

FE fromBaseRF(const RF& f) { return FE::fromFraction(1, polyQToF(f.num), polyQToF(f.den)); }

// ===========================================================================
// Limited integration over Q(x)

namespace {

/** Row-reduce an M x (k+1) sampled system; nullopt when inconsistent,
 *  otherwise one solution (free unknowns pinned to zero). */
std::optional<std::vector<Q>> solveSampled(std::vector<std::vector<Q>>& rows, size_t k) {
    const size_t m = rows.size();
    size_t rank = 0;
    std::vector<size_t> pivotCol;
    for (size_t col = 0; col < k && rank < m; ++col) {
        size_t piv = rank;
        while (piv < m && rows[piv][col].isZero()) ++piv;
        if (piv == m) continue;
        std::swap(rows[rank], rows[piv]);
        const Q inv = Q(1) / rows[rank][col];
        for (size_t j = col; j <= k; ++j) rows[rank][j] = rows[rank][j] * inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == rank || rows[r][col].isZero()) continue;
            const Q factor = rows[r][col];
            for (size_t j = col; j <= k; ++j)
                rows[r][j] = rows[r][j] - factor * rows[rank][j];
        }
        pivotCol.push_back(col);
        ++rank;
    }
    for (size_t r = rank; r < m; ++r)
        if (!rows[r][k].isZero()) return std::nullopt;
    std::vector<Q> c(k, Q(0));
    for (size_t r = 0; r < rank; ++r) c[pivotCol[r]] = rows[r][k];
    return c;
}

}  // namespace

std::optional<LimitedBase> limitedIntegrateBase(const RF& f, const std::vector<RF>& w) {
    // Integrate everything; the rational/polynomial parts recombine
    // freely, so only the residues (log terms) constrain the c_i.
    std::vector<RatIntResult> parts;
    parts.reserve(w.size() + 1);
    parts.push_back(integrateRationalFunction(f));
    for (const auto& wi : w) parts.push_back(integrateRationalFunction(wi));

    // The difference of log-derivative parts is a proper fraction whose
    // denominator degree is at most `bound`; agreeing on more sample
    // points than that forces functional equality.
    int bound = 0;
    for (const auto& r : parts)
        for (const auto& lt : r.logTerms)
            if (lt.rootpoly.deg() > 0 && lt.arg.deg() > 0)
                bound += lt.rootpoly.deg() * lt.arg.deg();
    const size_t k = w.size();
    const int wanted = bound + static_cast<int>(k) + 5;

    std::vector<std::vector<Q>> rows;
    rows.reserve(static_cast<size_t>(wanted));
    long x0 = 1;
    int misses = 0;
    while (static_cast<int>(rows.size()) < wanted) {
        if (misses > 4 * wanted + 64)
            throw std::logic_error("limitedIntegrateBase: sampling starved");
        const Q pt(x0++);
        std::vector<Q> vals(parts.size(), Q(0));
        bool ok = true;
        for (size_t pi = 0; pi < parts.size() && ok; ++pi) {
            for (const auto& lt : parts[pi].logTerms) {
                auto v = logTermDerivAt(lt, pt);
                if (!v) {
                    ok = false;
                    break;
                }
                vals[pi] = vals[pi] + *v;
            }
        }
        if (!ok) {
            ++misses;
            continue;
        }
        std::vector<Q> row(k + 1);
        for (size_t i = 0; i < k; ++i) row[i] = vals[i + 1];
        row[k] = vals[0];
        rows.push_back(std::move(row));
    }

    auto sol = solveSampled(rows, k);
    if (!sol) return std::nullopt;  // no constants can match even the samples

    // v comes straight from the already-integrated pieces.
    RF v = parts[0].rationalPart + RF::fromPoly(parts[0].polyPart);
    RF resid = f;
    for (size_t i = 0; i < k; ++i) {
        const RF ci = RF::fromPoly(PolyQ::constant((*sol)[i]));
        v = v - (parts[i + 1].rationalPart + RF::fromPoly(parts[i + 1].polyPart)) * ci;
        resid = resid - w[i] * ci;
    }
    if (v.derivative() != resid)
        throw std::logic_error("limitedIntegrateBase: sample bound violated");
    return LimitedBase{v, *sol};
}

// ===========================================================================
// Shared residue stage of the logarithmic recognizers

namespace {

struct ResidueStage {
    Decide status = Decide::Inconclusive;
    FE v = FE(1);   ///< product of gcd powers accounting for all poles
    long m = 1;     ///< common denominator of the residues (radical mode)
    PolyF poly;     ///< f - (1/m) D(v)/v, a polynomial in t
    std::string note;
};

/** Strip the pole part of f as (1/m) D(v)/v, or rule it out.  In
 *  radical mode the residues may be rational; otherwise they must be
 *  integers.  Yes here only means the pole part is consistent; the
 *  polynomial remainder still has to be resolved by the caller. */
ResidueStage residueStage(const FE& f, const Tower& tw, int level, bool radicalMode) {
    ResidueStage out;
    auto frac = f.asFraction(level);
    auto qr = polyDivide(frac.first, frac.second);
    const PolyF& d = frac.second;
    if (d.deg() == 0) {
        out.status = Decide::Yes;
        out.poly = std::move(qr.quo);
        return out;
    }
    const PolyF Dd = tw.derivPoly(d, level);
    if (gcdPolyF(d, Dd).deg() != 0) {
        // Logarithmic derivatives have only first-order poles, all at
        // normal primes (special primes divide their own derivative).
        out.status = Decide::No;
        out.note = "pole part is not simple";
        return out;
    }
    auto rt = rothsteinTragerData(d, qr.rem, tw, level);
    if (rt.resultant.isZero()) {
        out.note = "degenerate resultant";
        return out;
    }
    // Residues are roots of the resultant; the constant ones live in
    // the part that is special under the coefficient-wise derivation.
    auto sp = splitFactor(rt.resultant, kappaDerivation(tw, level));
    if (sp.first.deg() > 0) {
        out.status = Decide::No;
        out.note = "a residue is not constant";
        return out;
    }
    PolyQ rs;
    try {
        rs = polyFToQ(sp.second);
    } catch (const std::domain_error&) {
        out.note = "constant residues did not collapse to rationals";
        return out;
    }
    auto roots = radicalMode ? rationalRoots(rs) : integerRoots(rs);
    if (!roots) {
        out.note = "residue root search abandoned";
        return out;
    }
    std::vector<Q> usable;
    for (const Q& r : *roots)
        if (radicalMode ? r.isReal() : r.isInt()) usable.push_back(r);
    // Every root must be accounted for; anything left over is a residue
    // outside Z (or Q), which rules a logarithmic derivative out.
    PolyQ rest = rs;
    for (const Q& r : usable) {
        const PolyQ lin = PolyQ::variable() - PolyQ::constant(r);
        for (;;) {
            auto dv = polyDivide(rest, lin);
            if (!dv.rem.isZero()) break;
            rest = std::move(dv.quo);
        }
    }
    if (rest.deg() > 0) {
        out.status = Decide::No;
        out.note = radicalMode ? "a residue is not rational" : "a residue is not an integer";
        return out;
    }
    long m = 1;
    if (radicalMode) {
        for (const Q& r : usable) {
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), mpz_class(m).get_mpz_t(), r.re().get_den().get_mpz_t());
            if (!l.fits_slong_p()) {
                out.note = "residue denominators overflow";
                return out;
            }
            m = l.get_si();
        }
    }
    FE v(1);
    for (const Q& r : usable) {
        if (r.isZero()) continue;
        const PolyF g = gcdPolyF(d, qr.rem - Dd * FE(r));
        if (g.deg() == 0) continue;
        const Q e = r * Q(m);  // an integer by the choice of m
        if (!e.re().get_num().fits_slong_p()) {
            out.note = "residue exponent overflow";
            return out;
        }
        v *= FE::fromPoly(level, g).pow(e.asLong());
    }
    out.m = m;
    out.v = v;
    const FE rem = f - tw.deriv(v) / v / FE(Q(m));
    auto rf = rem.asFraction(level);
    if (rf.second.deg() != 0) {
        // With constant integer (or rational) residues the candidate v
        // absorbs every pole; failing that indicates an irregular tower.
        out.status = Decide::Inconclusive;
        out.note = "pole part did not cancel against the residue candidate";
        return out;
    }
    out.poly = std::move(rf.first);
    out.status = Decide::Yes;
    return out;
}

/** One step of limited integration a = D(v) + c * eta over the field
 *  at kLevel, with c constant.  Complete over the constants and over
 *  Q(x); above that, complete for towers of logarithms over Q(x). */
struct LimitedStep {
    Decide status = Decide::Inconclusive;
    FE v;
    Q c;
    std::string note;
};

LimitedStep limitedStep(const FE& a, const FE& eta, const Tower& tw, int kLevel) {
    LimitedStep out;
    if (kLevel <= 0) {
        if (a.isZero()) {
            out.status = Decide::Yes;
            out.v = FE(0);
            return out;
        }
        if (a.level() != 0 || eta.level() > 0) {
            out.note = "constants did not collapse to rationals";
            return out;
        }
        if (eta.isZero()) {
            out.status = Decide::No;
            out.note = "nonzero constant with no matching multiplier";
            return out;
        }
        out.status = Decide::Yes;
        out.v = FE(0);
        out.c = a.qval() / eta.qval();
        return out;
    }
    if (kLevel == 1) {
        auto sol = limitedIntegrateBase(toBaseRF(a), {toBaseRF(eta)});
        if (!sol) {
            out.status = Decide::No;
            out.note = "no rational v and constant c solve a = Dv + c*eta";
            return out;
        }
        out.status = Decide::Yes;
        out.v = fromBaseRF(sol->v);
        out.c = sol->c[0];
        return out;
    }
    // Towers of logarithms over Q(x): any solution v splits as
    // v0(x) + sum lambda_i t_i with constant lambda_i, so the problem
    // drops back to the base field with the eta_i as extra multipliers.
    if (a.level() <= 1 && eta.level() <= 1) {
        bool parallelLogs = true;
        std::vector<RF> ws;
        for (int l = 2; l <= kLevel && parallelLogs; ++l) {
            const PolyF& dt = tw.gen(l).dtPoly;
            if (dt.deg() == 0 && !dt.isZero() && dt.coeff(0).level() <= 1)
                ws.push_back(toBaseRF(dt.coeff(0)));
            else
                parallelLogs = false;
        }
        if (parallelLogs) {
            ws.push_back(toBaseRF(eta));
            auto sol = limitedIntegrateBase(toBaseRF(a), ws);
            if (!sol) {
                out.status = Decide::No;
                out.note = "no solution over the tower of logarithms";
                return out;
            }
            out.status = Decide::Yes;
            out.v = fromBaseRF(sol->v);
            for (int l = 2; l <= kLevel; ++l)
                out.v += FE(sol->c[static_cast<size_t>(l - 2)]) * FE::var(l);
            out.c = sol->c.back();
            return out;
        }
    }
    out.note = "limited integration beyond logarithmic towers";
    return out;
}

std::string decideNote(const std::string& stage, const std::string& detail) {
    return detail.empty() ? stage : stage + ": " + detail;
}

}  // namespace

// ===========================================================================
// classifyShape

GenClass classifyShape(const Tower& tw, int level) {
    if (level <= 1) return GenClass::BaseVar;
    const PolyF& dt = tw.gen(level).dtPoly;
    if (dt.isZero()) return GenClass::ConstantGen;
    if (dt.deg() == 0) return GenClass::Primitive;
    if (dt.deg() == 1 && dt.coeff(0).isZero()) return GenClass::Hyperexponential;
    if (dt.deg() == 2 && dt.coeff(1).isZero() && dt.coeff(0) == dt.coeff(2))
        return GenClass::Hypertangent;
    return GenClass::NonlinearOther;
}

// ===========================================================================
// derivativeQ

DerivativeWitness derivativeQ(const FE& f, const Tower& tw, int level) {
    DerivativeWitness out;
    if (level <= 0) {
        if (f.isZero()) {
            out.status = Decide::Yes;
            out.u = FE(0);
        } else {
            out.status = Decide::No;
            out.note = "a nonzero constant is not a derivative of a constant";
        }
        return out;
    }
    const HermiteMonomial hm = hermiteReduceMonomial(f, tw, level);
    if (!hm.h.isZero()) {
        out.status = Decide::No;
        out.note = "a first-order pole at a normal prime survives Hermite reduction";
        return out;
    }
    FE u = hm.g;
    if (hm.r.isZero()) {
        out.status = Decide::Yes;
        out.u = u;
        return out;
    }
    auto rfrac = hm.r.asFraction(level);
    PolyF p = rfrac.first;
    const PolyF& rden = rfrac.second;  // 1 or a product of specials
    switch (classifyShape(tw, level)) {
        case GenClass::BaseVar:
        case GenClass::Primitive: {
            if (rden.deg() != 0) {
                out.note = "unexpected special denominator in a primitive extension";
                return out;
            }
            const FE eta = tw.gen(level).dt;  // in the field below
            // Integrate the polynomial by peeling leading coefficients:
            // each one must be Dv + c*eta in the field below, feeding a
            // candidate (c/(n+1)) t^{n+1} + v t^n.
            while (p.deg() >= 1) {
                const int n = p.deg();
                auto lim = limitedStep(p.coeff(n), eta, tw, level - 1);
                if (lim.status != Decide::Yes) {
                    out.status = lim.status;
                    out.note = decideNote("coefficient of degree " + std::to_string(n), lim.note);
                    return out;
                }
                const PolyF q0 = PolyF::monomial(FE(lim.c) / FE(n + 1), n + 1) +
                                 PolyF::monomial(lim.v, n);
                u += FE::fromPoly(level, q0);
                p -= tw.derivPoly(q0, level);
            }
            auto lim = limitedStep(p.coeff(0), eta, tw, level - 1);
            if (lim.status != Decide::Yes) {
                out.status = lim.status;
                out.note = decideNote("constant term", lim.note);
                return out;
            }
            u += lim.v + FE(lim.c) * FE::var(level);
            break;
        }
        case GenClass::Hyperexponential: {
            // Laurent expansion around t: D acts diagonally, sending
            // y t^i to (Dy + i*eta*y) t^i; the i = 0 slot recurses and
            // every other slot is a Risch differential equation.
            const int mPow = rden.deg();
            bool powerOfT = true;
            for (int i = 0; i < mPow && powerOfT; ++i)
                if (!rden.coeff(i).isZero()) powerOfT = false;
            if (!powerOfT) {
                out.note = "special denominator is not a power of t";
                return out;
            }
            for (int i = p.deg(); i >= 0; --i) {
                const FE& ai = p.coeff(i);
                if (ai.isZero()) continue;
                if (i == mPow) {
                    auto sub = derivativeQ(ai, tw, level - 1);
                    if (sub.status != Decide::Yes) {
                        out.status = sub.status;
                        out.note = decideNote("free coefficient", sub.note);
                        return out;
                    }
                    u += sub.u;
                } else {
                    out.note =
                        "Risch differential equation in the coefficient field required";
                    return out;
                }
            }
            break;
        }
        case GenClass::Hypertangent: {
            if (rden.deg() != 0) {
                out.note = "coupled differential system at t^2+1 required";
                return out;
            }
            if (p.deg() >= 2) {
                auto pr = polynomialReduceMonomial(p, tw, level);
                u += FE::fromPoly(level, pr.first);
                p = std::move(pr.second);
            }
            if (!p.coeff(1).isZero()) {
                // An antiderivative would need a new log(t^2+1) term.
                out.status = Decide::No;
                out.note = "residual t-coefficient is an obstruction";
                return out;
            }
            auto sub = derivativeQ(p.coeff(0), tw, level - 1);
            if (sub.status != Decide::Yes) {
                out.status = sub.status;
                out.note = decideNote("free coefficient", sub.note);
                return out;
            }
            u += sub.u;
            break;
        }
        case GenClass::ConstantGen:
            out.note = "constant generator extensions are not decided here";
            return out;
        case GenClass::NonlinearOther:
            out.note = "no decision procedure for this nonlinear monomial";
            return out;
    }
    if (tw.deriv(u) != f) {
        out.note = "internal: candidate antiderivative failed verification";
        return out;
    }
    out.status = Decide::Yes;
    out.u = u;
    return out;
}

// ===========================================================================
// logarithmicDerivativeQ

LogDerivWitness logarithmicDerivativeQ(const FE& f, const Tower& tw, int level) {
    LogDerivWitness out;
    if (f.isZero()) {
        out.status = Decide::Yes;
        out.u = FE(1);
        return out;
    }
    if (level <= 0) {
        out.status = Decide::No;
        out.note = "a nonzero constant is not a logarithmic derivative of a constant";
        return out;
    }
    auto rs = residueStage(f, tw, level, /*radicalMode=*/false);
    if (rs.status != Decide::Yes) {
        out.status = rs.status;
        out.note = decideNote("residue stage", rs.note);
        return out;
    }
    FE u = rs.v;
    const PolyF& pt = rs.poly;
    if (!pt.isZero()) {
        const GenClass cls = classifyShape(tw, level);
        const int maxDeg = (cls == GenClass::BaseVar || cls == GenClass::Primitive)
                               ? 1
                               : std::max(1, tw.delta(level));
        if (pt.deg() >= maxDeg) {
            // Log derivatives are v' / v for v = (specials)^e * w; their
            // polynomial part has degree < max(1, delta).
            out.status = Decide::No;
            out.note = "polynomial part too large for a logarithmic derivative";
            return out;
        }
        switch (cls) {
            case GenClass::BaseVar:
            case GenClass::Primitive: {
                auto sub = logarithmicDerivativeQ(pt.coeff(0), tw, level - 1);
                if (sub.status != Decide::Yes) {
                    out.status = sub.status;
                    out.note = decideNote("constant term", sub.note);
                    return out;
                }
                u *= sub.u;
                break;
            }
            case GenClass::Hyperexponential: {
                const FE eta = tw.gen(level).dtPoly.coeff(1);
                const FE c0 = pt.coeff(0);
                // c0 = Dw/w + e*eta for integer e; the two pure shapes
                // are decidable here, the mixed one needs the parametric
                // logarithmic-derivative machinery.
                const FE ratio = c0 / eta;
                if (tw.isConstant(ratio) && ratio.level() == 0 && ratio.qval().isInt()) {
                    u *= FE::var(level).pow(ratio.qval().asLong());
                    break;
                }
                auto sub = logarithmicDerivativeQ(c0, tw, level - 1);
                if (sub.status == Decide::Yes) {
                    u *= sub.u;
                    break;
                }
                out.note = "parametric logarithmic derivative in the exponent required";
                return out;
            }
            case GenClass::Hypertangent: {
                const FE c = tw.gen(level).dtPoly.coeff(0);
                const FE e = pt.coeff(1) / (FE(2) * c);
                if (!tw.isConstant(e) || e.level() != 0 || !e.qval().isInt()) {
                    // The t-coefficient must be 2*e*c for an integer
                    // power of the special t^2+1.
                    out.status = Decide::No;
                    out.note = "t-coefficient is not an integer multiple of 2*Dt/(t^2+1)";
                    return out;
                }
                auto sub = logarithmicDerivativeQ(pt.coeff(0), tw, level - 1);
                if (sub.status != Decide::Yes) {
                    out.status = sub.status;
                    out.note = decideNote("constant term", sub.note);
                    return out;
                }
                PolyF theta = PolyF::monomial(FE(1), 2) + PolyF::one();
                u *= sub.u * FE::fromPoly(level, theta).pow(e.qval().asLong());
                break;
            }
            case GenClass::ConstantGen:
            case GenClass::NonlinearOther:
                out.note = "special polynomials of this monomial are not classified";
                return out;
        }
    }
    if (u.isZero() || tw.deriv(u) / u != f) {
        out.note = "internal: candidate failed verification";
        return out;
    }
    out.status = Decide::Yes;
    out.u = u;
    return out;
}

// ===========================================================================
// radicalLogarithmicDerivativeQ

RadicalWitness radicalLogarithmicDerivativeQ(const FE& f, const Tower& tw, int level) {
    RadicalWitness out;
    if (f.isZero()) {
        out.status = Decide::Yes;
        out.n = 1;
        out.u = FE(1);
        return out;
    }
    if (level <= 0) {
        out.status = Decide::No;
        out.note = "a nonzero constant is not a logarithmic derivative of a radical";
        return out;
    }
    auto rs = residueStage(f, tw, level, /*radicalMode=*/true);
    if (rs.status != Decide::Yes) {
        out.status = rs.status;
        out.note = decideNote("residue stage", rs.note);
        return out;
    }
    long n = rs.m;
    FE u = rs.v;
    const PolyF& pt = rs.poly;
    if (!pt.isZero()) {
        const GenClass cls = classifyShape(tw, level);
        const int maxDeg = (cls == GenClass::BaseVar || cls == GenClass::Primitive)
                               ? 1
                               : std::max(1, tw.delta(level));
        if (pt.deg() >= maxDeg) {
            out.status = Decide::No;
            out.note = "polynomial part too large for a radical logarithmic derivative";
            return out;
        }
        // Combine (1/m) Dv/v with the sub-answer (1/n1) Dw/w over the
        // common denominator lcm(m, n1, ...).
        switch (cls) {
            case GenClass::BaseVar:
            case GenClass::Primitive: {
                auto sub = radicalLogarithmicDerivativeQ(pt.coeff(0), tw, level - 1);
                if (sub.status != Decide::Yes) {
                    out.status = sub.status;
                    out.note = decideNote("constant term", sub.note);
                    return out;
                }
                n = std::lcm(rs.m, sub.n);
                u = rs.v.pow(n / rs.m) * sub.u.pow(n / sub.n);
                break;
            }
            case GenClass::Hyperexponential: {
                const FE eta = tw.gen(level).dtPoly.coeff(1);
                const FE c0 = pt.coeff(0);
                const FE ratio = c0 / eta;
                if (tw.isConstant(ratio) && ratio.level() == 0 && ratio.qval().isReal()) {
                    const mpq_class rho = ratio.qval().re();
                    if (!rho.get_den().fits_slong_p() || !rho.get_num().fits_slong_p()) {
                        out.note = "exponent denominator overflow";
                        return out;
                    }
                    const long n2 = rho.get_den().get_si();
                    const long e = rho.get_num().get_si();
                    n = std::lcm(rs.m, n2);
                    u = rs.v.pow(n / rs.m) * FE::var(level).pow(e * (n / n2));
                    break;
                }
                auto sub = radicalLogarithmicDerivativeQ(c0, tw, level - 1);
                if (sub.status == Decide::Yes) {
                    n = std::lcm(rs.m, sub.n);
                    u = rs.v.pow(n / rs.m) * sub.u.pow(n / sub.n);
                    break;
                }
                out.note = "parametric logarithmic derivative in the exponent required";
                return out;
            }
            case GenClass::Hypertangent: {
                const FE c = tw.gen(level).dtPoly.coeff(0);
                const FE beta = pt.coeff(1) / (FE(2) * c);
                if (!tw.isConstant(beta) || beta.level() != 0 || !beta.qval().isReal()) {
                    out.status = Decide::No;
                    out.note = "t-coefficient is not a rational multiple of 2*Dt/(t^2+1)";
                    return out;
                }
                auto sub = radicalLogarithmicDerivativeQ(pt.coeff(0), tw, level - 1);
                if (sub.status != Decide::Yes) {
                    out.status = sub.status;
                    out.note = decideNote("constant term", sub.note);
                    return out;
                }
                const mpq_class b = beta.qval().re();
                if (!b.get_den().fits_slong_p()) {
                    out.note = "exponent denominator overflow";
                    return out;
                }
                n = std::lcm(std::lcm(rs.m, sub.n), b.get_den().get_si());
                const Q expo = beta.qval() * Q(n);
                PolyF theta = PolyF::monomial(FE(1), 2) + PolyF::one();
                u = rs.v.pow(n / rs.m) * sub.u.pow(n / sub.n) *
                    FE::fromPoly(level, theta).pow(expo.asLong());
                break;
            }
            case GenClass::ConstantGen:
            case GenClass::NonlinearOther:
                out.note = "special polynomials of this monomial are not classified";
                return out;
        }
    }
    if (u.isZero() || tw.deriv(u) / u != FE(n) * f) {
        out.note = "internal: candidate failed verification";
        return out;
    }
    out.status = Decide::Yes;
    out.n = n;
    out.u = u;
    return out;
}

// ===========================================================================
// classify

namespace {

bool feHasImaginary(const FE& v);

bool polyHasImaginary(const PolyF& p) {
    for (const FE& c : p.coeffs())
        if (feHasImaginary(c)) return true;
    return false;
}

bool feHasImaginary(const FE& v) {
    if (v.level() == 0) return !v.qval().isReal();
    return polyHasImaginary(v.num()) || polyHasImaginary(v.den());
}

}  // namespace

Classification classify(const Tower& tw, int level) {
    Classification out;
    out.cls = classifyShape(tw, level);
    const Generator& g = tw.gen(level);
    switch (out.cls) {
        case GenClass::BaseVar:
            out.specialsKnown = true;
            out.certified = true;
            break;
        case GenClass::ConstantGen:
            out.specialsKnown = true;
            out.note = "transcendental constant assumed; every polynomial is special";
            break;
        case GenClass::Primitive: {
            auto ans = derivativeQ(g.dt, tw, level - 1);
            if (ans.status == Decide::Yes)
                throw NotAMonomial(g.name + " - (" + ans.u.str() + ")");
            out.specialsKnown = true;  // a primitive monomial has no specials
            out.certified = ans.status == Decide::No;
            if (!out.certified) out.note = "monomial status assumed: " + ans.note;
            break;
        }
        case GenClass::Hyperexponential: {
            auto ans = radicalLogarithmicDerivativeQ(g.dtPoly.coeff(1), tw, level - 1);
            if (ans.status == Decide::Yes)
                throw NotAMonomial(g.name + "^" + std::to_string(ans.n) + " / (" +
                                   ans.u.str() + ")");
            out.specialIrr = {PolyF::variable()};
            out.specialsKnown = true;
            out.certified = ans.status == Decide::No;
            if (!out.certified) out.note = "monomial status assumed: " + ans.note;
            break;
        }
        case GenClass::Hypertangent: {
            const FE c = g.dtPoly.coeff(0);
            auto ans = radicalLogarithmicDerivativeQ(FE(Q::i()) * c, tw, level - 1);
            if (ans.status == Decide::Yes)
                throw NotAMonomial("(" + g.name + " - i)/(" + g.name + " + i) ~ radical of " +
                                   ans.u.str());
            bool hasI = false;
            for (int l = 2; l <= tw.size() && !hasI; ++l)
                hasI = polyHasImaginary(tw.gen(l).dtPoly);
            const PolyF theta = PolyF::monomial(FE(1), 2) + PolyF::one();
            if (hasI) {
                const PolyF ivar = PolyF::constant(FE(Q::i()));
                out.specialIrr = {PolyF::variable() - ivar, PolyF::variable() + ivar};
            } else {
                out.specialIrr = {theta};
            }
            out.specialsKnown = true;
            out.certified = ans.status == Decide::No;
            if (!out.certified) out.note = "monomial status assumed: " + ans.note;
            break;
        }
        case GenClass::NonlinearOther:
            out.specialsKnown = false;
            out.note = "no monomial test or special classification for this shape";
            break;
    }
    return out;
}

}  // namespace integ
