#include "integ/risch.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "integ/diffield.hpp"

namespace integ {

HermiteMonomial hermiteReduceMonomial(const FE& f, const Tower& tw, int level) {
    const CanonicalRep cr = canonicalRepresentation(f, tw, level);
    auto frac = cr.normal.asFraction(level);
    PolyF a = frac.first;
    PolyF d = frac.second;  // monic, a product of normal irreducibles
    FE g(0);
    if (d.deg() > 0) {
        // Work one squarefree layer at a time: each pass through the
        // inner loop trades a pole of order j+1 at v for one of order j,
        // moving the difference into g.
        auto sqf = squarefreeMusser(d);
        for (const auto& part : sqf.second) {
            const int i = part.multiplicity;
            if (i < 2 || part.factor.deg() == 0) continue;
            const PolyF& v = part.factor;
            PolyF u = polyExactDivide(d, v.pow(i));
            const PolyF Dv = tw.derivPoly(v, level);
            for (int j = i - 1; j >= 1; --j) {
                auto bc = diophantineEuclidean(u * Dv, v, a / FE(-j));
                const PolyF& b = bc.first;
                g += FE::fromFraction(level, b, v.pow(j));
                a = bc.second * FE(-j) - u * tw.derivPoly(b, level);
            }
            d = u * v;
        }
    }
    auto qr = polyDivide(a, d);
    HermiteMonomial out;
    out.g = g;
    out.h = FE::fromFraction(level, qr.rem, d);
    out.r = FE::fromPoly(level, qr.quo + cr.polyPart) + cr.special;
    return out;
}

std::pair<PolyF, PolyF> polynomialReduceMonomial(const PolyF& p, const Tower& tw, int level) {
    const int dlt = tw.delta(level);
    if (dlt < 2)
        throw std::domain_error("polynomialReduceMonomial: monomial must be nonlinear");
    const FE lam = tw.lambda(level);
    PolyF q, r = p;
    while (r.deg() >= dlt) {
        const int m = r.deg() - dlt + 1;
        PolyF q0 = PolyF::monomial(r.lc() / (FE(m) * lam), m);
        r -= tw.derivPoly(q0, level);  // cancels the leading term exactly
        q += q0;
    }
    return {q, r};
}

BiPolyF biLift(const PolyF& p) {
    BiPolyF r;
    for (int i = p.deg(); i >= 0; --i)
        if (!p.coeff(i).isZero())
            r += BiPolyF::monomial(RingElem<PolyF>(PolyF::constant(p.coeff(i))), i);
    return r;
}

PolyF biSubstZF(const BiPolyF& s, const FE& z0) {
    PolyF out;
    for (int i = s.deg(); i >= 0; --i) {
        const PolyF& cz = s.coeff(i).p;
        FE v(0);
        for (int j = cz.deg(); j >= 0; --j) v = v * z0 + cz.coeff(j);
        if (!v.isZero()) out += PolyF::monomial(v, i);
    }
    return out;
}

ResidueData rothsteinTragerData(const PolyF& d, const PolyF& a, const Tower& tw, int level) {
    const PolyF Dd = tw.derivPoly(d, level);
    const int n = std::max(a.deg(), Dd.deg());
    BiPolyF pencil;  // a - z * D(d), coefficients linear in z
    for (int i = n; i >= 0; --i) {
        PolyF cz;
        if (!a.coeff(i).isZero()) cz += PolyF::constant(a.coeff(i));
        if (!Dd.coeff(i).isZero()) cz -= PolyF::monomial(Dd.coeff(i), 1);
        if (!cz.isZero()) pencil += BiPolyF::monomial(RingElem<PolyF>(cz), i);
    }
    ResidueData out;
    BiPolyF A = biLift(d), B = pencil;
    if (B.isZero()) return out;  // resultant 0: d shares a factor with the zero pencil
    out.swapped = A.deg() < B.deg();
    if (out.swapped) std::swap(A, B);
    if (B.deg() == 0) {
        RingElem<PolyF> r(1);
        for (int j = 0; j < A.deg(); ++j) r = r * B.lc();
        out.resultant = r.p;
        out.prs = {A, B};
        return out;
    }
    auto rec = subResultantPRS(A, B);
    out.prs = std::move(rec.prs);
    out.resultant = rec.resultant.p;
    return out;
}

}  // namespace integ
