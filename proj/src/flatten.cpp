#include "integ/flatten.hpp"

#include <stdexcept>

namespace integ {
namespace {

MPoly mLcm(const MPoly& a, const MPoly& b) {
    if (a.isZero() || b.isZero()) return MPoly(a.nvars());
    auto d = mExactDivide(a * b, mGcd(a, b));
    return mCanonical(*d);
}

}  // namespace

MFrac flattenFE(const FE& f, int nvars) {
    if (f.level() == 0) {
        return {MPoly::constant(nvars, f.qval()), MPoly::constant(nvars, Q(1))};
    }
    if (f.level() > nvars) throw std::domain_error("flattenFE: level above variable count");
    int v = f.level() - 1;
    auto flattenPoly = [&](const PolyF& p) -> MFrac {
        // common denominator of the coefficients
        std::vector<MFrac> cs;
        MPoly den = MPoly::constant(nvars, Q(1));
        for (int i = 0; i <= p.deg(); ++i) {
            cs.push_back(flattenFE(p.coeff(i), nvars));
            if (!cs.back().num.isZero()) den = mLcm(den, cs.back().den);
        }
        MPoly num(nvars);
        for (int i = 0; i <= p.deg(); ++i) {
            if (cs[static_cast<size_t>(i)].num.isZero()) continue;
            MPoly scale = *mExactDivide(den, cs[static_cast<size_t>(i)].den);
            num += cs[static_cast<size_t>(i)].num * scale * MPoly::var(nvars, v, i);
        }
        return {num, den};
    };
    MFrac n = flattenPoly(f.num());
    MFrac d = flattenPoly(f.den());
    MPoly num = n.num * d.den;
    MPoly den = n.den * d.num;
    MPoly g = mGcd(num, den);
    if (!g.isOne()) {
        num = *mExactDivide(num, g);
        den = *mExactDivide(den, g);
    }
    return {num, den};
}

FE unflattenMPoly(const MPoly& p) {
    FE acc;
    for (const auto& [k, c] : p.terms()) {
        FE term{c};
        for (size_t i = 0; i < k.size(); ++i)
            if (k[i] > 0) term *= FE::var(static_cast<int>(i) + 1).pow(k[i]);
        acc += term;
    }
    return acc;
}

MPoly flattenPolyCleared(const PolyF& p, int level) {
    int nvars = level;
    int v = level - 1;
    std::vector<MFrac> cs;
    MPoly den = MPoly::constant(nvars, Q(1));
    for (int i = 0; i <= p.deg(); ++i) {
        cs.push_back(flattenFE(p.coeff(i), nvars));
        if (!cs.back().num.isZero()) den = mLcm(den, cs.back().den);
    }
    MPoly num(nvars);
    for (int i = 0; i <= p.deg(); ++i) {
        if (cs[static_cast<size_t>(i)].num.isZero()) continue;
        MPoly scale = *mExactDivide(den, cs[static_cast<size_t>(i)].den);
        num += cs[static_cast<size_t>(i)].num * scale * MPoly::var(nvars, v, i);
    }
    return num;
}

}  // namespace integ
