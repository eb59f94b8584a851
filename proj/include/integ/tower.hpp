#pragma once
/** @file tower.hpp
 *
 *  The differential tower: an ordered list of generators t1, ..., tn
 *  over the base variable x, each with its derivation.  The derivation
 *  of every generator is polynomial in the generator itself (that is
 *  what makes it a monomial of the tower), so D maps k[t] into k[t] at
 *  every level; derivPoly below relies on this.
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "integ/fe.hpp"

namespace integ {

enum class GenClass {
    BaseVar,           ///< x itself, D x = 1
    Primitive,         ///< D t in the field below (log, atan, li, ei, ...)
    Hyperexponential,  ///< D t / t in the field below
    Hypertangent,      ///< D t / (t^2 + 1) in the field below
    NonlinearOther,    ///< deg(D t) >= 2, no special polynomials assumed
    ConstantGen        ///< transcendental constant, D t = 0
};

struct Generator {
    std::string name;  ///< printable form, e.g. "log(x)"
    GenClass cls = GenClass::Primitive;
    FE dt;             ///< derivative of the generator
    PolyF dtPoly;      ///< the same as a polynomial in the generator
};

class Tower {
public:
    /** Starts with the base variable at level 1. */
    explicit Tower(std::string baseName = "x") {
        Generator g;
        g.name = std::move(baseName);
        g.cls = GenClass::BaseVar;
        g.dt = FE(1);
        g.dtPoly = PolyF::one();
        gens_.push_back(std::move(g));
    }

    /** Number of levels; the top level equals size(). */
    int size() const { return static_cast<int>(gens_.size()); }

    const Generator& gen(int level) const {
        if (level < 1 || level > size()) throw std::domain_error("Tower::gen: bad level");
        return gens_[static_cast<size_t>(level - 1)];
    }

    /** Adjoin a generator; its dt must live at or below the new level.
     *  Returns the new level. */
    int add(Generator g) {
        int level = size() + 1;
        auto [n, d] = g.dt.level() < level ? std::pair<PolyF, PolyF>{PolyF::constant(g.dt), PolyF::one()}
                                           : g.dt.asFraction(level);
        if (!d.isOne())
            throw std::domain_error("Tower::add: derivation of a generator must be polynomial");
        g.dtPoly = n;
        gens_.push_back(std::move(g));
        return level;
    }

    /** delta(t) = deg_t(D t) at the given level. */
    int delta(int level) const {
        int d = gen(level).dtPoly.deg();
        return d < 0 ? 0 : d;
    }
    /** lambda(t) = lc(D t) at the given level. */
    FE lambda(int level) const { return gen(level).dtPoly.lc(); }

    /** The full derivation on tower elements. */
    FE deriv(const FE& f) const {
        if (f.level() == 0) return FE();
        int L = f.level();
        const PolyF& n = f.num();
        const PolyF& d = f.den();
        PolyF dn = derivPoly(n, L);
        if (d.isOne()) return FE::fromFraction(L, std::move(dn), PolyF::one());
        PolyF dd = derivPoly(d, L);
        return FE::fromFraction(L, dn * d - n * dd, d * d);
    }

    /** D restricted to k[t] at the given level (t the level's variable). */
    PolyF derivPoly(const PolyF& p, int level) const {
        PolyF out = derivCoeffwise(p, level);
        const PolyF& dt = gen(level).dtPoly;
        if (!dt.isZero()) out += p.derivative() * dt;
        return out;
    }

    /** Coefficient-wise derivation kappa on k[t]. */
    PolyF derivCoeffwise(const PolyF& p, int level) const {
        (void)level;
        std::vector<FE> c;
        c.reserve(static_cast<size_t>(p.deg() + 1));
        for (int i = 0; i <= p.deg(); ++i) c.push_back(deriv(p.coeff(i)));
        return PolyF(std::move(c));
    }

    bool isConstant(const FE& f) const { return deriv(f).isZero(); }

    /** Evaluate at rational points for the tower variables (index i of
     *  the vector is the value of the level i+1 variable).  Throws
     *  std::domain_error on a vanishing denominator; callers retry with
     *  a different point. */
    Q evalAt(const FE& f, const std::vector<Q>& pt) const {
        if (f.level() == 0) return f.qval();
        int L = f.level();
        if (L > static_cast<int>(pt.size()))
            throw std::domain_error("Tower::evalAt: missing coordinate");
        const Q& x = pt[static_cast<size_t>(L - 1)];
        Q n = evalPolyAt(f.num(), x, pt);
        Q d = evalPolyAt(f.den(), x, pt);
        if (d.isZero()) throw std::domain_error("Tower::evalAt: denominator vanished");
        return n / d;
    }

private:
    Q evalPolyAt(const PolyF& p, const Q& x, const std::vector<Q>& pt) const {
        Q acc(0);
        for (int i = p.deg(); i >= 0; --i) acc = acc * x + evalAt(p.coeff(i), pt);
        return acc;
    }

    std::vector<Generator> gens_;
};

}  // namespace integ
