#include "integ/fe.hpp"

#include <stdexcept>

#include "integ/flatten.hpp"

namespace integ {

namespace {
int maxCoeffLevel(const PolyF& p) {
    int m = 0;
    for (int i = 0; i <= p.deg(); ++i) m = std::max(m, p.coeff(i).level());
    return m;
}
}  // namespace

/** Monic gcd in the top variable.  Plain Euclid is fine over constant
 *  coefficients; over genuine tower coefficients the fraction-field
 *  remainder sequence blows up, so flatten to multivariate polynomials
 *  and run the primitive PRS there instead. */
PolyF gcdPolyF(const PolyF& a, const PolyF& b) {
    if (a.isZero()) return b.monic();
    if (b.isZero()) return a.monic();
    if (a.isConstant() || b.isConstant()) return PolyF::one();
    int maxLvl = std::max(maxCoeffLevel(a), maxCoeffLevel(b));
    if (maxLvl == 0) return gcdEuclid(a, b);
    int L = maxLvl + 1;
    MPoly A = flattenPolyCleared(a, L);
    MPoly B = flattenPolyCleared(b, L);
    MPoly g = mPpWrt(L - 1, mGcd(A, B));
    auto cs = g.coeffsWrt(L - 1);
    std::vector<FE> out(static_cast<size_t>(g.degIn(L - 1)) + 1);
    for (auto& [e, c] : cs) out[static_cast<size_t>(e)] = unflattenMPoly(c);
    return PolyF(std::move(out)).monic();
}

PolyF lcmPolyF(const PolyF& a, const PolyF& b) {
    if (a.isZero() || b.isZero()) return PolyF();
    return polyExactDivide(a * b, gcdPolyF(a, b)).monic();
}

const Q& FE::qval() const {
    if (lvl_ != 0) throw std::domain_error("FE::qval: not a constant");
    return q_;
}

const PolyF& FE::num() const {
    if (lvl_ == 0) throw std::domain_error("FE::num: constant has no fraction parts");
    return rep_->num;
}

const PolyF& FE::den() const {
    if (lvl_ == 0) throw std::domain_error("FE::den: constant has no fraction parts");
    return rep_->den;
}

std::pair<PolyF, PolyF> FE::asFraction(int level) const {
    if (lvl_ < level) return {PolyF::constant(*this), PolyF::one()};
    if (lvl_ == level && lvl_ > 0) return {rep_->num, rep_->den};
    throw std::domain_error("FE::asFraction: element lives above the requested level");
}

FE FE::make(int level, PolyF num, PolyF den) {
    if (num.isZero()) return FE();
    if (den.isOne() && num.isConstant()) return num.coeff(0);
    FE f;
    f.lvl_ = level;
    f.rep_ = std::make_shared<FERep>(FERep{std::move(num), std::move(den)});
    return f;
}

FE FE::fromFraction(int level, PolyF num, PolyF den) {
    if (den.isZero()) throw std::domain_error("FE: zero denominator");
    if (num.isZero()) return FE();
    if (den.isConstant()) return make(level, num / den.coeff(0), PolyF::one());
    if (!num.isConstant()) {
        PolyF g = gcdPolyF(num, den);
        if (!g.isOne()) {
            num = polyExactDivide(num, g);
            den = polyExactDivide(den, g);
        }
    }
    FE l = den.lc();
    if (!l.isOne()) {
        num = num / l;
        den = den / l;
    }
    return make(level, std::move(num), std::move(den));
}

FE FE::fromPoly(int level, PolyF num) {
    return make(level, std::move(num), PolyF::one());
}

FE FE::var(int level) {
    if (level < 1) throw std::domain_error("FE::var: level must be >= 1");
    return make(level, PolyF::variable(), PolyF::one());
}

FE FE::operator-() const {
    if (lvl_ == 0) return FE(-q_);
    return make(lvl_, -rep_->num, rep_->den);
}

FE FE::inverse() const {
    if (lvl_ == 0) {
        if (q_.isZero()) throw std::domain_error("FE: division by zero");
        return FE(q_.inverse());
    }
    // num and den are coprime already; just swap and re-normalize the lead.
    FE l = rep_->num.lc();
    return make(lvl_, rep_->den / l, rep_->num / l);
}

FE FE::pow(long e) const {
    if (e == 0) return FE(1);
    if (e < 0) return inverse().pow(-e);
    FE base = *this, acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

FE operator+(const FE& a, const FE& b) {
    if (a.lvl_ == 0 && b.lvl_ == 0) return FE(a.q_ + b.q_);
    if (a.lvl_ < b.lvl_) return b + a;
    if (b.lvl_ < a.lvl_) {
        // gcd-free fast path: (n + s*d)/d stays reduced for lower-level s.
        PolyF n = a.rep_->num + a.rep_->den * b;
        return FE::make(a.lvl_, std::move(n), a.rep_->den);
    }
    return FE::fromFraction(a.lvl_, a.rep_->num * b.rep_->den + b.rep_->num * a.rep_->den,
                            a.rep_->den * b.rep_->den);
}

FE operator-(const FE& a, const FE& b) { return a + (-b); }

FE operator*(const FE& a, const FE& b) {
    if (a.lvl_ == 0 && b.lvl_ == 0) return FE(a.q_ * b.q_);
    if (a.lvl_ < b.lvl_) return b * a;
    if (b.lvl_ < a.lvl_) {
        if (b.isZero()) return FE();
        return FE::make(a.lvl_, a.rep_->num * b, a.rep_->den);
    }
    return FE::fromFraction(a.lvl_, a.rep_->num * b.rep_->num, a.rep_->den * b.rep_->den);
}

FE operator/(const FE& a, const FE& b) { return a * b.inverse(); }

bool operator==(const FE& a, const FE& b) {
    if (a.lvl_ != b.lvl_) return false;
    if (a.lvl_ == 0) return a.q_ == b.q_;
    return a.rep_->num == b.rep_->num && a.rep_->den == b.rep_->den;
}

std::string FE::str() const {
    if (lvl_ == 0) return q_.str();
    std::string v = "t" + std::to_string(lvl_);
    if (rep_->den.isOne()) return rep_->num.str(v);
    return "(" + rep_->num.str(v) + ")/(" + rep_->den.str(v) + ")";
}

}  // namespace integ
