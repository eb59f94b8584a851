#include "integ/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace integ {

bool MPoly::isConstant() const {
    if (t_.empty()) return true;
    if (t_.size() != 1) return false;
    const Key& k = t_.begin()->first;
    return std::all_of(k.begin(), k.end(), [](int e) { return e == 0; });
}

bool MPoly::isOne() const { return isConstant() && !t_.empty() && t_.begin()->second.isOne(); }

int MPoly::degIn(int v) const {
    int d = 0;
    for (const auto& [k, c] : t_) d = std::max(d, k[static_cast<size_t>(v)]);
    return d;
}

int MPoly::totalDeg() const {
    int d = 0;
    for (const auto& [k, c] : t_) {
        int s = 0;
        for (int e : k) s += e;
        d = std::max(d, s);
    }
    return d;
}

void MPoly::addTerm(const Key& k, const Q& c) {
    if (c.isZero()) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_[k] = c;
    } else {
        it->second += c;
        if (it->second.isZero()) t_.erase(it);
    }
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [k, c] : b.t_) r.addTerm(k, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [k, c] : b.t_) r.addTerm(k, -c);
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r(nv_);
    for (const auto& [k, c] : t_) r.t_[k] = -c;
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.nv_);
    MPoly::Key k(static_cast<size_t>(a.nv_), 0);
    for (const auto& [ka, ca] : a.t_) {
        for (const auto& [kb, cb] : b.t_) {
            for (size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
            r.addTerm(k, ca * cb);
        }
    }
    return r;
}

MPoly operator*(const MPoly& a, const Q& s) {
    if (s.isZero()) return MPoly(a.nv_);
    MPoly r(a.nv_);
    for (const auto& [k, c] : a.t_) r.t_[k] = c * s;
    return r;
}

MPoly MPoly::pow(int e) const {
    if (e < 0) throw std::domain_error("MPoly::pow: negative exponent");
    MPoly acc = MPoly::constant(nv_, Q(1)), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::map<int, MPoly> MPoly::coeffsWrt(int v) const {
    std::map<int, MPoly> out;
    for (const auto& [k, c] : t_) {
        Key k2 = k;
        int e = k2[static_cast<size_t>(v)];
        k2[static_cast<size_t>(v)] = 0;
        auto it = out.find(e);
        if (it == out.end()) it = out.emplace(e, MPoly(nv_)).first;
        it->second.addTerm(k2, c);
    }
    return out;
}

MPoly MPoly::fromCoeffsWrt(int v, int nvars, const std::map<int, MPoly>& c) {
    MPoly out(nvars);
    for (const auto& [e, p] : c) {
        for (const auto& [k, q] : p.t_) {
            Key k2 = k;
            k2[static_cast<size_t>(v)] += e;
            out.addTerm(k2, q);
        }
    }
    return out;
}

MPoly MPoly::lcWrt(int v) const {
    auto c = coeffsWrt(v);
    if (c.empty()) return MPoly(nv_);
    return c.rbegin()->second;
}

MPoly MPoly::derivWrt(int v) const {
    MPoly r(nv_);
    for (const auto& [k, c] : t_) {
        int e = k[static_cast<size_t>(v)];
        if (e == 0) continue;
        Key k2 = k;
        k2[static_cast<size_t>(v)] = e - 1;
        r.addTerm(k2, c * Q(e));
    }
    return r;
}

MPoly MPoly::substVar(int v, const MPoly& value) const {
    auto c = coeffsWrt(v);
    MPoly out(nv_);
    MPoly pw = MPoly::constant(nv_, Q(1));
    int cur = 0;
    for (const auto& [e, p] : c) {
        while (cur < e) {
            pw *= value;
            ++cur;
        }
        out += p * pw;
    }
    return out;
}

std::pair<MPoly, MPoly> mPseudoDivWrt(int v, const MPoly& A, const MPoly& B) {
    if (B.isZero()) throw std::domain_error("mPseudoDivWrt: division by zero");
    int da = A.degIn(v), db = B.degIn(v);
    if (A.isZero() || da < db) return {MPoly(A.nvars()), A};
    MPoly blc = B.lcWrt(v);
    int N = da - db + 1;
    MPoly q(A.nvars()), r = A;
    while (!r.isZero() && r.degIn(v) >= db) {
        int d = r.degIn(v) - db;
        MPoly m = r.lcWrt(v) * MPoly::var(A.nvars(), v, d);
        q = q * blc + m;
        r = r * blc - m * B;
        --N;
    }
    MPoly f = blc.pow(N > 0 ? N : 0);
    return {q * f, r * f};
}

std::optional<MPoly> mExactDivide(const MPoly& A, const MPoly& B) {
    if (B.isZero()) return std::nullopt;
    if (A.isZero()) return MPoly(A.nvars());
    if (B.isConstant()) return A * B.terms().begin()->second.inverse();
    int v = -1;
    for (int i = B.nvars() - 1; i >= 0; --i)
        if (B.degIn(i) > 0) { v = i; break; }
    int db = B.degIn(v);
    MPoly blc = B.lcWrt(v);
    MPoly q(A.nvars()), r = A;
    while (!r.isZero()) {
        int dr = r.degIn(v);
        if (dr < db) return std::nullopt;
        auto c = mExactDivide(r.lcWrt(v), blc);
        if (!c) return std::nullopt;
        MPoly m = *c * MPoly::var(A.nvars(), v, dr - db);
        q += m;
        r -= m * B;
        if (!r.isZero() && r.degIn(v) >= dr && dr > 0) return std::nullopt;
    }
    return q;
}

Q mContentQ(const MPoly& A) {
    if (A.isZero()) return Q(0);
    mpz_class g = 0, l = 1;
    for (const auto& [k, c] : A.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.re().get_num().get_mpz_t());
        l = l / gcd(l, c.re().get_den()) * c.re().get_den();
    }
    Q content{mpq_class(g, l)};
    // sign: make the lex-leading coefficient positive
    if (A.terms().rbegin()->second < Q(0)) content = -content;
    return content;
}

MPoly mCanonical(const MPoly& A) {
    if (A.isZero()) return A;
    return A * mContentQ(A).inverse();
}

MPoly mContentWrt(int v, const MPoly& A) {
    auto c = A.coeffsWrt(v);
    MPoly g(A.nvars());
    for (const auto& [e, p] : c) {
        g = mGcd(g, p);
        if (g.isOne()) break;
    }
    return g;
}

MPoly mPpWrt(int v, const MPoly& A) {
    if (A.isZero()) return A;
    MPoly c = mContentWrt(v, A);
    auto d = mExactDivide(A, c);
    if (!d) throw std::logic_error("mPpWrt: content does not divide");
    // Also strip the rational content: over Q the polynomial content is a
    // unit, and without this step the PRS coefficient growth is exponential.
    return mCanonical(*d);
}

MPoly mGcd(const MPoly& A, const MPoly& B) {
    if (A.isZero()) return mCanonical(B);
    if (B.isZero()) return mCanonical(A);
    if (A.isConstant() || B.isConstant()) return MPoly::constant(A.nvars(), Q(1));
    int v = -1;
    for (int i = A.nvars() - 1; i >= 0; --i)
        if (A.degIn(i) > 0 || B.degIn(i) > 0) { v = i; break; }
    if (A.degIn(v) == 0) return mGcd(A, mContentWrt(v, B));
    if (B.degIn(v) == 0) return mGcd(mContentWrt(v, A), B);
    MPoly cA = mContentWrt(v, A), cB = mContentWrt(v, B);
    MPoly U = mCanonical(*mExactDivide(A, cA)), V = mCanonical(*mExactDivide(B, cB));
    MPoly cg = mGcd(cA, cB);
    if (U.degIn(v) < V.degIn(v)) std::swap(U, V);
    // primitive PRS in v
    while (true) {
        MPoly R = mPseudoDivWrt(v, U, V).second;
        if (R.isZero()) break;
        if (R.degIn(v) == 0) {
            V = MPoly::constant(A.nvars(), Q(1));
            break;
        }
        R = mPpWrt(v, R);
        U = std::move(V);
        V = std::move(R);
    }
    if (V.degIn(v) > 0) V = mPpWrt(v, V);
    return mCanonical(cg * V);
}

std::pair<Q, std::vector<std::pair<MPoly, int>>> mSquarefree(const MPoly& A) {
    std::vector<std::pair<MPoly, int>> parts;
    if (A.isZero()) return {Q(0), parts};
    if (A.isConstant()) return {A.terms().begin()->second, parts};
    int v = -1;
    for (int i = A.nvars() - 1; i >= 0; --i)
        if (A.degIn(i) > 0) { v = i; break; }
    MPoly cont = mContentWrt(v, A);
    MPoly P = mCanonical(*mExactDivide(A, cont));
    // Yun with respect to v on the primitive part
    MPoly dP = P.derivWrt(v);
    MPoly g = mGcd(P, dP);
    if (g.isConstant()) {
        parts.push_back({P, 1});
    } else {
        MPoly c = *mExactDivide(P, g);
        MPoly d = *mExactDivide(dP, g) - c.derivWrt(v);
        int k = 1;
        while (!c.isConstant()) {
            MPoly ak = mGcd(c, d);
            if (!ak.isConstant()) parts.push_back({ak, k});
            c = *mExactDivide(c, ak);
            d = *mExactDivide(d, ak) - c.derivWrt(v);
            ++k;
            if (k > 512) throw std::logic_error("mSquarefree: runaway iteration");
        }
    }
    auto [cl, cparts] = mSquarefree(cont);
    (void)cl;
    for (auto& p : cparts) parts.push_back(p);
    // The rational multiplier is pinned down by one exact division, so the
    // rebuild identity lead * prod(parts^mult) == A holds by construction.
    MPoly prod = MPoly::constant(A.nvars(), Q(1));
    for (auto& [p, e] : parts) prod *= p.pow(e);
    auto ratio = mExactDivide(A, prod);
    if (!ratio || !ratio->isConstant() || ratio->isZero())
        throw std::logic_error("mSquarefree: non-constant rebuild ratio");
    return {ratio->terms().begin()->second, parts};
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        std::string term = "(" + it->second.str() + ")";
        for (size_t i = 0; i < it->first.size(); ++i) {
            int e = it->first[i];
            if (e == 0) continue;
            std::string nm = i < names.size() ? names[i] : ("v" + std::to_string(i));
            term += "*" + nm;
            if (e > 1) term += "^" + std::to_string(e);
        }
        out += term;
    }
    return out;
}

}  // namespace integ
