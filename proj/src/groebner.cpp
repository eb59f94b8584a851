#include "integ/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace integ {

namespace {

using Key = MPoly::Key;

int totalOf(const Key& k) { return std::accumulate(k.begin(), k.end(), 0); }

bool dividesMonom(const Key& d, const Key& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

Key quotientMonom(const Key& m, const Key& d) {
    Key q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) q[i] = m[i] - d[i];
    return q;
}

Key lcmMonom(const Key& a, const Key& b) {
    Key l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

MPoly termPoly(int nvars, const Key& k, const Q& c) {
    MPoly p(nvars);
    p.addTerm(k, c);
    return p;
}

}  // namespace

bool MonomialOrder::less(const Key& a, const Key& b) const {
    if (tag != OrderTag::Lex) {
        int da = totalOf(a), db = totalOf(b);
        if (da != db) return da < db;
    }
    auto at = [&](std::size_t i) {
        int v = priority.empty() ? static_cast<int>(i) : priority[i];
        return std::pair(a[static_cast<std::size_t>(v)], b[static_cast<std::size_t>(v)]);
    };
    if (tag == OrderTag::GrevLex) {
        // graded reverse: scan least-significant first; the side whose
        // exponent is LARGER there is the smaller monomial
        for (std::size_t i = a.size(); i-- > 0;) {
            auto [ea, eb] = at(i);
            if (ea != eb) return ea > eb;
        }
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto [ea, eb] = at(i);
        if (ea != eb) return ea < eb;
    }
    return false;
}

std::pair<Key, Q> leadingTerm(const MPoly& f, const MonomialOrder& ord) {
    if (f.isZero()) throw std::domain_error("leadingTerm: zero polynomial");
    auto best = f.terms().begin();
    for (auto it = std::next(best); it != f.terms().end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

MDivision mDivide(const MPoly& f, const std::vector<MPoly>& divisors, const MonomialOrder& ord) {
    MDivision out;
    out.quotients.assign(divisors.size(), MPoly(f.nvars()));
    out.remainder = MPoly(f.nvars());
    std::vector<std::pair<Key, Q>> lts;
    lts.reserve(divisors.size());
    for (const auto& d : divisors) {
        if (d.isZero()) throw std::domain_error("mDivide: zero divisor");
        lts.push_back(leadingTerm(d, ord));
    }
    MPoly p = f;
    while (!p.isZero()) {
        auto [m, c] = leadingTerm(p, ord);
        bool divided = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (!dividesMonom(lts[i].first, m)) continue;
            MPoly t = termPoly(f.nvars(), quotientMonom(m, lts[i].first), c / lts[i].second);
            out.quotients[i] += t;
            p -= t * divisors[i];
            divided = true;
            break;  // minimal index wins
        }
        if (!divided) {
            MPoly t = termPoly(f.nvars(), m, c);
            out.remainder += t;
            p -= t;
        }
    }
    return out;
}

MPoly sPolynomial(const MPoly& g, const MPoly& h, const MonomialOrder& ord) {
    auto lg = leadingTerm(g, ord), lh = leadingTerm(h, ord);
    Key l = lcmMonom(lg.first, lh.first);
    MPoly a = termPoly(g.nvars(), quotientMonom(l, lg.first), Q(1) / lg.second);
    MPoly b = termPoly(h.nvars(), quotientMonom(l, lh.first), Q(1) / lh.second);
    return a * g - b * h;
}

MPoly normalForm(const MPoly& f, const std::vector<MPoly>& G, const MonomialOrder& ord) {
    if (G.empty()) return f;
    return mDivide(f, G, ord).remainder;
}

bool memberQ(const MPoly& f, const std::vector<MPoly>& G, const MonomialOrder& ord) {
    return normalForm(f, G, ord).isZero();
}

std::vector<MPoly> buchberger(std::vector<MPoly> F, const MonomialOrder& ord, bool improved) {
    std::vector<MPoly> G;
    for (auto& f : F)
        if (!f.isZero()) G.push_back(f * (Q(1) / leadingTerm(f, ord).second));
    if (G.empty()) return G;

    // pending pairs, picked by smallest lcm degree (normal strategy)
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto addPairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});
    };
    for (std::size_t j = 1; j < G.size(); ++j) addPairs(j);

    while (!pending.empty()) {
        auto bestIt = pending.begin();
        int bestDeg = -1;
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            Key l = lcmMonom(leadingTerm(G[it->first], ord).first,
                             leadingTerm(G[it->second], ord).first);
            int d = totalOf(l);
            if (bestDeg < 0 || d < bestDeg) {
                bestDeg = d;
                bestIt = it;
            }
        }
        auto [i, j] = *bestIt;
        pending.erase(bestIt);

        Key li = leadingTerm(G[i], ord).first, lj = leadingTerm(G[j], ord).first;
        if (improved) {
            // coprime leading terms (lcm degree = degree sum): the
            // S-polynomial is guaranteed to reduce to zero
            Key l = lcmMonom(li, lj);
            if (totalOf(l) == totalOf(li) + totalOf(lj)) continue;
            // chain criterion: some k divides the lcm and both side pairs
            // are already settled
            bool skip = false;
            for (std::size_t k = 0; k < G.size() && !skip; ++k) {
                if (k == i || k == j) continue;
                if (!dividesMonom(leadingTerm(G[k], ord).first, l)) continue;
                auto p1 = std::minmax(i, k), p2 = std::minmax(j, k);
                if (!pending.count({p1.first, p1.second}) &&
                    !pending.count({p2.first, p2.second}))
                    skip = true;
            }
            if (skip) continue;
        }

        MPoly r = normalForm(sPolynomial(G[i], G[j], ord), G, ord);
        if (!r.isZero()) {
            G.push_back(r * (Q(1) / leadingTerm(r, ord).second));
            addPairs(G.size() - 1);
        }
    }
    return G;
}

std::vector<MPoly> reducedBasis(std::vector<MPoly> G, const MonomialOrder& ord) {
    // minimality: drop any element whose leading monomial another one divides
    std::vector<MPoly> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        Key li = leadingTerm(G[i], ord).first;
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            Key lj = leadingTerm(G[j], ord).first;
            if (dividesMonom(lj, li) && (lj != li || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    // full reduction of each element against the rest, to a fixpoint
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<MPoly> rest;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) rest.push_back(minimal[j]);
            MPoly r = normalForm(minimal[i], rest, ord);
            if (r.isZero()) {
                minimal.erase(minimal.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
            r = r * (Q(1) / leadingTerm(r, ord).second);
            if (r != minimal[i]) {
                minimal[i] = r;
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const MPoly& a, const MPoly& b) {
        return ord.less(leadingTerm(b, ord).first, leadingTerm(a, ord).first);
    });
    return minimal;
}

}  // namespace integ
