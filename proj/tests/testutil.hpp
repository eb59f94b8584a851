#pragma once
// Shared helpers for the unit tests: literal builders, deterministic
// random generators, and independent oracles used to cross-check the
// production algorithms.

#include <random>
#include <vector>

#include "integ/mpoly.hpp"
#include "integ/poly.hpp"
#include "integ/rational.hpp"

namespace testutil {

using integ::Poly;
using integ::Q;
using PQ = Poly<Q>;

inline PQ pq(std::initializer_list<long> ascending) {
    std::vector<Q> c;
    for (long v : ascending) c.emplace_back(v);
    return PQ(std::move(c));
}

inline Q q(long n, long d = 1) { return Q(n, d); }

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}
    long intIn(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }
    Q rational(long bound = 9) {
        long d = intIn(1, 4);
        return Q(intIn(-bound, bound), d);
    }
    PQ poly(int maxDeg, long bound = 9, bool forceDeg = false) {
        int d = forceDeg ? maxDeg : static_cast<int>(intIn(0, maxDeg));
        std::vector<Q> c(static_cast<size_t>(d) + 1);
        for (auto& x : c) x = Q(intIn(-bound, bound));
        if (c.back().isZero()) c.back() = Q(intIn(1, bound));
        return PQ(std::move(c));
    }
    PQ polyNonzero(int maxDeg, long bound = 9) {
        PQ p = poly(maxDeg, bound);
        while (p.isZero()) p = poly(maxDeg, bound);
        return p;
    }
    integ::MPoly mpoly(int nvars, int maxDeg, int maxTerms, long bound = 5) {
        integ::MPoly p(nvars);
        int nt = static_cast<int>(intIn(1, maxTerms));
        for (int t = 0; t < nt; ++t) {
            integ::MPoly::Key k(static_cast<size_t>(nvars), 0);
            int budget = static_cast<int>(intIn(0, maxDeg));
            for (int v = 0; v < nvars && budget > 0; ++v) {
                k[static_cast<size_t>(v)] = static_cast<int>(intIn(0, budget));
                budget -= k[static_cast<size_t>(v)];
            }
            p.addTerm(k, Q(intIn(-bound, bound)));
        }
        return p;
    }
    integ::MPoly mpolyNonzero(int nvars, int maxDeg, int maxTerms, long bound = 5) {
        integ::MPoly p = mpoly(nvars, maxDeg, maxTerms, bound);
        while (p.isZero()) p = mpoly(nvars, maxDeg, maxTerms, bound);
        return p;
    }
};

// Resultant via the Sylvester matrix determinant, computed by exact
// fraction-free-style Gaussian elimination over Q.  Slow but independent
// of the PRS code path.
inline Q sylvesterResultant(const PQ& A, const PQ& B) {
    int m = A.deg(), n = B.deg();
    if (A.isZero() || B.isZero()) return Q(0);
    if (m <= 0 && n <= 0) return Q(1);
    if (m < 0 || n < 0) return Q(0);
    int N = m + n;
    if (N == 0) return Q(1);
    std::vector<std::vector<Q>> M(static_cast<size_t>(N),
                                  std::vector<Q>(static_cast<size_t>(N), Q(0)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) M[r][r + j] = A.coeff(m - j);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) M[n + r][r + j] = B.coeff(n - j);
    Q det(1);
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int r = col; r < N; ++r)
            if (!M[r][col].isZero()) { piv = r; break; }
        if (piv < 0) return Q(0);
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = -det;
        }
        det *= M[col][col];
        Q inv = Q(1) / M[col][col];
        for (int r = col + 1; r < N; ++r) {
            if (M[r][col].isZero()) continue;
            Q f = M[r][col] * inv;
            for (int c2 = col; c2 < N; ++c2) M[r][c2] -= f * M[col][c2];
        }
    }
    return det;
}

}  // namespace testutil
