#include "integ/numbers.hpp"

#include <algorithm>
#include <map>

namespace integ {
namespace {

// Pollard's rho with Brent's cycle detection; good enough for the
// coefficient sizes the resultant computations produce.
mpz_class pollardRho(const mpz_class& n, unsigned long c) {
    mpz_class x = 2, y = 2, d = 1, diff, tmp;
    while (d == 1) {
        // x -> x^2 + c (mod n)
        tmp = x * x + c;
        mpz_mod(x.get_mpz_t(), tmp.get_mpz_t(), n.get_mpz_t());
        tmp = y * y + c;
        mpz_mod(y.get_mpz_t(), tmp.get_mpz_t(), n.get_mpz_t());
        tmp = y * y + c;
        mpz_mod(y.get_mpz_t(), tmp.get_mpz_t(), n.get_mpz_t());
        diff = x > y ? x - y : y - x;
        if (diff == 0) return 0;  // cycle without factor; caller retries
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    return d == n ? mpz_class(0) : d;
}

bool factorInto(mpz_class n, std::map<mpz_class, int>& out, int depth = 0) {
    if (n == 1) return true;
    if (depth > 64) return false;
    if (mpz_probab_prime_p(n.get_mpz_t(), 25) != 0) {
        out[n] += 1;
        return true;
    }
    // strip small primes first
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[mpz_class(p)] += 1;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n == 1) return true;
    if (mpz_probab_prime_p(n.get_mpz_t(), 25) != 0) {
        out[n] += 1;
        return true;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        std::map<mpz_class, int> half;
        if (!factorInto(r, half, depth + 1)) return false;
        for (auto& [p, e] : half) out[p] += 2 * e;
        return true;
    }
    for (unsigned long c = 1; c <= 20; ++c) {
        mpz_class d = pollardRho(n, c);
        if (d != 0)
            return factorInto(d, out, depth + 1) && factorInto(n / d, out, depth + 1);
    }
    return false;
}

}  // namespace

std::optional<std::vector<mpz_class>> divisorsOf(const mpz_class& n, size_t cap) {
    mpz_class a = abs(n);
    if (a == 0) return std::nullopt;
    std::map<mpz_class, int> fac;
    if (!factorInto(a, fac)) return std::nullopt;
    std::vector<mpz_class> divs = {1};
    for (auto& [p, e] : fac) {
        size_t base = divs.size();
        if (base * static_cast<size_t>(e + 1) > cap) return std::nullopt;
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

std::optional<std::vector<Q>> rationalRoots(const Poly<Q>& p) {
    std::vector<Q> roots;
    if (p.isZero() || p.isConstant()) return roots;
    // Clear denominators to an integer polynomial.
    mpz_class den = 1;
    for (const Q& c : p.coeffs()) den = den / gcd(den, c.re().get_den()) * c.re().get_den();
    std::vector<mpz_class> ic(static_cast<size_t>(p.deg()) + 1);
    for (int i = 0; i <= p.deg(); ++i) {
        mpq_class v = p.coeff(i).re() * den;
        ic[static_cast<size_t>(i)] = v.get_num();
    }
    size_t lo = 0;
    while (lo < ic.size() && ic[lo] == 0) ++lo;
    if (lo > 0) roots.push_back(Q(0));
    if (lo + 1 >= ic.size()) return roots;
    auto numDivs = divisorsOf(ic[lo]);
    auto denDivs = divisorsOf(ic.back());
    if (!numDivs || !denDivs) return std::nullopt;
    for (const mpz_class& a : *numDivs) {
        for (const mpz_class& b : *denDivs) {
            for (int sign = 0; sign < 2; ++sign) {
                mpq_class cand(sign ? -a : a, b);
                cand.canonicalize();
                Q r{cand};
                if (p.eval(r).isZero() &&
                    std::find(roots.begin(), roots.end(), r) == roots.end())
                    roots.push_back(r);
            }
        }
    }
    return roots;
}

std::optional<std::vector<Q>> integerRoots(const Poly<Q>& p) {
    auto all = rationalRoots(p);
    if (!all) return std::nullopt;
    std::vector<Q> out;
    for (const Q& r : *all)
        if (r.isInt()) out.push_back(r);
    return out;
}

std::pair<Q, std::vector<QFactor>> factorQ(const Poly<Q>& p) {
    std::vector<QFactor> out;
    if (p.isZero()) return {Q(0), out};
    Q lead = p.lc();
    auto [lc2, sqf] = squarefreeYun(p);
    for (auto& part : sqf) {
        Poly<Q> rest = part.factor;
        auto roots = rationalRoots(rest);
        if (roots) {
            for (const Q& r : *roots) {
                Poly<Q> lin({-r, Q(1)});
                while (true) {
                    auto d = polyDivide(rest, lin);
                    if (!d.rem.isZero()) break;
                    rest = d.quo;
                    out.push_back({lin, part.multiplicity});
                }
            }
        }
        if (rest.deg() == 2) {
            // split x^2 + bx + c when the discriminant is a rational square
            Q b = rest.coeff(1) / rest.coeff(2), c = rest.coeff(0) / rest.coeff(2);
            Q disc = b * b - Q(4) * c;
            if (auto s = disc.sqrtExact(); s && s->isReal()) {
                Q r1 = (-b + *s) / Q(2), r2 = (-b - *s) / Q(2);
                out.push_back({Poly<Q>({-r1, Q(1)}), part.multiplicity});
                out.push_back({Poly<Q>({-r2, Q(1)}), part.multiplicity});
                continue;
            }
        }
        if (rest.deg() >= 1) out.push_back({rest.monic(), part.multiplicity});
    }
    // Deterministic order: by degree, then coefficient string.
    std::sort(out.begin(), out.end(), [](const QFactor& a, const QFactor& b) {
        if (a.factor.deg() != b.factor.deg()) return a.factor.deg() < b.factor.deg();
        return a.factor.str() < b.factor.str();
    });
    (void)lc2;
    return {lead, out};
}

}  // namespace integ
