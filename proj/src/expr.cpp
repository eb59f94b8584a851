#include "integ/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "integ/numbers.hpp"
#include "json.hpp"

namespace integ {

namespace {

/** Exact q-th root of a rational, if one exists over Q. */
std::optional<Q> qthRootExact(const Q& c, unsigned long k) {
    if (!c.isReal()) return std::nullopt;
    if (c.isZero()) return Q(0);
    bool neg = sgn(c.re()) < 0;
    if (neg && k % 2 == 0) return std::nullopt;
    mpq_class a = neg ? mpq_class(-c.re()) : c.re();
    mpz_class n = a.get_num(), d = a.get_den(), rn, rd;
    if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k) == 0) return std::nullopt;
    mpq_class r(rn, rd);
    r.canonicalize();
    return neg ? Q(mpq_class(-r)) : Q(r);
}

int cmpPolyQ(const Poly<Q>& a, const Poly<Q>& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (int i = a.deg(); i >= 0; --i) {
        int c = a.coeff(i).cmpKey(b.coeff(i));
        if (c != 0) return c;
    }
    return 0;
}

struct CmpLess {
    bool operator()(const Expr& a, const Expr& b) const { return cmp(a, b) < 0; }
};

}  // namespace

int cmp(const Expr& a, const Expr& b) {
    if (a.rep_ == b.rep_) return 0;
    if (a.head() != b.head())
        return static_cast<int>(a.head()) < static_cast<int>(b.head()) ? -1 : 1;
    switch (a.head()) {
        case Head::Const:
            return a.value().cmpKey(b.value());
        case Head::Var:
            return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
        case Head::Pow: {
            int c = cmp(a.kids()[0], b.kids()[0]);
            return c != 0 ? c : a.expnt().cmpKey(b.expnt());
        }
        case Head::RootSum: {
            if (int c = a.name().compare(b.name()); c != 0) return c < 0 ? -1 : 1;
            if (int c = cmpPolyQ(a.rootPoly(), b.rootPoly()); c != 0) return c;
            return cmp(a.kids()[0], b.kids()[0]);
        }
        case Head::Unintegrated: {
            if (int c = a.name().compare(b.name()); c != 0) return c < 0 ? -1 : 1;
            return cmp(a.kids()[0], b.kids()[0]);
        }
        default: {  // Add, Mul, unary function heads: compare child lists
            const auto& ka = a.kids();
            const auto& kb = b.kids();
            std::size_t n = std::min(ka.size(), kb.size());
            for (std::size_t i = 0; i < n; ++i)
                if (int c = cmp(ka[i], kb[i]); c != 0) return c;
            if (ka.size() != kb.size()) return ka.size() < kb.size() ? -1 : 1;
            return 0;
        }
    }
}

Expr::Expr() {
    static const std::shared_ptr<const Rep> zero = std::make_shared<const Rep>();
    rep_ = zero;
}

Expr Expr::constant(const Q& v) {
    Rep r;
    r.head = Head::Const;
    r.value = v;
    return makeRaw(std::move(r));
}

Expr Expr::var(const std::string& name) {
    Rep r;
    r.head = Head::Var;
    r.name = name;
    return makeRaw(std::move(r));
}

/** coefficient * core, assembled without re-canonicalizing core. */
static Expr scaleCore(const Expr& core, const Q& c);

Expr Expr::add(std::vector<Expr> terms) {
    // Flatten nested sums, then fold like terms: each non-constant term is
    // split as coefficient * core and coefficients are accumulated per core.
    std::vector<Expr> flat;
    for (auto& t : terms) {
        if (t.head() == Head::Add)
            flat.insert(flat.end(), t.kids().begin(), t.kids().end());
        else
            flat.push_back(std::move(t));
    }
    Q constAcc(0);
    std::map<Expr, Q, CmpLess> byCore;
    for (const auto& t : flat) {
        if (t.isConst()) {
            constAcc += t.value();
            continue;
        }
        Q coeff(1);
        Expr core = t;
        if (t.head() == Head::Mul && t.kids()[0].isConst()) {
            coeff = t.kids()[0].value();
            if (t.kids().size() == 2) {
                core = t.kids()[1];
            } else {
                Rep r;
                r.head = Head::Mul;
                r.kids.assign(t.kids().begin() + 1, t.kids().end());
                core = makeRaw(std::move(r));
            }
        }
        byCore[core] += coeff;
    }
    std::vector<Expr> out;
    // Reverse key order puts powers and products ahead of bare variables —
    // the conventional "x^2 + x - 1" layout — with the constant term last.
    for (auto it = byCore.rbegin(); it != byCore.rend(); ++it)
        if (!it->second.isZero()) out.push_back(scaleCore(it->first, it->second));
    if (!constAcc.isZero() || out.empty()) out.push_back(constant(constAcc));
    if (out.size() == 1) return out[0];
    Rep r;
    r.head = Head::Add;
    r.kids = std::move(out);
    return makeRaw(std::move(r));
}

Expr Expr::mul(std::vector<Expr> factors) {
    std::vector<Expr> flat;
    for (auto& f : factors) {
        if (f.head() == Head::Mul)
            flat.insert(flat.end(), f.kids().begin(), f.kids().end());
        else
            flat.push_back(std::move(f));
    }
    Q coeff(1);
    std::map<Expr, Q, CmpLess> byBase;  // base -> accumulated exponent
    for (const auto& f : flat) {
        if (f.isConst()) {
            if (f.value().isZero()) return constant(0);
            coeff *= f.value();
            continue;
        }
        if (f.head() == Head::Pow)
            byBase[f.kids()[0]] += f.expnt();
        else
            byBase[f] += Q(1);
    }
    std::vector<Expr> out;
    for (const auto& [base, e] : byBase) {
        if (e.isZero()) continue;
        Expr p = pow(base, e);
        if (p.isConst()) {  // exponents cancelled down to a constant
            if (p.value().isZero()) return constant(0);
            coeff *= p.value();
        } else {
            out.push_back(p);
        }
    }
    if (out.empty()) return constant(coeff);
    if (coeff.isOne() && out.size() == 1) return out[0];
    if (!coeff.isOne()) out.insert(out.begin(), constant(coeff));
    if (out.size() == 1) return out[0];
    Rep r;
    r.head = Head::Mul;
    r.kids = std::move(out);
    return makeRaw(std::move(r));
}

static Expr scaleCore(const Expr& core, const Q& c) {
    if (c.isOne()) return core;
    if (core.head() == Head::Mul) {
        std::vector<Expr> kids;
        kids.reserve(core.kids().size() + 1);
        kids.push_back(Expr::constant(c));
        kids.insert(kids.end(), core.kids().begin(), core.kids().end());
        return Expr::mul(std::move(kids));
    }
    return Expr::mul({Expr::constant(c), core});
}

Expr Expr::pow(const Expr& base, const Q& exponent) {
    if (!exponent.isReal()) throw std::domain_error("pow: exponent must be rational");
    if (exponent.isZero()) return constant(1);
    if (exponent.isOne()) return base;
    if (base.isConst()) {
        const Q& c = base.value();
        if (exponent.isInt()) return constant(c.pow(exponent.asLong()));
        // c^(p/q): fold only when the q-th root is again rational
        mpz_class den = exponent.re().get_den();
        if (den.fits_ulong_p()) {
            if (auto root = qthRootExact(c, den.get_ui())) {
                mpz_class num = exponent.re().get_num();
                if (num.fits_slong_p()) return constant(root->pow(num.get_si()));
            }
        }
    }
    if (base.head() == Head::Pow && exponent.isInt())
        return pow(base.kids()[0], base.expnt() * exponent);
    if (base.head() == Head::Mul && exponent.isInt()) {
        std::vector<Expr> kids;
        kids.reserve(base.kids().size());
        for (const auto& k : base.kids()) kids.push_back(pow(k, exponent));
        return mul(std::move(kids));
    }
    Rep r;
    r.head = Head::Pow;
    r.kids = {base};
    r.expnt = exponent;
    return makeRaw(std::move(r));
}

Expr Expr::apply(Head fn, const Expr& arg) {
    switch (fn) {
        case Head::Log:
            if (arg.isOne()) return constant(0);
            if (arg.head() == Head::Exp) return arg.kids()[0];
            break;
        case Head::Exp:
            if (arg.isZero()) return constant(1);
            if (arg.head() == Head::Log) return arg.kids()[0];
            break;
        case Head::Sin:
        case Head::Tan:
        case Head::ArcTan:
            if (arg.isZero()) return constant(0);
            break;
        case Head::Cos:
            if (arg.isZero()) return constant(1);
            break;
        case Head::Li:
        case Head::Ei:
            break;
        default:
            throw std::domain_error("apply: not a unary function head");
    }
    Rep r;
    r.head = fn;
    r.kids = {arg};
    return makeRaw(std::move(r));
}

Expr Expr::rootSum(const std::string& rootVar, const Poly<Q>& rootPoly, const Expr& summand) {
    if (rootPoly.deg() <= 0) return constant(0);
    // Only the root set matters: replace the polynomial by its monic
    // squarefree part, and peel off rational roots as explicit summands.
    Poly<Q> p = rootPoly;
    {
        auto [lead, parts] = squarefreeMusser(p);
        (void)lead;
        Poly<Q> sq = Poly<Q>::one();
        for (const auto& part : parts) sq = sq * part.factor;
        p = sq.monic();
        // Prefer the primitive integer form (positive leading coefficient)
        // when all coefficients are real: prints as "4*a^2 + 1", not
        // "a^2 + 1/4".  The root set is unchanged.
        bool real = true;
        for (int i = 0; i <= p.deg() && real; ++i) real = p.coeff(i).isReal();
        if (real) {
            mpz_class l(1), g(0);
            for (int i = 0; i <= p.deg(); ++i)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.coeff(i).re().get_den().get_mpz_t());
            for (int i = 0; i <= p.deg(); ++i) {
                mpz_class n = p.coeff(i).re().get_num() * l / p.coeff(i).re().get_den();
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
            }
            if (sgn(g) != 0) p = p * Q(mpq_class(l, g));
        }
    }
    std::vector<Expr> terms;
    if (auto roots = rationalRoots(p)) {
        for (const Q& r : *roots) {
            terms.push_back(substVar(summand, rootVar, constant(r)));
            p = polyExactDivide(p, Poly<Q>(std::vector<Q>{-r, Q(1)}));
        }
    }
    if (p.deg() >= 1) {
        if (!containsVar(summand, rootVar)) {
            terms.push_back(scaleCore(summand, Q(p.deg())));
        } else {
            Rep r;
            r.head = Head::RootSum;
            r.name = rootVar;
            r.rootpoly = p;
            r.kids = {summand};
            terms.push_back(makeRaw(std::move(r)));
        }
    }
    return add(std::move(terms));
}

Expr Expr::unintegrated(const Expr& integrand, const std::string& var) {
    if (integrand.isZero()) return constant(0);
    Rep r;
    r.head = Head::Unintegrated;
    r.name = var;
    r.kids = {integrand};
    return makeRaw(std::move(r));
}

Expr substVar(const Expr& e, const std::string& name, const Expr& replacement) {
    switch (e.head()) {
        case Head::Const:
            return e;
        case Head::Var:
            return e.name() == name ? replacement : e;
        case Head::Add:
        case Head::Mul: {
            std::vector<Expr> kids;
            kids.reserve(e.kids().size());
            for (const auto& k : e.kids()) kids.push_back(substVar(k, name, replacement));
            return e.head() == Head::Add ? Expr::add(std::move(kids)) : Expr::mul(std::move(kids));
        }
        case Head::Pow:
            return Expr::pow(substVar(e.kids()[0], name, replacement), e.expnt());
        case Head::RootSum:
            if (e.name() == name) return e;  // bound
            return Expr::rootSum(e.name(), e.rootPoly(), substVar(e.kids()[0], name, replacement));
        case Head::Unintegrated:
            if (e.name() == name) return e;  // bound
            return Expr::unintegrated(substVar(e.kids()[0], name, replacement), e.name());
        default:
            return Expr::apply(e.head(), substVar(e.kids()[0], name, replacement));
    }
}

bool containsVar(const Expr& e, const std::string& name) {
    switch (e.head()) {
        case Head::Const:
            return false;
        case Head::Var:
            return e.name() == name;
        case Head::RootSum:
        case Head::Unintegrated:
            if (e.name() == name) return false;
            [[fallthrough]];
        default:
            for (const auto& k : e.kids())
                if (containsVar(k, name)) return true;
            return false;
    }
}

Expr differentiate(const Expr& e, const std::string& var) {
    switch (e.head()) {
        case Head::Const:
            return Expr::constant(0);
        case Head::Var:
            return Expr::constant(e.name() == var ? 1 : 0);
        case Head::Add: {
            std::vector<Expr> kids;
            for (const auto& k : e.kids()) kids.push_back(differentiate(k, var));
            return Expr::add(std::move(kids));
        }
        case Head::Mul: {
            std::vector<Expr> terms;
            for (std::size_t i = 0; i < e.kids().size(); ++i) {
                std::vector<Expr> prod = e.kids();
                prod[i] = differentiate(e.kids()[i], var);
                terms.push_back(Expr::mul(std::move(prod)));
            }
            return Expr::add(std::move(terms));
        }
        case Head::Pow: {
            const Expr& b = e.kids()[0];
            return Expr::mul({Expr::constant(e.expnt()), Expr::pow(b, e.expnt() - Q(1)),
                              differentiate(b, var)});
        }
        case Head::Log:
            return Expr::div(differentiate(e.kids()[0], var), e.kids()[0]);
        case Head::Exp:
            return Expr::mul({e, differentiate(e.kids()[0], var)});
        case Head::Sin:
            return Expr::mul({Expr::apply(Head::Cos, e.kids()[0]), differentiate(e.kids()[0], var)});
        case Head::Cos:
            return Expr::mul({Expr::constant(-1), Expr::apply(Head::Sin, e.kids()[0]),
                              differentiate(e.kids()[0], var)});
        case Head::Tan: {
            Expr t = e;
            return Expr::mul({Expr::add({Expr::constant(1), Expr::pow(t, Q(2))}),
                              differentiate(e.kids()[0], var)});
        }
        case Head::ArcTan: {
            const Expr& u = e.kids()[0];
            return Expr::div(differentiate(u, var),
                             Expr::add({Expr::constant(1), Expr::pow(u, Q(2))}));
        }
        case Head::Li:
            return Expr::div(differentiate(e.kids()[0], var), Expr::log(e.kids()[0]));
        case Head::Ei: {
            const Expr& u = e.kids()[0];
            return Expr::div(Expr::mul({differentiate(u, var), Expr::exp(u)}), u);
        }
        case Head::RootSum:
            if (e.name() == var) return Expr::constant(0);
            return Expr::rootSum(e.name(), e.rootPoly(), differentiate(e.kids()[0], var));
        case Head::Unintegrated:
            if (e.name() == var) return e.kids()[0];
            if (!containsVar(e.kids()[0], var)) return Expr::constant(0);
            throw UnsupportedHead("cannot differentiate a pending integral in " + e.name() +
                                  " with respect to " + var);
    }
    throw UnsupportedHead("differentiate: unhandled head");
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skipWs() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skipWs();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw SyntaxError(std::string("expected '") + c + "'", pos);
    }

    Expr parseFull() {
        Expr e = expr();
        if (peek() != '\0') throw SyntaxError("trailing input", pos);
        return e;
    }

    Expr expr() {
        std::vector<Expr> terms{term()};
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                terms.push_back(term());
            } else if (c == '-') {
                ++pos;
                terms.push_back(Expr::mul({Expr::constant(-1), term()}));
            } else {
                break;
            }
        }
        return Expr::add(std::move(terms));
    }

    Expr term() {
        std::vector<Expr> factors{unary()};
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                factors.push_back(unary());
            } else if (c == '/') {
                ++pos;
                factors.push_back(Expr::pow(unary(), Q(-1)));
            } else {
                break;
            }
        }
        return Expr::mul(std::move(factors));
    }

    Expr unary() {
        bool neg = false;
        for (;;) {
            char c = peek();
            if (c == '-') {
                ++pos;
                neg = !neg;
            } else if (c == '+') {
                ++pos;
            } else {
                break;
            }
        }
        Expr e = power();
        return neg ? Expr::mul({Expr::constant(-1), e}) : e;
    }

    Expr power() {
        Expr base = atom();
        if (peek() == '^') {
            ++pos;
            std::size_t at = pos;
            Expr e = unary();  // right-associative; may itself contain ^
            auto c = e.constValue();
            if (!c || !c->isReal())
                throw SyntaxError("exponent must be a rational constant", at);
            return Expr::pow(base, *c);
        }
        return base;
    }

    Expr atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Expr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return nameOrCall();
        throw SyntaxError("expected a number, name or '('", pos);
    }

    Expr number() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '.')
            throw SyntaxError("decimal literals are not supported; use fractions", pos);
        return Expr::constant(Q::fromString(s.substr(start, pos - start)));
    }

    std::string ident() {
        skipWs();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) throw SyntaxError("expected a name", pos);
        return s.substr(start, pos - start);
    }

    Expr nameOrCall() {
        std::size_t at = pos;
        std::string name = ident();
        if (peek() != '(') return Expr::var(name);
        ++pos;  // consume '('
        if (name == "rootsum") {
            std::string rv = ident();
            expect(',');
            std::size_t polyAt = pos;
            Expr pe = expr();
            expect(',');
            Expr summand = expr();
            expect(')');
            auto p = exprToPoly(pe, rv);
            if (!p) throw SyntaxError("rootsum: second argument must be a polynomial in " + rv,
                                      polyAt);
            return Expr::rootSum(rv, *p, summand);
        }
        if (name == "int") {
            Expr f = expr();
            expect(',');
            std::string v = ident();
            expect(')');
            return Expr::unintegrated(f, v);
        }
        Expr arg = expr();
        expect(')');
        if (name == "log") return Expr::apply(Head::Log, arg);
        if (name == "exp") return Expr::apply(Head::Exp, arg);
        if (name == "sin") return Expr::apply(Head::Sin, arg);
        if (name == "cos") return Expr::apply(Head::Cos, arg);
        if (name == "tan") return Expr::apply(Head::Tan, arg);
        if (name == "atan" || name == "arctan") return Expr::apply(Head::ArcTan, arg);
        if (name == "li") return Expr::apply(Head::Li, arg);
        if (name == "ei") return Expr::apply(Head::Ei, arg);
        if (name == "sqrt") return Expr::pow(arg, Q(1, 2));
        throw SyntaxError("unknown function '" + name + "'", at);
    }
};

}  // namespace

Expr parseExpr(const std::string& text) { return Parser(text).parseFull(); }

std::optional<Poly<Q>> exprToPoly(const Expr& e, const std::string& var) {
    switch (e.head()) {
        case Head::Const:
            return Poly<Q>::constant(e.value());
        case Head::Var:
            if (e.name() == var) return Poly<Q>::variable();
            return std::nullopt;  // foreign variables are not constants here
        case Head::Add: {
            Poly<Q> acc;
            for (const auto& k : e.kids()) {
                auto p = exprToPoly(k, var);
                if (!p) return std::nullopt;
                acc = acc + *p;
            }
            return acc;
        }
        case Head::Mul: {
            Poly<Q> acc = Poly<Q>::one();
            for (const auto& k : e.kids()) {
                auto p = exprToPoly(k, var);
                if (!p) return std::nullopt;
                acc = acc * *p;
            }
            return acc;
        }
        case Head::Pow: {
            if (!e.expnt().isNat()) return std::nullopt;
            auto b = exprToPoly(e.kids()[0], var);
            if (!b) return std::nullopt;
            return b->pow(e.expnt().asLong());
        }
        default:
            return std::nullopt;
    }
}

Expr polyToExpr(const Poly<Q>& p, const std::string& var) {
    std::vector<Expr> terms;
    for (int i = 0; i <= p.deg(); ++i) {
        if (p.coeff(i).isZero()) continue;
        terms.push_back(Expr::mul({Expr::constant(p.coeff(i)), Expr::pow(Expr::var(var), Q(i))}));
    }
    return Expr::add(std::move(terms));
}

// --------------------------------------------------------------- printing

namespace {

// Precedence levels used to decide parenthesization: sum < product < power
// < atom.  A constant's own level depends on how it prints ("-3", "2/3").
enum Prec { PSum = 1, PProd = 2, PPow = 3, PAtom = 4 };

struct TextPrinter {
    bool latex = false;

    std::string constStr(const Q& v) const {
        if (v.isReal() && latex && v.re().get_den() != 1) {
            mpq_class a = v.re();
            std::string sign = sgn(a) < 0 ? "-" : "";
            mpz_class num = abs(a.get_num());
            return sign + "\\frac{" + num.get_str() + "}{" + a.get_den().get_str() + "}";
        }
        return v.str();
    }
    int constPrec(const Q& v) const {
        if (!v.isReal()) return PSum;                        // "a+b*i"
        if (sgn(v.re()) < 0) return PSum;                    // leading minus
        if (!latex && v.re().get_den() != 1) return PProd;   // "2/3"
        return PAtom;
    }

    std::string paren(const std::string& s) const {
        return latex ? "\\left(" + s + "\\right)" : "(" + s + ")";
    }
    std::string wrap(const std::string& s, int own, int ctx) const {
        return own < ctx ? paren(s) : s;
    }

    std::string run(const Expr& e, int ctx) const {
        switch (e.head()) {
            case Head::Const:
                return wrap(constStr(e.value()), constPrec(e.value()), ctx);
            case Head::Var:
                return e.name();
            case Head::Add: {
                std::string out;
                bool first = true;
                for (const auto& t : e.kids()) {
                    auto [sign, body] = signSplit(t);
                    if (first) {
                        out = (sign ? "-" : "") + body;
                        first = false;
                    } else {
                        out += (sign ? " - " : " + ") + body;
                    }
                }
                return wrap(out, PSum, ctx);
            }
            case Head::Mul:
                return mulStr(Q(1), e.kids(), ctx);
            case Head::Pow:
                return mulStr(Q(1), {e}, ctx);
            case Head::RootSum: {
                std::string pstr = run(polyToExpr(e.rootPoly(), e.name()), PSum);
                std::string sstr = run(e.kids()[0], PSum);
                if (latex)
                    return "\\sum_{" + e.name() + ":\\," + pstr + "=0} " + sstr;
                return "rootsum(" + e.name() + ", " + pstr + ", " + sstr + ")";
            }
            case Head::Unintegrated: {
                std::string f = run(e.kids()[0], PSum);
                if (latex) return "\\int " + f + "\\, d" + e.name();
                return "int(" + f + ", " + e.name() + ")";
            }
            default: {
                std::string arg = run(e.kids()[0], PSum);
                if (latex) {
                    if (e.head() == Head::Exp) return "e^{" + arg + "}";
                    return latexFn(e.head()) + paren(arg);
                }
                return std::string(fnName(e.head())) + "(" + arg + ")";
            }
        }
    }

    static const char* fnName(Head h) {
        switch (h) {
            case Head::Log: return "log";
            case Head::Exp: return "exp";
            case Head::Sin: return "sin";
            case Head::Cos: return "cos";
            case Head::Tan: return "tan";
            case Head::ArcTan: return "atan";
            case Head::Li: return "li";
            case Head::Ei: return "ei";
            default: return "?";
        }
    }
    static const char* latexFn(Head h) {
        switch (h) {
            case Head::Log: return "\\log";
            case Head::Sin: return "\\sin";
            case Head::Cos: return "\\cos";
            case Head::Tan: return "\\tan";
            case Head::ArcTan: return "\\arctan";
            case Head::Li: return "\\mathrm{li}";
            case Head::Ei: return "\\mathrm{Ei}";
            default: return "?";
        }
    }

    /** Split a term into (negative?, printed magnitude) for sum layout. */
    std::pair<bool, std::string> signSplit(const Expr& t) const {
        if (t.isConst() && t.value().isReal() && sgn(t.value().re()) < 0)
            return {true, run(Expr::constant(-t.value()), PSum)};
        if (t.head() == Head::Mul && t.kids()[0].isConst()) {
            Q c = t.kids()[0].value();
            if (c.isReal() && sgn(c.re()) < 0) {
                std::vector<Expr> rest(t.kids().begin() + 1, t.kids().end());
                return {true, mulStr(-c, rest, PSum)};
            }
        }
        return {false, run(t, PSum)};
    }

    /** Print coeff * factors as numerator/denominator, folding negative
     *  exponents (and a fractional coefficient) into the denominator. */
    std::string mulStr(Q coeff, const std::vector<Expr>& factors, int ctx) const {
        std::vector<std::string> num, den;
        std::vector<Expr> fs = factors;
        if (!fs.empty() && fs[0].isConst()) {
            coeff *= fs[0].value();
            fs.erase(fs.begin());
        }
        std::string sign;
        if (coeff.isReal()) {
            if (sgn(coeff.re()) < 0) {
                sign = "-";
                coeff = -coeff;
            }
            mpz_class cn = coeff.re().get_num(), cd = coeff.re().get_den();
            if (cn != 1 || fs.empty()) num.push_back(cn.get_str());
            if (cd != 1) den.push_back(cd.get_str());
        } else {
            num.push_back(paren(coeff.str()));
        }
        for (const auto& f : fs) {
            bool toDen = f.head() == Head::Pow && f.expnt().isReal() && sgn(f.expnt().re()) < 0;
            Expr shown = toDen ? Expr::pow(f.kids()[0], -f.expnt()) : f;
            (toDen ? den : num).push_back(powStr(shown));
        }
        auto joinList = [&](const std::vector<std::string>& v) {
            std::string out;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += latex ? " " : "*";
                out += v[i];
            }
            return out;
        };
        std::string numStr = num.empty() ? "1" : joinList(num);
        if (den.empty()) {
            int own = sign.empty() ? (num.size() > 1 ? PProd : PAtom) : PSum;
            return wrap(sign + numStr, own, ctx);
        }
        if (latex)
            return wrap(sign + "\\frac{" + numStr + "}{" + joinList(den) + "}",
                        sign.empty() ? PProd : PSum, ctx);
        std::string denStr = den.size() == 1 ? den[0] : "(" + joinList(den) + ")";
        return wrap(sign + numStr + "/" + denStr, sign.empty() ? PProd : PSum, ctx);
    }

    /** A single product factor: either an atom-ish expression or base^e. */
    std::string powStr(const Expr& f) const {
        if (f.head() != Head::Pow) return run(f, PPow);
        const Expr& b = f.kids()[0];
        const Q& e = f.expnt();
        if (e == Q(1)) return run(b, PPow);
        if (e == Q(1, 2))
            return latex ? "\\sqrt{" + run(b, PSum) + "}" : "sqrt(" + run(b, PSum) + ")";
        std::string bs = run(b, PAtom);  // parenthesize any compound base
        std::string es = e.isNat() ? e.str() : "(" + e.str() + ")";
        if (latex) return bs + "^{" + e.str() + "}";
        return bs + "^" + es;
    }
};

void jsonOf(const Expr& e, nlohmann::json& j) {
    switch (e.head()) {
        case Head::Const:
            j["head"] = "Const";
            if (e.value().isReal()) {
                j["value"] = e.value().str();
            } else {
                j["re"] = e.value().re().get_str();
                j["im"] = e.value().im().get_str();
            }
            return;
        case Head::Var:
            j["head"] = "Var";
            j["name"] = e.name();
            return;
        case Head::Add:
        case Head::Mul: {
            j["head"] = e.head() == Head::Add ? "Add" : "Mul";
            auto& kids = j["kids"] = nlohmann::json::array();
            for (const auto& k : e.kids()) {
                nlohmann::json kj;
                jsonOf(k, kj);
                kids.push_back(std::move(kj));
            }
            return;
        }
        case Head::Pow: {
            j["head"] = "Pow";
            nlohmann::json b;
            jsonOf(e.kids()[0], b);
            j["base"] = std::move(b);
            j["exponent"] = e.expnt().str();
            return;
        }
        case Head::RootSum: {
            j["head"] = "RootSum";
            j["var"] = e.name();
            auto& cs = j["poly"] = nlohmann::json::array();
            for (int i = 0; i <= e.rootPoly().deg(); ++i) cs.push_back(e.rootPoly().coeff(i).str());
            nlohmann::json s;
            jsonOf(e.kids()[0], s);
            j["summand"] = std::move(s);
            return;
        }
        case Head::Unintegrated: {
            j["head"] = "Int";
            nlohmann::json f;
            jsonOf(e.kids()[0], f);
            j["integrand"] = std::move(f);
            j["var"] = e.name();
            return;
        }
        default: {
            j["head"] = TextPrinter::fnName(e.head());
            nlohmann::json a;
            jsonOf(e.kids()[0], a);
            j["arg"] = std::move(a);
            return;
        }
    }
}

void sexprOf(const Expr& e, std::string& out) {
    switch (e.head()) {
        case Head::Const:
            out += e.value().isReal()
                       ? e.value().str()
                       : "(complex " + e.value().re().get_str() + " " + e.value().im().get_str() +
                             ")";
            return;
        case Head::Var:
            out += e.name();
            return;
        case Head::Add:
        case Head::Mul: {
            out += e.head() == Head::Add ? "(+" : "(*";
            for (const auto& k : e.kids()) {
                out += ' ';
                sexprOf(k, out);
            }
            out += ')';
            return;
        }
        case Head::Pow:
            out += "(^ ";
            sexprOf(e.kids()[0], out);
            out += ' ' + e.expnt().str() + ')';
            return;
        case Head::RootSum: {
            out += "(rootsum " + e.name() + " (poly";
            for (int i = 0; i <= e.rootPoly().deg(); ++i) out += ' ' + e.rootPoly().coeff(i).str();
            out += ") ";
            sexprOf(e.kids()[0], out);
            out += ')';
            return;
        }
        case Head::Unintegrated:
            out += "(int ";
            sexprOf(e.kids()[0], out);
            out += ' ' + e.name() + ')';
            return;
        default:
            out += '(';
            out += TextPrinter::fnName(e.head());
            out += ' ';
            sexprOf(e.kids()[0], out);
            out += ')';
            return;
    }
}

}  // namespace

std::string printText(const Expr& e) { return TextPrinter{false}.run(e, PSum); }

std::string printLatex(const Expr& e) { return TextPrinter{true}.run(e, PSum); }

std::string printSexpr(const Expr& e) {
    std::string out;
    sexprOf(e, out);
    return out;
}

std::string printJson(const Expr& e) {
    nlohmann::json j;
    jsonOf(e, j);
    return j.dump();
}

}  // namespace integ
