#pragma once
/** @file expr.hpp
 *
 *  Surface syntax: the expression tree the parser produces and the
 *  printers consume.  Trees are immutable and shared; the "constructors"
 *  (add, mul, pow, ...) are the only way to build nodes and they enforce
 *  the canonical form — flattened and constant-folded sums/products with
 *  deterministically ordered children, normalized rational exponents.
 */

#include "integ/poly.hpp"
#include "integ/rational.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace integ {

/** Parse failure; `pos` is a character offset into the input. */
struct SyntaxError : std::runtime_error {
    std::size_t pos;
    SyntaxError(const std::string& what, std::size_t p)
        : std::runtime_error(what + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

/** An expression head the differentiator does not know. */
struct UnsupportedHead : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Head {
    Const,
    Var,
    Add,
    Mul,
    Pow,
    Log,
    Exp,
    Sin,
    Cos,
    Tan,
    ArcTan,
    Li,
    Ei,
    RootSum,
    Unintegrated,
};

/** Immutable expression tree node (shared, value-semantic handle).
 *
 *  Payload by head:
 *    Const         value()
 *    Var           name()
 *    Add, Mul      kids()  (>= 2, canonically ordered; Mul puts a constant
 *                  coefficient first when present)
 *    Pow           kids()[0] = base, expnt() = rational exponent
 *    Log..Ei       kids()[0] = argument
 *    RootSum       name() = bound root variable, rootPoly() over Q,
 *                  kids()[0] = summand (may use the bound variable)
 *    Unintegrated  kids()[0] = integrand, name() = integration variable;
 *                  a pending integral carried through partial results
 */
class Expr {
public:
    /** Default-constructed expression is the constant 0. */
    Expr();

    Head head() const { return rep_->head; }
    const Q& value() const { return rep_->value; }
    const std::string& name() const { return rep_->name; }
    const std::vector<Expr>& kids() const { return rep_->kids; }
    const Q& expnt() const { return rep_->expnt; }
    const Poly<Q>& rootPoly() const { return rep_->rootpoly; }

    bool isConst() const { return rep_->head == Head::Const; }
    bool isZero() const { return isConst() && rep_->value.isZero(); }
    bool isOne() const { return isConst() && rep_->value.isOne(); }
    /** The constant value if this is a Const node. */
    std::optional<Q> constValue() const {
        if (isConst()) return rep_->value;
        return std::nullopt;
    }

    // -- canonicalizing constructors ------------------------------------
    static Expr constant(const Q& v);
    static Expr constant(long v) { return constant(Q(v)); }
    static Expr var(const std::string& name);
    static Expr add(std::vector<Expr> terms);
    static Expr mul(std::vector<Expr> factors);
    static Expr pow(const Expr& base, const Q& exponent);
    static Expr apply(Head fn, const Expr& arg);  ///< Log..Ei heads only
    static Expr rootSum(const std::string& rootVar, const Poly<Q>& rootPoly, const Expr& summand);
    static Expr unintegrated(const Expr& integrand, const std::string& var);

    // convenience forms used all over the result builders
    static Expr sub(const Expr& a, const Expr& b) { return add({a, mul({constant(-1), b})}); }
    static Expr div(const Expr& a, const Expr& b) { return mul({a, pow(b, Q(-1))}); }
    static Expr log(const Expr& a) { return apply(Head::Log, a); }
    static Expr exp(const Expr& a) { return apply(Head::Exp, a); }
    static Expr atan(const Expr& a) { return apply(Head::ArcTan, a); }

    friend Expr operator+(const Expr& a, const Expr& b) { return add({a, b}); }
    friend Expr operator-(const Expr& a, const Expr& b) { return sub(a, b); }
    friend Expr operator*(const Expr& a, const Expr& b) { return mul({a, b}); }
    friend Expr operator/(const Expr& a, const Expr& b) { return div(a, b); }
    Expr operator-() const { return mul({constant(-1), *this}); }

    /** Total structural order (canonical child ordering and equality). */
    friend int cmp(const Expr& a, const Expr& b);
    friend bool operator==(const Expr& a, const Expr& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Expr& a, const Expr& b) { return cmp(a, b) != 0; }

private:
    struct Rep {
        Head head = Head::Const;
        Q value;
        std::string name;
        std::vector<Expr> kids;
        Q expnt;
        Poly<Q> rootpoly;
    };
    explicit Expr(std::shared_ptr<const Rep> r) : rep_(std::move(r)) {}
    static Expr makeRaw(Rep&& r) { return Expr(std::make_shared<const Rep>(std::move(r))); }

    std::shared_ptr<const Rep> rep_;
};

/** Parse the textual grammar (see README): rational literals, + - * / ^,
 *  calls log/exp/sin/cos/tan/atan/li/ei/sqrt, plus the output-only forms
 *  rootsum(v, poly, summand) and int(f, v) so printed results re-parse.
 *  Throws SyntaxError with a character position.
 */
Expr parseExpr(const std::string& text);

/** Exact derivative with respect to `var`, canonicalized. */
Expr differentiate(const Expr& e, const std::string& var);

// -- printers ----------------------------------------------------------
std::string printText(const Expr& e);
std::string printLatex(const Expr& e);
std::string printSexpr(const Expr& e);
std::string printJson(const Expr& e);

/** Replace free occurrences of Var(name); RootSum and Unintegrated bind
 *  their variable, so shadowed occurrences are left alone.
 */
Expr substVar(const Expr& e, const std::string& name, const Expr& replacement);

/** Does `e` mention Var(name) outside of binders? */
bool containsVar(const Expr& e, const std::string& name);

/** Interpret `e` as a polynomial in `var` with constant coefficients.
 *  Returns nullopt when some subterm is not polynomial in `var` (negative
 *  or fractional powers of var, var under a function head, other vars).
 */
std::optional<Poly<Q>> exprToPoly(const Expr& e, const std::string& var);

/** Rebuild an Expr from a polynomial over Q in the named variable. */
Expr polyToExpr(const Poly<Q>& p, const std::string& var);

}  // namespace integ
