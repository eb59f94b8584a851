#pragma once
/** @file diffield.hpp
 *
 *  Structure theory of differential fields built as towers of monomial
 *  extensions: splitting factorizations (normal/special parts), the
 *  canonical representation, local orders and residues, classification
 *  of a generator, and the in-field recognizers that decide whether an
 *  element is a derivative, a logarithmic derivative, or a logarithmic
 *  derivative of a radical.
 *
 *  The recognizers are deliberately three-valued.  Some sub-decisions
 *  (notably Risch differential equations and parametric logarithmic
 *  derivatives in exponential coefficients) live in higher layers; when
 *  one of those would be needed, the answer is Inconclusive rather than
 *  a guess.  Yes and No answers are always rigorous.
 */

#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "integ/fe.hpp"
#include "integ/ratint.hpp"
#include "integ/tower.hpp"

namespace integ {

// ---------------------------------------------------------------------------
// Errors

/** remainderAt: the value has a pole at a divisor of the modulus. */
struct NotInLocalRing : std::domain_error {
    using std::domain_error::domain_error;
};

/** residueAt: a pole of order > 1, so the residue map does not apply. */
struct PoleTooHigh : std::domain_error {
    using std::domain_error::domain_error;
};

/** classify: the candidate generator is not a monomial over the field
 *  below it; `witness` names an element exposing the dependency. */
struct NotAMonomial : std::domain_error {
    std::string witness;
    explicit NotAMonomial(const std::string& w)
        : std::domain_error("not a monomial; witness: " + w), witness(w) {}
};

/** Sentinel order of the zero element at any place. */
constexpr int ORDER_INF = std::numeric_limits<int>::max() / 2;

// ---------------------------------------------------------------------------
// Derivations as first-class maps on k[t]

using PolyMap = std::function<PolyF(const PolyF&)>;

/** The tower derivation D restricted to polynomials at `level`. */
PolyMap fullDerivation(const Tower& tw, int level);

/** The coefficient-wise map kappa_D at `level` (derives coefficients,
 *  treats the main variable as a constant).  This is the derivation
 *  under which the special part of a Rothstein-Trager resultant is
 *  isolated. */
PolyMap kappaDerivation(const Tower& tw, int level);

/** Plain d/dt in the main variable, ignoring the tower. */
PolyMap formalDerivation();

// ---------------------------------------------------------------------------
// Splitting factorizations

/** p = p_n * p_s with p_s special (p_s divides D p_s), p_n normal up to
 *  repeated factors; the content of p stays with p_n, p_s is monic. */
std::pair<PolyF, PolyF> splitFactor(const PolyF& p, const PolyMap& D);
std::pair<PolyF, PolyF> splitFactor(const PolyF& p, const Tower& tw, int level);

/** One squarefree layer of a splitting factorization:
 *  p_i = normal * special, both monic and squarefree, appearing with
 *  the stated multiplicity. */
struct SplitSqfBlock {
    PolyF normal;
    PolyF special;
    int multiplicity = 1;
};

/** Splitting squarefree factorization:
 *  p = content * prod_i (normal_i * special_i)^i. */
std::pair<FE, std::vector<SplitSqfBlock>> splitSquarefreeFactor(const PolyF& p, const PolyMap& D);
std::pair<FE, std::vector<SplitSqfBlock>> splitSquarefreeFactor(const PolyF& p, const Tower& tw,
                                                                int level);

/** f = polyPart + special + normal where den(special) is special,
 *  den(normal) is normal, and the normal summand is a proper fraction. */
struct CanonicalRep {
    PolyF polyPart;
    FE special;
    FE normal;
};
CanonicalRep canonicalRepresentation(const FE& f, const Tower& tw, int level);

// ---------------------------------------------------------------------------
// Local data at a place

/** Order nu_p(f) at an irreducible p of k[t]: the exact power of p in
 *  f, negative at poles; ORDER_INF for f = 0. */
int orderAt(const FE& f, const PolyF& p, int level);

/** Order of a nonzero polynomial at p (the zero polynomial maps to
 *  ORDER_INF). */
int orderAtPoly(const PolyF& a, const PolyF& p);

/** Order at infinity: deg(den) - deg(num); ORDER_INF for f = 0. */
int orderAtInfinity(const FE& f, int level);

/** pi_a(f): the image of f in k[t]/(a) for f in the local ring, i.e.
 *  den(f) invertible mod a.  Throws NotInLocalRing otherwise. */
PolyF remainderAt(const FE& f, const PolyF& a, int level);

/** residue_p(f) for p normal irreducible: pi_p(f * p / D(p)).  Throws
 *  std::invalid_argument when p is not normal and PoleTooHigh when f
 *  has a pole of order > 1 at p. */
PolyF residueAt(const FE& f, const PolyF& p, const Tower& tw, int level);

// ---------------------------------------------------------------------------
// Classification of a generator

/** Shape of D t alone, without any monomial certification. */
GenClass classifyShape(const Tower& tw, int level);

struct Classification {
    GenClass cls = GenClass::BaseVar;
    /** Irreducible special polynomials, when known. */
    std::vector<PolyF> specialIrr;
    /** Whether specialIrr is provably the complete list. */
    bool specialsKnown = false;
    /** Whether the monomial test reached a definitive "is a monomial".
     *  When false the extension is *assumed* transcendental, which is
     *  the standing convention for towers whose test is inconclusive. */
    bool certified = false;
    std::string note;
};

/** Classify generator `level`.  Throws NotAMonomial (with a witness)
 *  when the generator is provably algebraic over the field below. */
Classification classify(const Tower& tw, int level);

// ---------------------------------------------------------------------------
// In-field recognizers

enum class Decide { Yes, No, Inconclusive };

struct DerivativeWitness {
    Decide status = Decide::Inconclusive;
    FE u;               ///< for Yes: D(u) = f
    std::string note;
};

/** Is f = D(u) for some u in the level-`level` field? */
DerivativeWitness derivativeQ(const FE& f, const Tower& tw, int level);

struct LogDerivWitness {
    Decide status = Decide::Inconclusive;
    FE u;               ///< for Yes: D(u)/u = f
    std::string note;
};

/** Is f = D(u)/u for some nonzero u in the field? */
LogDerivWitness logarithmicDerivativeQ(const FE& f, const Tower& tw, int level);

struct RadicalWitness {
    Decide status = Decide::Inconclusive;
    long n = 1;         ///< for Yes: n * f = D(u)/u
    FE u;
    std::string note;
};

/** Is f = (1/n) D(u)/u for some n >= 1 and nonzero u, i.e. the
 *  logarithmic derivative of a k-radical? */
RadicalWitness radicalLogarithmicDerivativeQ(const FE& f, const Tower& tw, int level);

// ---------------------------------------------------------------------------
// Limited integration over the base field

/** Solution of f = D(v) + sum_i c_i * w_i with constant c_i. */
struct LimitedBase {
    RF v;
    std::vector<Q> c;
};

/** Decide limited integration in Q(x).  Complete for rational-function
 *  data: nullopt is a definitive "no solution". */
std::optional<LimitedBase> limitedIntegrateBase(const RF& f, const std::vector<RF>& w);

// ---------------------------------------------------------------------------
// Conversions between level-1 tower elements and rational functions

/** View a tower element of level <= 1 as an element of Q(x). */
RF toBaseRF(const FE& f);

/** Embed an element of Q(x) at level 1 of a tower. */
FE fromBaseRF(const RF& f);

}  // namespace integ
