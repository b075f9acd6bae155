#pragma once

#include "concord/laurent.hpp"
#include "concord/types.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace concord {

// Dense univariate polynomials with rational coefficients, ascending order,
// trailing (highest) zeros trimmed.
using QPoly = std::vector<Rat>;

QPoly qpoly_from(const LaurentPoly& f);  // requires min_exp >= 0
void qpoly_trim(QPoly& a);
bool qpoly_is_zero(const QPoly& a);
long qpoly_deg(const QPoly& a);  // -1 for the zero polynomial
QPoly qpoly_add(const QPoly& a, const QPoly& b);
QPoly qpoly_sub(const QPoly& a, const QPoly& b);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
QPoly qpoly_rem(QPoly a, const QPoly& b);
QPoly qpoly_deriv(const QPoly& a);
Rat qpoly_eval(const QPoly& a, const Rat& x);
// range of a over [lo, hi] by interval Horner evaluation (an enclosure)
std::pair<Rat, Rat> qpoly_eval_interval(const QPoly& a, const Rat& lo, const Rat& hi);

// Sturm chain of a squarefree polynomial, members scaled to primitive
// integer form (positive scaling preserves sign variations).
std::vector<QPoly> sturm_chain(QPoly g);
int sturm_variations(const std::vector<QPoly>& chain, const Rat& x);
// number of roots in (lo, hi]
long sturm_count(const std::vector<QPoly>& chain, const Rat& lo, const Rat& hi);

// A real algebraic number: an exact rational, or the unique root of an
// irreducible polynomial inside an open isolating interval.
class RealAlgebraic {
  public:
    static RealAlgebraic rational(const Rat& r);
    // g irreducible over Q with exactly one root in (lo, hi) and no root at
    // the endpoints; degree-1 inputs collapse to the rational case
    static RealAlgebraic root(const QPoly& g, const Rat& lo, const Rat& hi);

    bool exact() const { return exact_; }
    const Rat& value() const;  // exact case only
    Rat lower() const { return exact_ ? value_ : lo_; }
    Rat upper() const { return exact_ ? value_ : hi_; }
    const QPoly& minpoly() const { return g_; }  // empty for rationals

    void refine();  // halve the isolating interval
    void refine_to(const Rat& width);
    double approx();  // refines internally until a double is pinned down

    int compare(RealAlgebraic& other);  // -1 / 0 / +1 (refines both as needed)
    int compare_rat(const Rat& r);      // position of this relative to r

  private:
    bool exact_ = true;
    Rat value_;
    Rat lo_, hi_;
    QPoly g_;
    std::vector<QPoly> chain_;
};

// All real roots of an irreducible g inside (lo, hi), ascending; endpoints
// must not be roots.
std::vector<RealAlgebraic> isolate_roots(const QPoly& g, const Rat& lo, const Rat& hi);

// Exact sign of h(x) for a rational polynomial h.
int sign_at(const QPoly& h, RealAlgebraic& x);

// Number field Q[x]/(g) with a fixed real embedding x -> x0.
struct NumberField {
    QPoly g;  // irreducible over Q
    RealAlgebraic x0;
};
NumberField make_field(const QPoly& g, const RealAlgebraic& x0);

// Field elements are polynomials reduced mod g (degree < deg g).
using FElem = QPoly;

FElem f_const(const Rat& c);
FElem f_generator(const NumberField& F);  // x mod g
FElem f_reduce(const NumberField& F, QPoly a);
FElem f_add(const FElem& a, const FElem& b);
FElem f_sub(const FElem& a, const FElem& b);
FElem f_neg(const FElem& a);
FElem f_mul(const NumberField& F, const FElem& a, const FElem& b);
FElem f_inv(const NumberField& F, const FElem& a);  // a != 0
bool f_is_zero(const FElem& a);
int f_sign(NumberField& F, const FElem& a);

// Quadratic extension F[z]/(z^2 - x z + 1) with conjugation z -> x - z;
// a field whenever the embedding satisfies |x0| < 2.
struct ZElem {
    FElem a, b;  // a + b z
};

ZElem z_make(FElem a, FElem b);
ZElem z_zero();
bool z_is_zero(const ZElem& e);
ZElem z_add(const ZElem& u, const ZElem& v);
ZElem z_sub(const ZElem& u, const ZElem& v);
ZElem z_neg(const ZElem& u);
ZElem z_mul(const NumberField& F, const ZElem& u, const ZElem& v);
ZElem z_conj(const NumberField& F, const ZElem& u);
ZElem z_inv(const NumberField& F, const ZElem& u);

// Signature of a Hermitian matrix over the extension (real diagonal),
// zero eigenvalues (the radical) excluded from the count.
int hermitian_signature(NumberField& F, std::vector<std::vector<ZElem>> h);

// Minimal polynomial of 2cos(2 pi / q), monic with integer coefficients.
QPoly cos_minimal_poly(unsigned q);

// 2cos(2 pi turn) as an exact real algebraic number.
RealAlgebraic two_cos_of_turn(const Rat& turn);

// G with t^m G(t + 1/t) = f for a palindromic f of even span 2m (min_exp 0).
bool is_palindromic(const LaurentPoly& f);
QPoly palindromic_compress(const LaurentPoly& f);

// The rational with smallest denominator (then smallest numerator) strictly
// inside the open interval (lo, hi).
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

// Rational enclosure of acos(x/2) / (2 pi) for x ranging over [xlo, xhi],
// padded well beyond the evaluation precision; requires -2 < xlo <= xhi < 2.
std::pair<Rat, Rat> turn_enclosure(const Rat& xlo, const Rat& xhi);

}  // namespace concord
