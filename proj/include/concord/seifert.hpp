#pragma once

#include "concord/algreal.hpp"
#include "concord/intmat.hpp"
#include "concord/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace concord {

// Integer Seifert matrix: even size (0 allowed for the unknot) with
// unimodular intersection form A - A^t.
class SeifertMatrix {
public:
    explicit SeifertMatrix(IMat a);

    const IMat& entries() const { return a_; }
    std::size_t size() const { return a_.rows(); }

    SeifertMatrix direct_sum(const SeifertMatrix& other) const;
    SeifertMatrix negated() const;
    // m-fold direct sum; negative m sums |m| copies of the negation,
    // m = 0 gives the empty matrix.
    SeifertMatrix multiple(long m) const;

private:
    IMat a_;
};

// det(A t - A^t) shifted so the lowest exponent is 0. The sign is canonical:
// the value at t = 1 equals det(A - A^t) = +1.
LaurentPoly alexander(const SeifertMatrix& a);

// Mod-8 obstruction: true iff the Alexander polynomial at -1 is +-1 mod 8.
bool arf_zero_solvable(const SeifertMatrix& a);

// Point of the unit circle: an exact rational turn, or a rational witness
// approximating a generic (transcendental) angle.
struct UnitCirclePoint {
    bool exact;
    Rat turn;

    static UnitCirclePoint exact_turn(const Rat& t);
    static UnitCirclePoint transcendental(const Rat& witness);
};

// Signature of (1-z)A + (1-conj z)A^t, zero eigenvalues excluded. Exact turns
// are evaluated in the appropriate real cyclotomic field; transcendental
// witnesses are looked up on the signature step function and rejected with
// "uncertified signature; raise precision" if the witness cannot be certified
// to avoid every zero of the Alexander polynomial.
int signature_at(const SeifertMatrix& a, const UnitCirclePoint& z);
int signature_at(const SeifertMatrix& a, const UnitCirclePoint& z, const Rat& enclosure_width);

// One unit-circle zero of the Alexander polynomial, as a turn in (0,1).
struct ProfilePoint {
    std::optional<Rat> turn;  // exact turn when the factor is cyclotomic
    Rat lo, hi;               // certified enclosure of the turn (lo = hi = turn when exact)
    LaurentPoly factor;       // irreducible factor vanishing at the point
    int value;                // signature at the point itself
};

// Maximal open arc between consecutive zeros, carrying the constant
// signature computed at a verified rational sample turn inside the arc.
struct ProfileArc {
    Rat sample;
    int value;
};

// Step function turn -> signature covering the whole circle. Points are
// ascending in (0,1) and symmetric under turn -> 1 - turn. There are
// max(#points, 1) arcs: arcs[0] runs through turn 0 (its value is always 0),
// and arcs[i] runs from points[i-1] to points[i].
struct SignatureProfile {
    std::vector<ProfilePoint> points;
    std::vector<ProfileArc> arcs;
};

SignatureProfile signature_profile(const SeifertMatrix& a);
SignatureProfile signature_profile(const SeifertMatrix& a, const Rat& enclosure_width);

// Interval containing the integral of the signature function over the circle
// of total measure 1; exact (lo = hi) when every zero is at an exact turn.
struct RatInterval {
    Rat lo, hi;
    bool exact;
};

RatInterval signature_integral(const SeifertMatrix& a);

// Rows spanning a primitive rank-n/2 sublattice on which the Seifert pairing
// vanishes identically. In doubly mode the result is a full n x n unimodular
// basis whose first and last n/2 rows each span such a sublattice, putting
// the matrix in the shape with both diagonal blocks zero. An empty result
// carries the report "not found (bounded search)".
struct MetabolicResult {
    std::optional<IMat> basis;
    std::string report;
};

MetabolicResult metabolic_witness(const SeifertMatrix& a, long search_bound, bool doubly = false);

Rat default_enclosure_width();

}  // namespace concord
