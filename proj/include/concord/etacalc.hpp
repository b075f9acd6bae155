#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "concord/metarep.hpp"

namespace concord {

// Satellite description: an orbit knot with optional vanishing declarations
// and a list of companion stages. Group-element data (axis lift classes,
// declared metabolizer generators, characters) always uses the coordinates of
// linking_form(orbit, k) at the corresponding level.
struct SatelliteKnot {
    SeifertMatrix orbit;
    bool ribbon = false;
    bool slice = false;
    std::map<unsigned, IMat> metabolizer_family;  // declared generators per level
    std::optional<Rat> base_bound;                // declared bound on |eta| of the orbit

    struct Stage {
        SeifertMatrix companion;
        long copies = 1;  // companion is tied along this many parallel axes
        std::map<unsigned, std::vector<Int>> axis;  // one lift class per level

        explicit Stage(SeifertMatrix c) : companion(std::move(c)) {}
    };
    std::vector<Stage> stages;

    explicit SatelliteKnot(SeifertMatrix o) : orbit(std::move(o)) {}
};

// One Levine-Tristram signature of a companion at an exact turn, counted
// with multiplicity: value = copies * signature_at(matrix, turn).
struct SignatureTerm {
    SeifertMatrix matrix;
    long copies = 1;
    Rat turn;
    int value = 0;
};

// Exact eta decomposition: a base contribution (known, or a symbolic unknown
// bounded by a caller-declared constant) plus signature correction terms.
struct EtaExpression {
    bool base_known = true;
    RatInterval base{0, 0, true};
    std::vector<SignatureTerm> terms;
    std::vector<std::string> assumptions;
};

// sum of the signature correction terms
Rat correction_sum(const EtaExpression& e);

// base plus corrections; fails when the base is an unresolved unknown
RatInterval eta_value(const EtaExpression& e);

// sum of the Levine-Tristram signatures at all k-th roots of unity;
// the difference between the eta invariants upstairs and downstairs
int cover_correction(const SeifertMatrix& a, unsigned k);

// eta of the satellite under the metabelian representation attached to
// (z, chi): base term for the orbit plus one signature of each companion at
// each of the k lifts of its axis. The base resolves to exactly zero only
// when the orbit is declared ribbon or slice, chi vanishes on the declared
// metabolizer at this level, and the representation lies in the admissible
// class (irreducible, prime power character order, transcendental z);
// otherwise a declared base_bound gives an interval, and failing that the
// base stays unknown.
EtaExpression satellite_eta(const SatelliteKnot& s, unsigned k, const Character& chi,
                            const UnitCirclePoint& z);
EtaExpression satellite_eta(const SatelliteKnot& s, const LinkingForm& l, const Character& chi,
                            const UnitCirclePoint& z);

// the metabelian L2 eta invariant of a knot: the signature integral
RatInterval l2_abelian(const SeifertMatrix& a);

// L2 eta of a satellite: the base value plus the signature integral of every
// companion whose axis class has infinite order in the relevant quotient
// (axis_nonvanishing); an empty base means a symbolic unknown
EtaExpression l2_satellite(const std::optional<Rat>& base_value,
                           const std::vector<std::pair<SeifertMatrix, bool>>& companions);

}  // namespace concord
