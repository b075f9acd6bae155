#pragma once

#include "concord/covers.hpp"

#include <utility>
#include <vector>

namespace concord {

// Linking pairing on the homology of a finite cyclic branched cover, in the
// invariant-factor coordinates of `group`. gram(i, j) is the pairing of the
// i-th and j-th generators, a rational in [0, 1).
struct LinkingForm {
    CoverGroup group;
    QMat gram;
};

// Subgroup P with t P = P and P equal to its own annihilator. Generators are
// rows in invariant-factor coordinates.
struct Metabolizer {
    IMat generators;
    Int order = 1;
};

// Homomorphism to Z/m given by its values on the group generators.
struct Character {
    Int m = 1;
    std::vector<Int> values;
    Int exact_order = 1;
    bool surjective = false;
};

// Linking form of the k-fold branched cover, presented by the block
// tridiagonal symmetrization of the Seifert matrix (A + A^t diagonal, -A and
// -A^t off the diagonals); the pairing is the inverse of that presentation
// mod 1, carried to Smith coordinates. The invariant factors are checked
// against cover_group and the deck action is checked to be an isometry.
LinkingForm linking_form(const SeifertMatrix& a, unsigned k);

// Pairing of two coordinate vectors, in [0, 1).
Rat pairing(const LinkingForm& l, const std::vector<Int>& x, const std::vector<Int>& y);

// All t-invariant self-annihilating subgroups. An empty result is the
// conclusion that no metabolizer exists. Group orders above the bound raise
// "enumeration bound exceeded".
std::vector<Metabolizer> metabolizers(const LinkingForm& l);
std::vector<Metabolizer> metabolizers(const LinkingForm& l, const Int& bound);

// Validates that the span of the given generator rows is a metabolizer and
// returns it; fails otherwise. Works at any group order.
Metabolizer metabolizer_from_generators(const LinkingForm& l, const IMat& generators);

// All nontrivial characters of order dividing m that kill P, via the
// character group of group/P. m must be a prime power unless the experiment
// flag is set.
std::vector<Character> characters_vanishing(const LinkingForm& l, const Metabolizer& p,
                                            const Int& m, bool allow_any_order = false);

// Ordered pairs of metabolizers meeting only in 0 and jointly spanning the
// group. Emptiness is the level-k obstruction to being doubly metabolic.
std::vector<std::pair<Metabolizer, Metabolizer>> complementary_pairs(const LinkingForm& l);
std::vector<std::pair<Metabolizer, Metabolizer>> complementary_pairs(const LinkingForm& l,
                                                                     const Int& bound);

// Natural surjection from the level-k cover group onto the level-ks cover
// group, ks dividing k, induced by folding the covering sheets. Returned as
// a matrix sending invariant-factor coordinates at level k to invariant-
// factor coordinates at level ks (entries reduced modulo the target
// factors, image = proj * source). Checked to preserve the presentations
// and to commute with the deck actions.
IMat level_projection(const SeifertMatrix& a, unsigned k, unsigned ks);

// Metabolizer of the level-k linking form generated by the deck orbit of
// the positive pushoffs of a sublattice of the Seifert surface homology on
// which the Seifert pairing vanishes identically (rows of `rows` span the
// sublattice). The result is fully validated; available at any group order
// since no enumeration is involved. l must be linking_form(a, k).
Metabolizer metabolizer_from_seifert_lattice(const SeifertMatrix& a, const LinkingForm& l,
                                             const IMat& rows);

}  // namespace concord
