#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "concord/linkform.hpp"

namespace concord {

// A point on the unit circle written as a root of unity times an integer
// power of the symbolic circle parameter, or zero.
struct Phase {
    bool zero = true;
    Rat turn = 0;  // fraction of a full turn, kept in [0, 1)
    Rat zpow = 0;  // exponent of the symbolic parameter

    static Phase unit(const Rat& turn, const Rat& zpow = 0);
};

bool operator==(const Phase& a, const Phase& b);
inline bool operator!=(const Phase& a, const Phase& b) { return !(a == b); }
Phase phase_mul(const Phase& a, const Phase& b);
Phase phase_conj(const Phase& a);

// Square matrix of phases; the representations built here only ever produce
// monomial matrices, so products never need sums of distinct phases.
class PhaseMat {
  public:
    explicit PhaseMat(std::size_t n) : n_(n), e_(n * n) {}

    std::size_t size() const { return n_; }
    Phase& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const Phase& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    static PhaseMat identity(std::size_t n);
    PhaseMat operator*(const PhaseMat& o) const;
    PhaseMat conjugate_transpose() const;
    bool operator==(const PhaseMat& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const PhaseMat& o) const { return !(*this == o); }

  private:
    std::size_t n_;
    std::vector<Phase> e_;
};

// chi evaluated on a group element, as a fraction of a full turn
Rat character_turn(const Character& chi, const std::vector<Int>& v);

// Unitary representation of Z x| H of dimension k: the generator of Z maps to
// z times the cyclic shift, and h in H maps to diag(chi(h), chi(t h), ...).
struct MetaRep {
    unsigned k = 1;
    UnitCirclePoint z = UnitCirclePoint::exact_turn(0);
    CoverGroup group;
    Character chi;
    PhaseMat shift = PhaseMat(1);
    std::vector<PhaseMat> images;  // one per group generator
};

struct RepClassification {
    bool irreducible = false;
    bool in_pk_irr = false;
    long orbit_size = 1;
};

MetaRep build_rep(unsigned k, const UnitCirclePoint& z, const CoverGroup& group,
                  const Character& chi);

// image of the group element (n, h) under the representation
PhaseMat rep_image(const MetaRep& r, long n, const std::vector<Int>& h);

// irreducible iff the deck orbit of chi has length exactly k; membership in
// the restricted class additionally needs a transcendental circle parameter
// and a character of prime power order
RepClassification classify(const MetaRep& r);

// representation of dimension k1*k2 carrying z1*z2 and the product character;
// requires coprime dimensions and characters on the same cover group
MetaRep tensor(const MetaRep& r1, const MetaRep& r2);

// circle-valued homomorphism (n, v) -> z^n chi(v)^j
struct U1Rep {
    UnitCirclePoint z = UnitCirclePoint::exact_turn(0);
    Character chi;
    long j = 1;
};

U1Rep u1_pushdown(const UnitCirclePoint& z, const Character& chi, long j);
Phase u1_value(const U1Rep& rep, long n, const std::vector<Int>& v);

// Reduce a cyclic shift with per-step phases z_0..z_{k-1} to the uniform
// shift by a diagonal conjugation: returns the uniform phase w (a k-th root
// of the product of the inputs) and the diagonal. Exposed for testing.
std::pair<Phase, std::vector<Phase>> normalize_twisted_shift(const std::vector<Phase>& zs);

}  // namespace concord
