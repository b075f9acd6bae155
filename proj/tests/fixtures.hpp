#pragma once

#include "concord/library.hpp"

namespace concord {
namespace fixtures {

inline SeifertMatrix realize_factor(const LaurentPoly& q) { return knot_from_factor(q); }

inline SeifertMatrix b1() { return bundled_matrix("B1"); }

inline SeifertMatrix b2() { return bundled_matrix("B2"); }

inline SeifertMatrix b3() { return bundled_matrix("B3"); }

inline SeifertMatrix figure_eight() { return bundled_matrix("FigureEight"); }

inline SeifertMatrix unknot() { return bundled_matrix("Unknot"); }

inline SeifertMatrix stabilized_unknot() { return bundled_matrix("StabilizedUnknot"); }

// Alexander polynomial Phi30(t)^2; all prime power branched covers are
// homology spheres while the 6-fold cover has order 625.
inline SeifertMatrix phi30_square_knot() { return bundled_matrix("Phi30Square"); }

// Alexander polynomial (-2t + 5 - 2t^{-1})^2 up to shift.
inline SeifertMatrix doubled_twist_knot() { return bundled_matrix("DoubledTwist"); }

inline SeifertMatrix terasaka_knot() { return bundled_matrix("Terasaka"); }

}  // namespace fixtures
}  // namespace concord
