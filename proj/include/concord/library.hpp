#pragma once

#include "concord/seifert.hpp"

#include <string>
#include <vector>

namespace concord {

// Seifert matrix of a knot whose Alexander polynomial is f(t) * f~(t), with
// f~ the coefficient-reversed partner of f. Built from the block form
// [[0, M], [Y^t, 0]] where t M - Y is the companion linearization of f, so
// det(t A - A^t) = f(t) * t^g f(1/t) up to units. Requires f(0) != 0,
// f(1) = +-1, and positive degree.
SeifertMatrix knot_from_factor(const LaurentPoly& f);

// Degree 8 non-reciprocal Alexander polynomial factor of the bundled
// Terasaka matrix.
LaurentPoly terasaka_factor();

// Named Seifert matrices bundled with the toolkit: B1, B2, B3, Trefoil
// (alias of B2), FigureEight, Unknot, StabilizedUnknot, Phi30Square,
// DoubledTwist, Terasaka. Lookup is case insensitive.
SeifertMatrix bundled_matrix(const std::string& name);
const std::vector<std::string>& bundled_names();

}  // namespace concord
