#pragma once

#include "concord/laurent.hpp"

#include <optional>
#include <vector>

namespace concord {

// Irreducible factorization over the integers of the unit-normalized part of
// f, multiplicities expanded, prime constants included when the content is
// not 1. The product of the factors equals normalize_units(f). Factors are
// unit-normalized and sorted (by span, then coefficients). The span of each
// squarefree part remaining after the pre-screens is limited to 24.
std::vector<LaurentPoly> factor_over_integers(const LaurentPoly& f);

// Fox-Milnor test: a polynomial f with delta = +-t^l f(t) f(1/t), if one
// exists.
std::optional<LaurentPoly> reciprocal_pairing(const LaurentPoly& delta);

// If f is the n-th cyclotomic polynomial up to units, report n.
std::optional<unsigned> cyclotomic_index(const LaurentPoly& f);

}  // namespace concord
