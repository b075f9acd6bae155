#pragma once

#include "concord/mat.hpp"

#include <vector>

namespace concord {

// Exact determinant (Bareiss fraction-free elimination).
Int det(const IMat& a);

// Entries reduced into [0, m).
IMat mat_mod(const IMat& a, const Int& m);

IMat matpow(const IMat& a, unsigned long e);

// u * a * v = d with u, v unimodular and d diagonal, d(0,0) | d(1,1) | ...,
// all diagonal entries nonnegative.
struct Smith {
    IMat u, d, v;
};
Smith smith_normal_form(const IMat& a);

// Diagonal of the Smith form, length min(rows, cols).
std::vector<Int> invariant_factors(const IMat& a);

// Canonical basis of the lattice spanned by the rows: echelon form with
// positive pivots, entries above each pivot reduced into [0, pivot).
// Zero rows are dropped.
IMat hnf_rows(const IMat& a);

// Membership of v in the row lattice of h, where h = hnf_rows(...).
bool row_lattice_contains(const IMat& h, const std::vector<Int>& v);

// Inverse of a matrix with determinant +-1.
IMat inverse_unimodular(const IMat& a);

// Columns form a basis of the integer kernel {x : a x = 0}; the basis is
// saturated (spans the rational kernel as well).
IMat kernel_basis(const IMat& a);

}  // namespace concord
