#include "concord/intmat.hpp"

#include <cstddef>

namespace concord {

Int det(const IMat& a) {
    if (!a.is_square()) fail("determinant of non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) return 1;
    IMat m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            m.swap_rows(piv, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

IMat mat_mod(const IMat& a, const Int& m) {
    IMat r = a;
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = mod_floor(r(i, j), m);
    return r;
}

IMat matpow(const IMat& a, unsigned long e) {
    if (!a.is_square()) fail("power of non-square matrix");
    IMat r = IMat::identity(a.rows());
    IMat b = a;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

namespace {

// Smallest nonzero entry (by absolute value) of d in the submatrix starting
// at (t, t); returns false if the submatrix is zero.
bool find_pivot(const IMat& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Int a = abs_int(d(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

void add_row_multiple(IMat& m, std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += c * m(src, j);
}

void add_col_multiple(IMat& m, std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += c * m(i, src);
}

void negate_row(IMat& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

}  // namespace

Smith smith_normal_form(const IMat& a) {
    std::size_t m = a.rows(), n = a.cols();
    Smith s{IMat::identity(m), a, IMat::identity(n)};
    IMat& d = s.d;
    std::size_t mn = m < n ? m : n;
    for (std::size_t t = 0; t < mn; ++t) {
        for (;;) {
            std::size_t pi, pj;
            if (!find_pivot(d, t, pi, pj)) {
                // Remaining submatrix is zero; all later diagonal entries stay 0.
                t = mn;
                break;
            }
            if (pi != t) { d.swap_rows(pi, t); s.u.swap_rows(pi, t); }
            if (pj != t) { d.swap_cols(pj, t); s.v.swap_cols(pj, t); }

            bool clean = true;
            for (std::size_t i = t + 1; i < m && clean; ++i)
                if (d(i, t) != 0) {
                    Int q = div_nearest(d(i, t), d(t, t));
                    if (q != 0) { add_row_multiple(d, i, t, -q); add_row_multiple(s.u, i, t, -q); }
                    if (d(i, t) != 0) clean = false;  // smaller remainder becomes next pivot
                }
            if (!clean) continue;
            for (std::size_t j = t + 1; j < n && clean; ++j)
                if (d(t, j) != 0) {
                    Int q = div_nearest(d(t, j), d(t, t));
                    if (q != 0) { add_col_multiple(d, j, t, -q); add_col_multiple(s.v, j, t, -q); }
                    if (d(t, j) != 0) clean = false;
                }
            if (!clean) continue;

            // Pivot must divide every remaining entry before moving on.
            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i)
                for (std::size_t j = t + 1; j < n && divisible; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        add_row_multiple(d, t, i, 1);
                        add_row_multiple(s.u, t, i, 1);
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (t == mn) break;
    }
    for (std::size_t t = 0; t < mn; ++t)
        if (d(t, t) < 0) { negate_row(d, t); negate_row(s.u, t); }
    return s;
}

std::vector<Int> invariant_factors(const IMat& a) {
    Smith s = smith_normal_form(a);
    std::size_t mn = a.rows() < a.cols() ? a.rows() : a.cols();
    std::vector<Int> f(mn);
    for (std::size_t i = 0; i < mn; ++i) f[i] = s.d(i, i);
    return f;
}

IMat hnf_rows(const IMat& a) {
    IMat h = a;
    std::size_t m = h.rows(), n = h.cols(), r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        std::size_t piv = r;
        while (piv < m && h(piv, j) == 0) ++piv;
        if (piv == m) continue;
        h.swap_rows(piv, r);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (h(i, j) == 0) continue;
            XGcd e = xgcd(h(r, j), h(i, j));
            Int ar = h(r, j) / e.g, ai = h(i, j) / e.g;
            for (std::size_t c = 0; c < n; ++c) {
                Int x = h(r, c), y = h(i, c);
                h(r, c) = e.s * x + e.t * y;
                h(i, c) = -ai * x + ar * y;
            }
        }
        if (h(r, j) < 0) negate_row(h, r);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = div_floor(h(i, j), h(r, j));
            if (q != 0) add_row_multiple(h, i, r, -q);
        }
        ++r;
    }
    IMat out(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = h(i, j);
    return out;
}

bool row_lattice_contains(const IMat& h, const std::vector<Int>& v) {
    if (v.size() != h.cols()) fail("vector length mismatch in lattice membership");
    std::vector<Int> w = v;
    std::size_t row = 0;
    for (std::size_t j = 0; j < h.cols(); ++j) {
        if (row < h.rows() && h(row, j) != 0) {
            if (w[j] % h(row, j) != 0) return false;
            Int q = w[j] / h(row, j);
            if (q != 0)
                for (std::size_t c = j; c < h.cols(); ++c) w[c] -= q * h(row, c);
            ++row;
        } else if (w[j] != 0) {
            return false;
        }
    }
    return true;
}

IMat inverse_unimodular(const IMat& a) {
    if (!a.is_square()) fail("inverse of non-square matrix");
    Smith s = smith_normal_form(a);
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (s.d(i, i) != 1) fail("matrix is not unimodular");
    return s.v * s.u;
}

IMat kernel_basis(const IMat& a) {
    Smith s = smith_normal_form(a);
    std::size_t m = a.rows(), n = a.cols();
    std::size_t mn = m < n ? m : n;
    std::vector<std::size_t> zero_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (j >= mn || s.d(j, j) == 0) zero_cols.push_back(j);
    IMat k(n, zero_cols.size());
    for (std::size_t c = 0; c < zero_cols.size(); ++c)
        for (std::size_t i = 0; i < n; ++i) k(i, c) = s.v(i, zero_cols[c]);
    return k;
}

}  // namespace concord
