#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "concord/intmat.hpp"

#include <random>

using namespace concord;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
Int det_cofactor(const IMat& a) {
    std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    Int total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j) == 0) continue;
        IMat minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = a(r, c);
            }
        }
        Int term = a(0, j) * det_cofactor(minor);
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

IMat random_mat(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> d(lo, hi);
    IMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

IMat random_unimodular(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    IMat m = IMat::identity(n);
    for (int step = 0; step < 24; ++step) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) {
            m.swap_rows(i, pick(rng));
            continue;
        }
        Int k = coef(rng);
        for (std::size_t c = 0; c < n; ++c) m(i, c) += k * m(j, c);
    }
    return m;
}

bool is_diagonal(const IMat& d) {
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        IMat a = random_mat(rng, n, n);
        CHECK(det(a) == det_cofactor(a));
    }
    CHECK(det(IMat(0, 0)) == 1);
    CHECK(det(IMat{{5}}) == 5);
    CHECK(det(IMat{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("determinant of fixture intersection forms") {
    IMat b1{{0, 0, 1, 1}, {0, 0, 0, 1}, {1, 1, 0, 1}, {0, 1, 0, 0}};
    CHECK(det(b1 - b1.transpose()) == 1);
    IMat b2{{1, 1}, {0, 1}};
    CHECK(det(b2 - b2.transpose()) == 1);
}

TEST_CASE("smith normal form satisfies its contract") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + static_cast<std::size_t>(trial % 4);
        std::size_t c = 1 + static_cast<std::size_t>((trial / 4) % 4);
        IMat a = random_mat(rng, r, c, -6, 6);
        Smith s = smith_normal_form(a);
        CHECK(s.u * a * s.v == s.d);
        CHECK(abs_int(det(s.u)) == 1);
        CHECK(abs_int(det(s.v)) == 1);
        CHECK(is_diagonal(s.d));
        std::size_t k = std::min(r, c);
        for (std::size_t i = 0; i < k; ++i) {
            CHECK(s.d(i, i) >= 0);
            if (i + 1 < k && s.d(i, i) != 0) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
            if (i + 1 < k && s.d(i, i) == 0) CHECK(s.d(i + 1, i + 1) == 0);
        }
    }
}

TEST_CASE("invariant factors of known matrices") {
    CHECK(invariant_factors(IMat{{2, 4}, {6, 8}}) == std::vector<Int>{2, 4});
    CHECK(invariant_factors(IMat{{4, 0}, {0, 6}}) == std::vector<Int>{2, 12});
    CHECK(invariant_factors(IMat{{2, 0}, {0, 2}}) == std::vector<Int>{2, 2});
    CHECK(invariant_factors(IMat{{1, 2}, {2, 4}}) == std::vector<Int>{1, 0});
    // product of nonzero invariant factors is |det|
    IMat a{{3, 1, 4}, {1, 5, 9}, {2, 6, 5}};
    auto f = invariant_factors(a);
    CHECK(f[0] * f[1] * f[2] == abs_int(det(a)));
}

TEST_CASE("hermite form is canonical and preserves the row lattice") {
    std::mt19937 rng(31415);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + static_cast<std::size_t>(trial % 4);
        std::size_t c = 1 + static_cast<std::size_t>((trial / 3) % 4);
        IMat a = random_mat(rng, r, c, -5, 5);
        IMat h = hnf_rows(a);
        CHECK(hnf_rows(h) == h);
        // every original row is in the lattice of h and vice versa
        for (std::size_t i = 0; i < a.rows(); ++i) {
            std::vector<Int> v(c);
            for (std::size_t j = 0; j < c; ++j) v[j] = a(i, j);
            CHECK(row_lattice_contains(h, v));
        }
        IMat ha = hnf_rows(a);
        IMat back = hnf_rows(IMat(a));  // determinism
        CHECK(ha == back);
        // echelon shape with positive pivots, reduced entries above
        long last = -1;
        for (std::size_t i = 0; i < h.rows(); ++i) {
            long p = -1;
            for (std::size_t j = 0; j < h.cols(); ++j)
                if (h(i, j) != 0) {
                    p = static_cast<long>(j);
                    break;
                }
            REQUIRE(p > last);
            last = p;
            CHECK(h(i, static_cast<std::size_t>(p)) > 0);
            for (std::size_t k = 0; k < i; ++k) {
                CHECK(h(k, static_cast<std::size_t>(p)) >= 0);
                CHECK(h(k, static_cast<std::size_t>(p)) < h(i, static_cast<std::size_t>(p)));
            }
        }
    }
}

TEST_CASE("row lattice membership") {
    IMat h = hnf_rows(IMat{{2, 0}, {0, 3}});
    CHECK(row_lattice_contains(h, {4, 3}));
    CHECK(row_lattice_contains(h, {0, 0}));
    CHECK(row_lattice_contains(h, {-2, 6}));
    CHECK(!row_lattice_contains(h, {1, 0}));
    CHECK(!row_lattice_contains(h, {2, 2}));
}

TEST_CASE("unimodular inverse") {
    std::mt19937 rng(999);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        IMat m = random_unimodular(rng, n);
        REQUIRE(abs_int(det(m)) == 1);
        CHECK(m * inverse_unimodular(m) == IMat::identity(n));
        CHECK(inverse_unimodular(m) * m == IMat::identity(n));
    }
}

TEST_CASE("kernel basis spans the kernel and is saturated") {
    IMat a{{1, 2, 3}};
    IMat k = kernel_basis(a);
    CHECK(k.cols() == 2);
    CHECK((a * k).is_zero());
    auto inv = invariant_factors(k);
    for (const Int& f : inv) CHECK(f == 1);

    IMat b{{2, 4}, {1, 2}};
    IMat kb = kernel_basis(b);
    CHECK(kb.cols() == 1);
    CHECK((b * kb).is_zero());
    // saturated: (2, -1) not just (4, -2)
    CHECK(abs_int(kb(0, 0)) == 2);
    CHECK(abs_int(kb(1, 0)) == 1);

    IMat id = IMat::identity(3);
    CHECK(kernel_basis(id).cols() == 0);
}

TEST_CASE("matrix power and reduction") {
    IMat a{{1, 1}, {0, 1}};
    IMat a5 = matpow(a, 5);
    CHECK(a5 == IMat{{1, 5}, {0, 1}});
    CHECK(matpow(a, 0) == IMat::identity(2));
    IMat m{{7, -3}, {10, 4}};
    IMat r = mat_mod(m, 5);
    CHECK(r == IMat{{2, 2}, {0, 4}});
}
