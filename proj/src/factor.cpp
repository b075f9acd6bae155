#include "concord/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace concord {

namespace {

constexpr long kSpanBound = 24;

// ---------- arithmetic mod a small prime (dense, little-endian) ----------

using FpPoly = std::vector<std::int64_t>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t fp_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::int64_t fp_inv(std::int64_t a, std::int64_t p) { return fp_pow((a % p + p) % p, p - 2, p); }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(r);
    return r;
}

// a mod b, b nonzero.
FpPoly fp_rem(FpPoly a, const FpPoly& b, std::int64_t p) {
    std::int64_t inv = fp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        std::int64_t c = a.back() * inv % p;
        std::size_t sh = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[sh + j] = ((a[sh + j] - c * b[j]) % p + p) % p;
        fp_trim(a);
        if (a.size() < b.size()) break;
    }
    return a;
}

FpPoly fp_monic(FpPoly a, std::int64_t p) {
    if (a.empty()) return a;
    std::int64_t inv = fp_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::int64_t p) {
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, p);
}

FpPoly fp_deriv(const FpPoly& a, std::int64_t p) {
    FpPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(static_cast<std::int64_t>(i % p) * a[i] % p);
    fp_trim(r);
    return r;
}

FpPoly fp_powmod(FpPoly base, Int e, const FpPoly& mod, std::int64_t p) {
    FpPoly r{1};
    base = fp_rem(std::move(base), mod, p);
    while (e > 0) {
        if ((e & 1) != 0) r = fp_rem(fp_mul(r, base, p), mod, p);
        base = fp_rem(fp_mul(base, base, p), mod, p);
        e >>= 1;
    }
    return r;
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
std::vector<FpPoly> berlekamp(const FpPoly& u, std::int64_t p) {
    std::size_t n = u.size() - 1;
    if (n <= 1) return {u};
    // Frobenius matrix: column j = t^(j p) mod u.
    std::vector<FpPoly> cols(n);
    FpPoly tp = fp_powmod(FpPoly{0, 1}, Int(p), u, p);
    cols[0] = FpPoly{1};
    for (std::size_t j = 1; j < n; ++j) cols[j] = fp_rem(fp_mul(cols[j - 1], tp, p), u, p);
    // q - I as a dense matrix, row-major.
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < cols[j].size(); ++i) m[i][j] = cols[j][i];
        m[j][j] = ((m[j][j] - 1) % p + p) % p;
    }
    // Kernel basis by Gaussian elimination.
    std::vector<long> pivot_col_of_row(n, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[rank]);
        std::int64_t inv = fp_inv(m[rank][col], p);
        for (std::size_t j = 0; j < n; ++j) m[rank][j] = m[rank][j] * inv % p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            std::int64_t c = m[i][col];
            for (std::size_t j = 0; j < n; ++j) m[i][j] = ((m[i][j] - c * m[rank][j]) % p + p) % p;
        }
        pivot_col_of_row[rank] = static_cast<long>(col);
        ++rank;
    }
    std::vector<FpPoly> basis;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < rank; ++r) is_pivot[static_cast<std::size_t>(pivot_col_of_row[r])] = true;
    for (std::size_t col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        FpPoly v(n, 0);
        v[col] = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            std::size_t pc = static_cast<std::size_t>(pivot_col_of_row[r]);
            v[pc] = (p - m[r][col]) % p;
        }
        fp_trim(v);
        basis.push_back(std::move(v));
    }
    std::size_t nfactors = basis.size();
    std::vector<FpPoly> factors{u};
    if (nfactors <= 1) return factors;
    for (const FpPoly& v : basis) {
        if (factors.size() == nfactors) break;
        if (v.size() <= 1) continue;  // constants split nothing
        for (std::size_t fi = 0; fi < factors.size() && factors.size() < nfactors; ++fi) {
            if (factors[fi].size() <= 2) continue;
            for (std::int64_t c = 0; c < p && factors.size() < nfactors; ++c) {
                FpPoly shifted = v;
                if (shifted.empty()) shifted.push_back(0);
                shifted[0] = ((shifted[0] - c) % p + p) % p;
                fp_trim(shifted);
                if (shifted.empty()) continue;
                FpPoly g = fp_gcd(factors[fi], shifted, p);
                if (g.size() > 1 && g.size() < factors[fi].size()) {
                    FpPoly rest = factors[fi];
                    // rest / g, exact
                    FpPoly q;
                    {
                        FpPoly r = rest;
                        std::int64_t inv = fp_inv(g.back(), p);
                        q.assign(r.size() - g.size() + 1, 0);
                        for (std::size_t i = q.size(); i-- > 0;) {
                            if (r.size() < g.size() + i) continue;
                            if (r.size() != g.size() + i) continue;
                            std::int64_t cc = r.back() * inv % p;
                            q[i] = cc;
                            for (std::size_t j = 0; j < g.size(); ++j)
                                r[i + j] = ((r[i + j] - cc * g[j]) % p + p) % p;
                            fp_trim(r);
                        }
                    }
                    factors[fi] = g;
                    factors.push_back(fp_monic(q, p));
                }
            }
        }
    }
    return factors;
}

// ---------- arithmetic mod a big modulus (for Hensel lifting) ----------

using ZmPoly = std::vector<Int>;  // little-endian, coefficients in [0, m)

void zm_trim(ZmPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZmPoly zm_reduce(const std::vector<Int>& a, const Int& m) {
    ZmPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_floor(a[i], m);
    zm_trim(r);
    return r;
}

ZmPoly zm_add(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    ZmPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod_floor(r[i] + b[i], m);
    zm_trim(r);
    return r;
}

ZmPoly zm_sub(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    ZmPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod_floor(r[i] - b[i], m);
    zm_trim(r);
    return r;
}

ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZmPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = mod_floor(r[i + j] + a[i] * b[j], m);
    }
    zm_trim(r);
    return r;
}

// Division by a monic polynomial.
void zm_divrem_monic(const ZmPoly& a, const ZmPoly& b, const Int& m, ZmPoly& q, ZmPoly& r) {
    r = a;
    if (r.size() < b.size()) {
        q.clear();
        return;
    }
    q.assign(r.size() - b.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        if (r.size() < b.size() + i || r.size() != b.size() + i) continue;
        Int c = r.back();
        q[i] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = mod_floor(r[i + j] - c * b[j], m);
        zm_trim(r);
    }
}

struct HenselPair {
    ZmPoly g, h, s, t;
};

// One quadratic lifting step: modulus m -> m2, with u = g h (mod m),
// s g + t h = 1 (mod m), g and h monic.
HenselPair hensel_step(const ZmPoly& u, const HenselPair& in, const Int& m2) {
    ZmPoly g = zm_reduce(in.g, m2), h = zm_reduce(in.h, m2);
    ZmPoly s = zm_reduce(in.s, m2), t = zm_reduce(in.t, m2);
    ZmPoly e = zm_sub(zm_reduce(u, m2), zm_mul(g, h, m2), m2);
    ZmPoly q, r;
    zm_divrem_monic(zm_mul(s, e, m2), h, m2, q, r);
    ZmPoly g1 = zm_add(g, zm_add(zm_mul(t, e, m2), zm_mul(q, g, m2), m2), m2);
    ZmPoly h1 = zm_add(h, r, m2);
    ZmPoly b = zm_sub(zm_add(zm_mul(s, g1, m2), zm_mul(t, h1, m2), m2), ZmPoly{1}, m2);
    ZmPoly c, d;
    zm_divrem_monic(zm_mul(s, b, m2), h1, m2, c, d);
    ZmPoly s1 = zm_sub(s, d, m2);
    ZmPoly t1 = zm_sub(t, zm_add(zm_mul(t, b, m2), zm_mul(c, g1, m2), m2), m2);
    return {g1, h1, s1, t1};
}

// Extended Euclid mod p for the initial Bezout pair.
void fp_xgcd(const FpPoly& a, const FpPoly& b, std::int64_t p, FpPoly& s, FpPoly& t) {
    FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // quotient of r0 by r1
        FpPoly q;
        FpPoly r = r0;
        std::int64_t inv = fp_inv(r1.back(), p);
        if (r.size() >= r1.size()) {
            q.assign(r.size() - r1.size() + 1, 0);
            while (r.size() >= r1.size()) {
                std::int64_t c = r.back() * inv % p;
                std::size_t sh = r.size() - r1.size();
                q[sh] = c;
                for (std::size_t j = 0; j < r1.size(); ++j)
                    r[sh + j] = ((r[sh + j] - c * r1[j]) % p + p) % p;
                fp_trim(r);
                if (r.empty()) break;
            }
        }
        auto comb = [&](const FpPoly& x0, const FpPoly& x1) {
            FpPoly qx = fp_mul(q, x1, p);
            FpPoly res(std::max(x0.size(), qx.size()), 0);
            for (std::size_t i = 0; i < x0.size(); ++i) res[i] = x0[i];
            for (std::size_t i = 0; i < qx.size(); ++i) res[i] = ((res[i] - qx[i]) % p + p) % p;
            fp_trim(res);
            return res;
        };
        FpPoly s2 = comb(s0, s1), t2 = comb(t0, t1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd (a unit for coprime inputs); scale Bezout pair by its inverse.
    std::int64_t inv = fp_inv(r0.back(), p);
    s = s0;
    t = t0;
    for (auto& c : s) c = c * inv % p;
    for (auto& c : t) c = c * inv % p;
}

// Lift the factorization u = prod(facs) (mod p) to modulus mfinal (a power
// of p), u monic over Z.
std::vector<ZmPoly> hensel_lift_tree(const ZmPoly& u, const std::vector<FpPoly>& facs,
                                     std::int64_t p, const Int& mfinal) {
    if (facs.size() == 1) return {zm_reduce(u, mfinal)};
    std::size_t half = facs.size() / 2;
    FpPoly g0{1}, h0{1};
    for (std::size_t i = 0; i < half; ++i) g0 = fp_mul(g0, facs[i], p);
    for (std::size_t i = half; i < facs.size(); ++i) h0 = fp_mul(h0, facs[i], p);
    FpPoly s0, t0;
    fp_xgcd(g0, h0, p, s0, t0);
    HenselPair pair;
    pair.g.assign(g0.begin(), g0.end());
    pair.h.assign(h0.begin(), h0.end());
    pair.s.assign(s0.begin(), s0.end());
    pair.t.assign(t0.begin(), t0.end());
    Int m = p;
    while (m < mfinal) {
        Int m2 = m * m;
        pair = hensel_step(u, pair, m2);
        m = m2;
    }
    pair.g = zm_reduce(pair.g, mfinal);
    pair.h = zm_reduce(pair.h, mfinal);
    std::vector<FpPoly> left(facs.begin(), facs.begin() + static_cast<long>(half));
    std::vector<FpPoly> right(facs.begin() + static_cast<long>(half), facs.end());
    std::vector<ZmPoly> out = hensel_lift_tree(pair.g, left, p, mfinal);
    std::vector<ZmPoly> more = hensel_lift_tree(pair.h, right, p, mfinal);
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

// ---------- Zassenhaus over Z ----------

LaurentPoly from_dense(const std::vector<Int>& v) { return LaurentPoly::from_coeffs(v); }

// Symmetric lift of a ZmPoly into (-m/2, m/2].
std::vector<Int> sym_lift(const ZmPoly& a, const Int& m) {
    std::vector<Int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] * 2 > m) ? Int(a[i] - m) : a[i];
    return r;
}

Int ceil_sqrt(const Int& n) {
    Int r = boost::multiprecision::sqrt(n);
    if (r * r < n) ++r;
    return r;
}

// Factor a monic squarefree integer polynomial of degree >= 1.
std::vector<LaurentPoly> zassenhaus_monic(const LaurentPoly& mpoly) {
    long n = mpoly.max_exp();
    if (n == 1) return {mpoly};
    std::vector<Int> mc = mpoly.dense();

    // Prime with squarefree reduction.
    static const int primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103};
    std::int64_t p = 0;
    FpPoly up;
    for (int cand : primes) {
        FpPoly red(mc.size());
        for (std::size_t i = 0; i < mc.size(); ++i)
            red[i] = static_cast<std::int64_t>(mod_floor(mc[i], cand).convert_to<long long>());
        fp_trim(red);
        if (red.size() != mc.size()) continue;  // leading coefficient vanished (impossible: monic)
        FpPoly d = fp_deriv(red, cand);
        if (d.empty()) continue;
        FpPoly g = fp_gcd(red, d, cand);
        if (g.size() == 1) {
            p = cand;
            up = fp_monic(red, cand);
            break;
        }
    }
    if (p == 0) fail("no squarefree prime reduction found");

    std::vector<FpPoly> modfacs = berlekamp(up, p);
    if (modfacs.size() == 1) return {mpoly};
    std::sort(modfacs.begin(), modfacs.end(),
              [](const FpPoly& a, const FpPoly& b) { return a.size() < b.size(); });

    // Mignotte-style bound: factor coefficients bounded by 2^n * ||M||_2.
    Int norm2 = 0;
    for (const Int& c : mc) norm2 += c * c;
    Int bound = (Int(1) << static_cast<unsigned>(n)) * ceil_sqrt(norm2);
    Int need = 2 * bound + 1;
    Int mfinal = p;
    while (mfinal < need) mfinal *= mfinal;

    std::vector<ZmPoly> pool = hensel_lift_tree(zm_reduce(mc, mfinal), modfacs, p, mfinal);

    std::vector<LaurentPoly> out;
    LaurentPoly u = mpoly;
    std::size_t s = 1;
    while (2 * s <= pool.size()) {
        // all index subsets of size s
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        bool found = false;
        for (;;) {
            ZmPoly prod{1};
            for (std::size_t i : idx) prod = zm_mul(prod, pool[i], mfinal);
            LaurentPoly cand = from_dense(sym_lift(prod, mfinal));
            // a factor of a monic u with u(0) != 0 is monic with nonzero constant term
            std::optional<LaurentPoly> quot;
            if (cand.coeff(0) != 0 && cand.leading() == 1) quot = divide_exact(u, cand);
            if (quot) {
                out.push_back(normalize_units(cand));
                u = *quot;
                std::vector<ZmPoly> rest;
                for (std::size_t i = 0, j = 0; i < pool.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) { ++j; continue; }
                    rest.push_back(pool[i]);
                }
                pool = std::move(rest);
                found = true;
                break;
            }
            // next combination
            long k = static_cast<long>(s) - 1;
            while (k >= 0 && idx[static_cast<std::size_t>(k)] ==
                                 pool.size() - s + static_cast<std::size_t>(k))
                --k;
            if (k < 0) break;
            ++idx[static_cast<std::size_t>(k)];
            for (std::size_t j = static_cast<std::size_t>(k) + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (!u.is_zero() && u.span() > 0) out.push_back(normalize_units(u));
    return out;
}

// Factor a primitive squarefree polynomial (not necessarily monic) of
// degree >= 1 via the monic substitution M(t) = l^(n-1) u(t/l).
std::vector<LaurentPoly> zassenhaus(const LaurentPoly& u) {
    long n = u.max_exp();
    Int l = u.leading();
    if (n == 1 || l == 1) {
        if (l == 1) {
            auto fs = zassenhaus_monic(u);
            return fs;
        }
        return {u};
    }
    // monic substitute M(t) = l^(n-1) u(t/l): coeff of t^i is u_i l^(n-1-i)
    std::vector<Int> uc = u.dense();
    std::vector<Int> mc(uc.size());
    mc[static_cast<std::size_t>(n)] = 1;
    Int pw = 1;
    for (long i = n - 1; i >= 0; --i) {
        mc[static_cast<std::size_t>(i)] = uc[static_cast<std::size_t>(i)] * pw;
        pw *= l;
    }
    std::vector<LaurentPoly> mf = zassenhaus_monic(from_dense(mc));
    std::vector<LaurentPoly> out;
    for (const LaurentPoly& g : mf) {
        // map back: t -> l t, take primitive part
        LaurentPoly h;
        Int lp = 1;
        for (long e = 0; e <= g.max_exp(); ++e) {
            h = h + LaurentPoly::term(g.coeff(e) * lp, e);
            lp *= l;
        }
        out.push_back(normalize_units(h.primitive_part()));
    }
    return out;
}

// Yun squarefree decomposition of a primitive polynomial with positive
// leading coefficient; returns (squarefree part, multiplicity) pairs.
std::vector<std::pair<LaurentPoly, unsigned>> squarefree_decompose(const LaurentPoly& f) {
    std::vector<std::pair<LaurentPoly, unsigned>> out;
    LaurentPoly df = f.derivative();
    LaurentPoly a0 = poly_gcd(f, df);
    if (a0.span() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    LaurentPoly b = *divide_exact(f, a0);
    LaurentPoly d = *divide_exact(df, a0) - b.derivative();
    for (unsigned i = 1; b.span() > 0; ++i) {
        LaurentPoly g = poly_gcd(b, d);  // gcd with the zero polynomial is b itself
        if (g.span() > 0) out.emplace_back(g, i);
        b = *divide_exact(b, g);
        if (b.span() == 0) break;
        d = *divide_exact(d, g) - b.derivative();
    }
    return out;
}

std::vector<Int> prime_factors_expanded(Int n) {
    std::vector<Int> out;
    for (Int p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

std::vector<LaurentPoly> factor_over_integers(const LaurentPoly& f) {
    LaurentPoly n = normalize_units(f);
    std::vector<LaurentPoly> out;
    for (const Int& p : prime_factors_expanded(n.content())) out.push_back(LaurentPoly(p));
    LaurentPoly rem = n.primitive_part();

    // Rational-root pre-screen: factors q t - p with p | rem(0), q | leading.
    while (rem.span() > 0) {
        bool peeled = false;
        Int c0 = abs_int(rem.trailing()), cl = abs_int(rem.leading());
        if (c0 > 1000000 || cl > 1000000) break;  // leave large candidates to the full search
        for (Int q = 1; q <= cl && !peeled; ++q) {
            if (cl % q != 0) continue;
            for (Int p = 1; p <= c0 && !peeled; ++p) {
                if (c0 % p != 0 || gcd_int(p, q) != 1) continue;
                for (int sgn : {1, -1}) {
                    Rat root(sgn * p, q);
                    if (rem.evaluate_rat(root) == 0) {
                        LaurentPoly lin = LaurentPoly::term(q, 1) - LaurentPoly(Int(sgn) * p);
                        out.push_back(normalize_units(lin));
                        rem = *divide_exact(rem, lin);
                        peeled = true;
                        break;
                    }
                }
            }
        }
        if (!peeled) break;
    }

    // Cyclotomic pre-screen.
    if (rem.span() > 0) {
        long bound = 2 * rem.span() * rem.span() + 2;
        for (long m = 2; m <= bound && rem.span() > 0; ++m) {
            if (euler_phi(static_cast<unsigned long>(m)) > static_cast<unsigned long>(rem.span()))
                continue;
            LaurentPoly phi = cyclotomic(static_cast<unsigned>(m));
            for (;;) {
                auto q = divide_exact(rem, phi);
                if (!q) break;
                out.push_back(phi);
                rem = *q;
            }
        }
    }

    if (rem.span() > 0) {
        for (const auto& [part, mult] : squarefree_decompose(rem)) {
            if (part.span() > kSpanBound) fail("degree exceeds factorization bound");
            for (const LaurentPoly& irr : zassenhaus(part))
                for (unsigned i = 0; i < mult; ++i) out.push_back(irr);
        }
    }

    std::sort(out.begin(), out.end(), [](const LaurentPoly& a, const LaurentPoly& b) {
        if (a.span() != b.span()) return a.span() < b.span();
        auto ai = a.coeffs().begin(), bi = b.coeffs().begin();
        while (ai != a.coeffs().end() && bi != b.coeffs().end()) {
            if (ai->first != bi->first) return ai->first < bi->first;
            if (ai->second != bi->second) return ai->second < bi->second;
            ++ai;
            ++bi;
        }
        return a.coeffs().size() < b.coeffs().size();
    });
    return out;
}

std::optional<LaurentPoly> reciprocal_pairing(const LaurentPoly& delta) {
    LaurentPoly n = normalize_units(delta);
    if (n.is_one()) return LaurentPoly(Int(1));
    std::map<std::string, std::pair<LaurentPoly, unsigned>> mult;
    for (const LaurentPoly& g : factor_over_integers(n)) {
        auto [it, fresh] = mult.try_emplace(g.str(), g, 0u);
        ++it->second.second;
    }
    LaurentPoly f(Int(1));
    std::map<std::string, bool> used;
    for (const auto& [key, gm] : mult) {
        if (used[key]) continue;
        const auto& [g, m] = gm;
        LaurentPoly gstar = g.span() == 0 ? g : normalize_units(g.mirror());
        std::string skey = gstar.str();
        if (skey == key) {
            if (m % 2 != 0) return std::nullopt;
            f = f * g.pow(m / 2);
            used[key] = true;
        } else {
            auto it = mult.find(skey);
            if (it == mult.end() || it->second.second != m) return std::nullopt;
            f = f * g.pow(m);
            used[key] = used[skey] = true;
        }
    }
    return f;
}

std::optional<unsigned> cyclotomic_index(const LaurentPoly& f) {
    if (f.is_zero()) return std::nullopt;
    LaurentPoly n = normalize_units(f);
    long d = n.span();
    if (d == 0) return std::nullopt;
    long bound = 2 * d * d + 2;
    for (long m = 1; m <= bound; ++m) {
        if (static_cast<long>(euler_phi(static_cast<unsigned long>(m))) != d) continue;
        if (cyclotomic(static_cast<unsigned>(m)) == n) return static_cast<unsigned>(m);
    }
    return std::nullopt;
}

}  // namespace concord
