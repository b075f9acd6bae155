#include "concord/covers.hpp"

#include "concord/factor.hpp"

#include <algorithm>

namespace concord {

namespace {

const char* kInconsistent = "presentation/order inconsistency";

// Presentation of the Lambda-module of the infinite cyclic cover reduced
// modulo t^k - 1: the nk x nk matrix C (x) A - I (x) A^t with C the cyclic
// shift, together with the shift C (x) I realizing multiplication by t.
std::pair<IMat, IMat> circulant_presentation(const IMat& a, unsigned k) {
    std::size_t n = a.rows();
    IMat at = a.transpose();
    IMat r(n * k, n * k), shift(n * k, n * k);
    for (unsigned i = 0; i < k; ++i) {
        unsigned j = (i + 1) % k;
        r.set_block(j * n, i * n, a);
        IMat diag = r.block(i * n, i * n, n, n) - at;
        r.set_block(i * n, i * n, diag);
        for (std::size_t c = 0; c < n; ++c) shift(j * n + c, i * n + c) = 1;
    }
    return {r, shift};
}

std::vector<Int> nontrivial_factors(const IMat& m) {
    std::vector<Int> out;
    for (const Int& d : invariant_factors(m))
        if (d != 1) out.push_back(d);
    std::sort(out.begin(), out.end(), [](const Int& x, const Int& y) {
        if ((x == 0) != (y == 0)) return y == 0;
        return x < y;
    });
    return out;
}

unsigned distinct_prime_count(unsigned long n) {
    unsigned count = 0;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        ++count;
        while (n % p == 0) n /= p;
    }
    if (n > 1) ++count;
    return count;
}

LaurentPoly circle_relation(unsigned k) {
    return LaurentPoly::term(1, static_cast<long>(k)) - LaurentPoly(Int(1));
}

}  // namespace

bool is_prime_power(Int n) {
    if (n < 2) return false;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        return n == 1;
    }
    return true;  // n itself is prime
}

std::pair<IMat, IMat> gamma_phi(const SeifertMatrix& a, unsigned k) {
    if (k == 0) fail("cover degree must be positive");
    const IMat& m = a.entries();
    IMat at = m.transpose();
    IMat gamma = inverse_unimodular(at - m) * at;
    std::size_t n = m.rows();
    IMat phi = matpow(gamma, k) - matpow(gamma - IMat::identity(n), k);
    return {gamma, phi};
}

CoverGroup cover_group(const SeifertMatrix& a, unsigned k) {
    auto [gamma, phi] = gamma_phi(a, k);
    std::size_t n = a.size();

    Int order_det = abs_int(det(phi));
    Int order_res = abs_int(resultant(alexander(a), circle_relation(k)));
    if (order_det != order_res) fail(kInconsistent);
    if (gamma * phi != phi * gamma) fail(kInconsistent);

    auto [relations, shift] = circulant_presentation(a.entries(), k);
    Smith s = smith_normal_form(relations);
    if (nontrivial_factors(relations) != nontrivial_factors(phi)) fail(kInconsistent);

    IMat tau = s.u * shift * inverse_unimodular(s.u);
    if (matpow(tau, k) != IMat::identity(n * k)) fail(kInconsistent);

    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < n * k; ++i)
        if (s.d(i, i) != 1) live.push_back(i);

    CoverGroup g;
    g.k = k;
    g.t_action = IMat(live.size(), live.size());
    for (std::size_t i = 0; i < live.size(); ++i) {
        Int d = s.d(live[i], live[i]);
        g.factors.push_back(d);
        for (std::size_t j = 0; j < live.size(); ++j) {
            Int e = tau(live[i], live[j]);
            g.t_action(i, j) = d == 0 ? e : mod_floor(e, d);
        }
        if (d == 0) g.finite = false;
    }
    if (g.finite) {
        g.order = 1;
        for (const Int& d : g.factors) g.order *= d;
        if (g.order != order_det) fail(kInconsistent);
    } else {
        if (order_det != 0) fail(kInconsistent);
        g.order = 0;
    }
    return g;
}

PrimePowerScan prime_power_scan(const LaurentPoly& delta, long k_max) {
    PrimePowerScan scan;
    for (const LaurentPoly& f : factor_over_integers(delta)) {
        if (f.span() == 0) continue;
        auto idx = cyclotomic_index(f);
        if (!idx || distinct_prime_count(*idx) < 3) scan.factor_exists = true;
    }
    scan.verdict = scan.factor_exists ? "factor exists" : "no such factor";

    for (long k = 2; k <= k_max; ++k) {
        if (!is_prime_power(Int(k))) continue;
        PrimePowerEntry e;
        e.k = k;
        e.order = abs_int(resultant(delta, circle_relation(static_cast<unsigned>(k))));
        e.finite = e.order != 0;
        e.trivial = e.order == 1;
        scan.entries.push_back(e);
    }
    return scan;
}

std::vector<Int> gilmer_kernel(const SeifertMatrix& a, unsigned k) {
    auto [gamma, phi] = gamma_phi(a, k);
    if (det(phi) == 0) fail("cover group is infinite");
    std::vector<Int> out;
    for (const Int& d : invariant_factors(phi))
        if (d != 1) out.push_back(d);
    return out;
}

}  // namespace concord
