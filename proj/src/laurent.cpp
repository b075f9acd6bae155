#include "concord/laurent.hpp"

#include "concord/mat.hpp"
#include "concord/intmat.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace concord {

void LaurentPoly::trim() {
    for (auto it = c_.begin(); it != c_.end();)
        it = (it->second == 0) ? c_.erase(it) : std::next(it);
}

std::vector<Int> LaurentPoly::dense() const {
    if (is_zero()) return {};
    if (min_exp() < 0) fail("dense coefficients of a polynomial with negative exponents");
    std::vector<Int> v(static_cast<std::size_t>(max_exp()) + 1);
    for (const auto& [e, c] : c_) v[static_cast<std::size_t>(e)] = c;
    return v;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.c_) r.c_[e] += c;
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.c_) r.c_[e] -= c;
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) r.c_[e1 + e2] += c1 * c2;
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::mul_term(const Int& c, long e) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e1, c1] : c_) r.c_[e1 + e] = c1 * c;
    return r;
}

LaurentPoly LaurentPoly::mirror() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly r(Int(1));
    LaurentPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Int LaurentPoly::evaluate_int(const Int& x) const {
    if (is_zero()) return 0;
    if (min_exp() < 0) fail("integer evaluation of a polynomial with negative exponents");
    Int acc = 0;
    long prev = max_exp();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        for (long k = 0; k < prev - it->first; ++k) acc *= x;
        acc += it->second;
        prev = it->first;
    }
    for (long k = 0; k < prev; ++k) acc *= x;
    return acc;
}

Rat LaurentPoly::evaluate_rat(const Rat& x) const {
    if (!is_zero() && min_exp() < 0 && x == 0) fail("evaluation of a Laurent polynomial at zero");
    Rat acc = 0;
    for (const auto& [e, c] : c_) {
        Rat p = 1;
        for (long k = 0; k < (e < 0 ? -e : e); ++k) p *= x;
        if (e < 0) p = 1 / p;
        acc += Rat(c) * p;
    }
    return acc;
}

long double LaurentPoly::evaluate_abs_on_circle(double turn) const {
    std::complex<long double> acc = 0;
    const long double tau = 2.0L * 3.14159265358979323846264338327950288L;
    for (const auto& [e, c] : c_) {
        long double arg = tau * static_cast<long double>(turn) * static_cast<long double>(e);
        acc += static_cast<long double>(c.convert_to<double>()) *
               std::complex<long double>(std::cos(arg), std::sin(arg));
    }
    return std::abs(acc);
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : c_) g = gcd_int(g, c);
    return g;
}

LaurentPoly LaurentPoly::primitive_part() const {
    if (is_zero()) return *this;
    Int g = content();
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_[e] = c / g;
    return r;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_)
        if (e != 0) r.c_[e - 1] = c * e;
    return r;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (c > 0 && !first) os << "+";
        if (e == 0) {
            os << c;
        } else {
            if (c == -1) os << "-";
            else if (c != 1) os << c << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly normalize_units(const LaurentPoly& f) {
    if (f.is_zero()) fail("zero polynomial has no normal form");
    LaurentPoly r = f.mul_term(1, -f.min_exp());
    if (r.leading() < 0) r = -r;
    return r;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long r = n;
    for (unsigned long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    if (n > 1) r -= r / n;
    return r;
}

LaurentPoly cyclotomic(unsigned n) {
    if (n == 0) fail("cyclotomic polynomial index must be positive");
    // (t^n - 1) divided by the cyclotomic polynomials of the proper divisors.
    LaurentPoly p = LaurentPoly::term(1, static_cast<long>(n)) - LaurentPoly(Int(1));
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto q = divide_exact(p, cyclotomic(d));
        if (!q) fail("internal cyclotomic division failure");
        p = *q;
    }
    return p;
}

Int resultant(const LaurentPoly& fin, const LaurentPoly& gin) {
    if (fin.is_zero() || gin.is_zero()) fail("resultant requires nonzero polynomials");
    LaurentPoly f = normalize_units(fin), g = normalize_units(gin);
    long m = f.max_exp(), n = g.max_exp();
    if (m == 0 && n == 0) return 1;
    if (m == 0) {
        Int c = f.coeff(0), r = 1;
        for (long i = 0; i < n; ++i) r *= c;
        return r;
    }
    if (n == 0) {
        Int c = g.coeff(0), r = 1;
        for (long i = 0; i < m; ++i) r *= c;
        return r;
    }
    std::vector<Int> fc = f.dense(), gc = g.dense();
    std::size_t sz = static_cast<std::size_t>(m + n);
    IMat s(sz, sz);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j) s(i, i + j) = fc[static_cast<std::size_t>(m - j)];
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j) s(n + i, i + j) = gc[static_cast<std::size_t>(n - j)];
    return det(s);
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& fin, const LaurentPoly& gin) {
    if (gin.is_zero()) fail("division by the zero polynomial");
    if (fin.is_zero()) return LaurentPoly();
    LaurentPoly f = normalize_units(fin), g = normalize_units(gin);
    if (f.max_exp() < g.max_exp()) return std::nullopt;
    std::vector<Int> r = f.dense(), d = g.dense();
    std::size_t dn = d.size();
    std::vector<Int> q(r.size() - dn + 1);
    for (std::size_t i = q.size(); i-- > 0;) {
        Int lead = r[i + dn - 1];
        if (lead == 0) continue;
        if (lead % d[dn - 1] != 0) return std::nullopt;
        Int c = lead / d[dn - 1];
        q[i] = c;
        for (std::size_t j = 0; j < dn; ++j) r[i + j] -= c * d[j];
    }
    for (const Int& c : r)
        if (c != 0) return std::nullopt;
    return LaurentPoly::from_coeffs(q);
}

bool divides(const LaurentPoly& g, const LaurentPoly& f) {
    return divide_exact(f, g).has_value();
}

namespace {

// One pseudo-remainder step on ordinary polynomials, deg f >= deg g.
LaurentPoly pseudo_rem(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly r = f;
    Int lg = g.leading();
    long dg = g.max_exp();
    while (!r.is_zero() && r.max_exp() >= dg) {
        long sh = r.max_exp() - dg;
        Int lr = r.leading();
        r = r.mul_term(lg, 0) - g.mul_term(lr, sh);
    }
    return r;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& fin, const LaurentPoly& gin) {
    if (fin.is_zero() && gin.is_zero()) fail("gcd of two zero polynomials");
    if (fin.is_zero()) return normalize_units(gin);
    if (gin.is_zero()) return normalize_units(fin);
    Int cont = gcd_int(fin.content(), gin.content());
    LaurentPoly a = normalize_units(fin).primitive_part();
    LaurentPoly b = normalize_units(gin).primitive_part();
    if (a.max_exp() < b.max_exp()) std::swap(a, b);
    while (!b.is_zero()) {
        LaurentPoly r = pseudo_rem(a, b);
        a = b;
        b = r.is_zero() ? r : normalize_units(r).primitive_part();
    }
    return normalize_units(a.primitive_part().mul_term(cont, 0));
}

}  // namespace concord
