#pragma once

#include "concord/types.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace concord {

// Integer Laurent polynomial: finitely supported map exponent -> coefficient.
// Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;  // zero polynomial
    explicit LaurentPoly(const Int& c) { if (c != 0) c_[0] = c; }

    static LaurentPoly term(const Int& c, long e) {
        LaurentPoly p;
        if (c != 0) p.c_[e] = c;
        return p;
    }

    static LaurentPoly variable() { return term(1, 1); }

    static LaurentPoly from_coeffs(const std::vector<Int>& coeffs, long min_exp = 0) {
        LaurentPoly p;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) p.c_[min_exp + static_cast<long>(i)] = coeffs[i];
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }

    long min_exp() const { require_nonzero(); return c_.begin()->first; }
    long max_exp() const { require_nonzero(); return c_.rbegin()->first; }
    long span() const { return is_zero() ? 0 : max_exp() - min_exp(); }

    Int coeff(long e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Int(0) : it->second;
    }
    Int leading() const { require_nonzero(); return c_.rbegin()->second; }
    Int trailing() const { require_nonzero(); return c_.begin()->second; }
    const std::map<long, Int>& coeffs() const { return c_; }

    // Dense coefficient vector of an ordinary polynomial (min_exp >= 0 required),
    // index = exponent, length = max_exp + 1.
    std::vector<Int> dense() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly mul_term(const Int& c, long e) const;
    LaurentPoly mirror() const;  // t -> 1/t
    LaurentPoly pow(unsigned e) const;

    Int evaluate_int(const Int& x) const;  // requires min_exp >= 0
    Rat evaluate_rat(const Rat& x) const;  // requires x != 0 when min_exp < 0
    long double evaluate_abs_on_circle(double turn) const;  // |f(e^{2 pi i turn})|

    Int content() const;  // gcd of coefficients, >= 0 (0 for the zero polynomial)
    LaurentPoly primitive_part() const;
    LaurentPoly derivative() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

private:
    void require_nonzero() const { if (is_zero()) fail("zero polynomial has no degree"); }
    void trim();

    std::map<long, Int> c_;
};

// +-t^l f with minimum exponent 0 and positive leading coefficient.
LaurentPoly normalize_units(const LaurentPoly& f);

// n-th cyclotomic polynomial, monic over the integers.
LaurentPoly cyclotomic(unsigned n);

// Resultant of the unit-normalized ordinary-polynomial parts.
Int resultant(const LaurentPoly& f, const LaurentPoly& g);

// Exact quotient f / g over the integers if it exists (both taken as
// unit-normalized ordinary polynomials).
std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g);

bool divides(const LaurentPoly& g, const LaurentPoly& f);

// Gcd over Z of the unit-normalized parts (primitive pseudo-remainder
// sequence), result normalized.
LaurentPoly poly_gcd(const LaurentPoly& f, const LaurentPoly& g);

unsigned long euler_phi(unsigned long n);

}  // namespace concord
