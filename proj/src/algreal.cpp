#include "concord/algreal.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>

namespace concord {

namespace {

Int rat_floor(const Rat& r) { return div_floor(numerator(r), denominator(r)); }

// scale to a primitive integer polynomial by a positive rational factor
void make_primitive(QPoly& a) {
    qpoly_trim(a);
    if (a.empty()) return;
    Int l = 1;
    for (const Rat& c : a) l = lcm_int(l, denominator(c));
    Int g = 0;
    for (const Rat& c : a) g = gcd_int(g, numerator(c) * (l / denominator(c)));
    if (g == 0) return;
    Rat s(l, g);
    for (Rat& c : a) c *= s;
}

}  // namespace

QPoly qpoly_from(const LaurentPoly& f) {
    if (f.is_zero()) return {};
    if (f.min_exp() < 0) fail("polynomial has negative exponents");
    QPoly a(static_cast<std::size_t>(f.max_exp()) + 1, Rat(0));
    for (const auto& [e, c] : f.coeffs()) a[static_cast<std::size_t>(e)] = Rat(c);
    return a;
}

void qpoly_trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

bool qpoly_is_zero(const QPoly& a) {
    for (const Rat& c : a)
        if (c != 0) return false;
    return true;
}

long qpoly_deg(const QPoly& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return static_cast<long>(i);
    return -1;
}

QPoly qpoly_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    qpoly_trim(r);
    return r;
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    qpoly_trim(r);
    return r;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    qpoly_trim(r);
    return r;
}

QPoly qpoly_rem(QPoly a, const QPoly& b) {
    qpoly_trim(a);
    long db = qpoly_deg(b);
    if (db < 0) fail("division by the zero polynomial");
    const Rat& lead = b[static_cast<std::size_t>(db)];
    while (qpoly_deg(a) >= db) {
        std::size_t da = static_cast<std::size_t>(qpoly_deg(a));
        Rat c = a[da] / lead;
        std::size_t sh = da - static_cast<std::size_t>(db);
        for (std::size_t j = 0; j <= static_cast<std::size_t>(db); ++j) a[sh + j] -= c * b[j];
        qpoly_trim(a);
    }
    return a;
}

QPoly qpoly_deriv(const QPoly& a) {
    QPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(Rat(Int(i)) * a[i]);
    qpoly_trim(r);
    return r;
}

Rat qpoly_eval(const QPoly& a, const Rat& x) {
    Rat r(0);
    for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

std::pair<Rat, Rat> qpoly_eval_interval(const QPoly& a, const Rat& lo, const Rat& hi) {
    Rat rlo(0), rhi(0);
    for (std::size_t i = a.size(); i-- > 0;) {
        Rat p1 = rlo * lo, p2 = rlo * hi, p3 = rhi * lo, p4 = rhi * hi;
        Rat nlo = std::min(std::min(p1, p2), std::min(p3, p4)) + a[i];
        Rat nhi = std::max(std::max(p1, p2), std::max(p3, p4)) + a[i];
        rlo = nlo;
        rhi = nhi;
    }
    return {rlo, rhi};
}

std::vector<QPoly> sturm_chain(QPoly g) {
    make_primitive(g);
    if (g.empty()) fail("sturm chain of the zero polynomial");
    std::vector<QPoly> chain{g};
    QPoly d = qpoly_deriv(g);
    make_primitive(d);
    if (!d.empty()) chain.push_back(d);
    while (chain.size() >= 2 && qpoly_deg(chain.back()) > 0) {
        QPoly r = qpoly_rem(chain[chain.size() - 2], chain.back());
        if (qpoly_is_zero(r)) break;
        for (Rat& c : r) c = -c;
        make_primitive(r);
        // make_primitive scales by a positive factor, preserving the negation
        chain.push_back(r);
    }
    return chain;
}

int sturm_variations(const std::vector<QPoly>& chain, const Rat& x) {
    int vars = 0, last = 0;
    for (const QPoly& p : chain) {
        Rat v = qpoly_eval(p, x);
        int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
        if (s == 0) continue;
        if (last != 0 && s != last) ++vars;
        last = s;
    }
    return vars;
}

long sturm_count(const std::vector<QPoly>& chain, const Rat& lo, const Rat& hi) {
    return sturm_variations(chain, lo) - sturm_variations(chain, hi);
}

// ---------- RealAlgebraic ----------

RealAlgebraic RealAlgebraic::rational(const Rat& r) {
    RealAlgebraic a;
    a.exact_ = true;
    a.value_ = r;
    return a;
}

RealAlgebraic RealAlgebraic::root(const QPoly& gin, const Rat& lo, const Rat& hi) {
    QPoly g = gin;
    make_primitive(g);
    long d = qpoly_deg(g);
    if (d < 1) fail("algebraic root requires a nonconstant polynomial");
    if (d == 1) return rational(-g[0] / g[1]);
    if (!(lo < hi)) fail("empty isolating interval");
    if (qpoly_eval(g, lo) == 0 || qpoly_eval(g, hi) == 0)
        fail("isolating interval endpoint is a root");
    RealAlgebraic a;
    a.exact_ = false;
    a.g_ = g;
    a.chain_ = sturm_chain(g);
    a.lo_ = lo;
    a.hi_ = hi;
    if (sturm_count(a.chain_, lo, hi) != 1) fail("interval does not isolate a single root");
    return a;
}

const Rat& RealAlgebraic::value() const {
    if (!exact_) fail("algebraic number is not rational");
    return value_;
}

void RealAlgebraic::refine() {
    if (exact_) return;
    Rat mid = (lo_ + hi_) / 2;
    if (qpoly_eval(g_, mid) == 0) {
        // cannot happen for irreducible minimal polynomials of degree >= 2;
        // nudge rather than divide by a root
        mid = (lo_ + mid) / 2;
        if (qpoly_eval(g_, mid) == 0) fail("refinement hit a rational root");
    }
    if (sturm_count(chain_, lo_, mid) == 1)
        hi_ = mid;
    else
        lo_ = mid;
}

void RealAlgebraic::refine_to(const Rat& width) {
    if (exact_) return;
    int guard = 0;
    while (hi_ - lo_ > width) {
        refine();
        if (++guard > 100000) fail("root refinement did not converge");
    }
}

double RealAlgebraic::approx() {
    if (exact_) return value_.convert_to<double>();
    refine_to(Rat(1, Int("10000000000000000")));
    return ((lo_ + hi_) / 2).convert_to<double>();
}

int RealAlgebraic::compare_rat(const Rat& r) {
    if (exact_) return value_ == r ? 0 : (value_ < r ? -1 : 1);
    int guard = 0;
    for (;;) {
        if (hi_ <= r) return -1;
        if (lo_ >= r) return 1;
        refine();
        if (++guard > 100000) fail("comparison did not converge");
    }
}

int RealAlgebraic::compare(RealAlgebraic& other) {
    if (exact_ && other.exact_)
        return value_ == other.value_ ? 0 : (value_ < other.value_ ? -1 : 1);
    if (exact_) return -other.compare_rat(value_);
    if (other.exact_) return compare_rat(other.value_);
    if (g_ == other.g_) {
        // same minimal polynomial: equal iff the union interval still
        // isolates one root
        Rat ulo = std::min(lo_, other.lo_), uhi = std::max(hi_, other.hi_);
        if (std::max(lo_, other.lo_) < std::min(hi_, other.hi_) &&
            sturm_count(chain_, ulo, uhi) == 1)
            return 0;
    }
    int guard = 0;
    for (;;) {
        if (hi_ <= other.lo_) return -1;
        if (other.hi_ <= lo_) return 1;
        if (g_ == other.g_) {
            Rat ulo = std::min(lo_, other.lo_), uhi = std::max(hi_, other.hi_);
            if (sturm_count(chain_, ulo, uhi) == 1) return 0;
        }
        refine();
        other.refine();
        if (++guard > 100000) fail("comparison did not converge");
    }
}

std::vector<RealAlgebraic> isolate_roots(const QPoly& gin, const Rat& lo, const Rat& hi) {
    QPoly g = gin;
    make_primitive(g);
    long d = qpoly_deg(g);
    if (d < 1) fail("root isolation requires a nonconstant polynomial");
    if (d == 1) {
        Rat r = -g[0] / g[1];
        std::vector<RealAlgebraic> out;
        if (lo < r && r < hi) out.push_back(RealAlgebraic::rational(r));
        return out;
    }
    if (qpoly_eval(g, lo) == 0 || qpoly_eval(g, hi) == 0)
        fail("isolation endpoint is a root");
    std::vector<QPoly> chain = sturm_chain(g);
    std::vector<RealAlgebraic> out;
    // depth-first, left interval first, so results come out ascending
    struct Seg {
        Rat a, b;
        long n;
    };
    std::vector<Seg> stack{{lo, hi, sturm_count(chain, lo, hi)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.n == 0) continue;
        if (s.n == 1) {
            out.push_back(RealAlgebraic::root(g, s.a, s.b));
            continue;
        }
        Rat mid = (s.a + s.b) / 2;
        if (qpoly_eval(g, mid) == 0) fail("bisection hit a root of an irreducible polynomial");
        long left = sturm_count(chain, s.a, mid);
        // push right first so the left segment is processed first
        stack.push_back({mid, s.b, s.n - left});
        stack.push_back({s.a, mid, left});
    }
    return out;
}

int sign_at(const QPoly& h, RealAlgebraic& x) {
    if (x.exact()) {
        Rat v = qpoly_eval(h, x.value());
        return v == 0 ? 0 : (v > 0 ? 1 : -1);
    }
    QPoly r = h;
    if (qpoly_deg(r) >= qpoly_deg(x.minpoly())) r = qpoly_rem(std::move(r), x.minpoly());
    if (qpoly_is_zero(r)) return 0;
    int guard = 0;
    for (;;) {
        auto [vlo, vhi] = qpoly_eval_interval(r, x.lower(), x.upper());
        if (vlo > 0) return 1;
        if (vhi < 0) return -1;
        x.refine();
        if (++guard > 100000) fail("sign determination did not converge");
    }
}

// ---------- number field ----------

NumberField make_field(const QPoly& g, const RealAlgebraic& x0) {
    NumberField F;
    F.g = g;
    make_primitive(F.g);
    F.x0 = x0;
    if (qpoly_deg(F.g) < 1) fail("number field requires a nonconstant polynomial");
    return F;
}

FElem f_const(const Rat& c) {
    if (c == 0) return {};
    return {c};
}

FElem f_generator(const NumberField& F) {
    if (qpoly_deg(F.g) == 1) return f_const(-F.g[0] / F.g[1]);
    return {Rat(0), Rat(1)};
}

FElem f_reduce(const NumberField& F, QPoly a) {
    qpoly_trim(a);
    if (qpoly_deg(a) >= qpoly_deg(F.g)) a = qpoly_rem(std::move(a), F.g);
    return a;
}

FElem f_add(const FElem& a, const FElem& b) { return qpoly_add(a, b); }
FElem f_sub(const FElem& a, const FElem& b) { return qpoly_sub(a, b); }

FElem f_neg(const FElem& a) {
    FElem r = a;
    for (Rat& c : r) c = -c;
    return r;
}

FElem f_mul(const NumberField& F, const FElem& a, const FElem& b) {
    return f_reduce(F, qpoly_mul(a, b));
}

FElem f_inv(const NumberField& F, const FElem& a) {
    if (qpoly_is_zero(a)) fail("division by zero in a number field");
    // extended Euclid tracking only the coefficient of a
    QPoly r0 = F.g, r1 = a, t0, t1{Rat(1)};
    while (qpoly_deg(r1) > 0) {
        long d0 = qpoly_deg(r0), d1 = qpoly_deg(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(t0, t1);
            continue;
        }
        // one full division step
        QPoly q;
        QPoly rem = r0;
        const Rat lead = r1[static_cast<std::size_t>(d1)];
        q.assign(static_cast<std::size_t>(d0 - d1) + 1, Rat(0));
        while (qpoly_deg(rem) >= d1) {
            std::size_t dr = static_cast<std::size_t>(qpoly_deg(rem));
            Rat c = rem[dr] / lead;
            std::size_t sh = dr - static_cast<std::size_t>(d1);
            q[sh] = c;
            for (std::size_t j = 0; j <= static_cast<std::size_t>(d1); ++j)
                rem[sh + j] -= c * r1[j];
            qpoly_trim(rem);
        }
        QPoly t2 = qpoly_sub(t0, qpoly_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (qpoly_is_zero(r1)) fail("element is not invertible in the number field");
    // r1 is a nonzero constant: inverse = t1 / r1
    Rat c = r1[0];
    QPoly out = t1;
    for (Rat& v : out) v /= c;
    return f_reduce(F, std::move(out));
}

bool f_is_zero(const FElem& a) { return qpoly_is_zero(a); }

int f_sign(NumberField& F, const FElem& a) { return sign_at(a, F.x0); }

// ---------- quadratic extension ----------

ZElem z_make(FElem a, FElem b) { return {std::move(a), std::move(b)}; }
ZElem z_zero() { return {{}, {}}; }

bool z_is_zero(const ZElem& e) { return qpoly_is_zero(e.a) && qpoly_is_zero(e.b); }

ZElem z_add(const ZElem& u, const ZElem& v) { return {f_add(u.a, v.a), f_add(u.b, v.b)}; }
ZElem z_sub(const ZElem& u, const ZElem& v) { return {f_sub(u.a, v.a), f_sub(u.b, v.b)}; }
ZElem z_neg(const ZElem& u) { return {f_neg(u.a), f_neg(u.b)}; }

ZElem z_mul(const NumberField& F, const ZElem& u, const ZElem& v) {
    // (a + bz)(c + dz) with z^2 = xz - 1
    FElem ac = f_mul(F, u.a, v.a);
    FElem bd = f_mul(F, u.b, v.b);
    FElem ad_bc = f_add(f_mul(F, u.a, v.b), f_mul(F, u.b, v.a));
    FElem x = f_generator(F);
    return {f_sub(ac, bd), f_add(ad_bc, f_mul(F, bd, x))};
}

ZElem z_conj(const NumberField& F, const ZElem& u) {
    FElem x = f_generator(F);
    return {f_add(u.a, f_mul(F, u.b, x)), f_neg(u.b)};
}

ZElem z_inv(const NumberField& F, const ZElem& u) {
    // norm (a + bz)(a + b(x - z)) = a^2 + abx + b^2, positive for |x0| < 2
    FElem x = f_generator(F);
    FElem norm = f_add(f_add(f_mul(F, u.a, u.a), f_mul(F, f_mul(F, u.a, u.b), x)),
                       f_mul(F, u.b, u.b));
    FElem ninv = f_inv(F, norm);
    ZElem cj = z_conj(F, u);
    return {f_mul(F, cj.a, ninv), f_mul(F, cj.b, ninv)};
}

namespace {

ZElem z_scale(const NumberField& F, const ZElem& u, const FElem& s) {
    return {f_mul(F, u.a, s), f_mul(F, u.b, s)};
}

}  // namespace

int hermitian_signature(NumberField& F, std::vector<std::vector<ZElem>> h) {
    std::size_t n = h.size();
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;
    int sig = 0;
    while (!active.empty()) {
        // prefer a nonzero (real) diagonal pivot
        std::size_t pi = n;
        for (std::size_t i : active) {
            if (!qpoly_is_zero(h[i][i].b)) fail("hermitian matrix has a non-real diagonal");
            if (!f_is_zero(h[i][i].a)) {
                pi = i;
                break;
            }
        }
        if (pi != n) {
            sig += f_sign(F, h[pi][pi].a);
            FElem dinv = f_inv(F, h[pi][pi].a);
            for (std::size_t j : active) {
                if (j == pi) continue;
                for (std::size_t k : active) {
                    if (k == pi) continue;
                    ZElem upd = z_scale(F, z_mul(F, h[j][pi], h[pi][k]), dinv);
                    h[j][k] = z_sub(h[j][k], upd);
                }
            }
            std::erase(active, pi);
            continue;
        }
        // no real pivot: look for a hyperbolic pair
        std::size_t hi = n, hj = n;
        for (std::size_t a = 0; a < active.size() && hi == n; ++a)
            for (std::size_t b = a + 1; b < active.size(); ++b)
                if (!z_is_zero(h[active[a]][active[b]])) {
                    hi = active[a];
                    hj = active[b];
                    break;
                }
        if (hi == n) break;  // remaining block is the radical
        const ZElem w = h[hi][hj];
        ZElem winv = z_inv(F, w);
        ZElem wbinv = z_conj(F, winv);
        for (std::size_t k : active) {
            if (k == hi || k == hj) continue;
            for (std::size_t l : active) {
                if (l == hi || l == hj) continue;
                ZElem t1 = z_mul(F, z_mul(F, h[k][hi], wbinv), h[hj][l]);
                ZElem t2 = z_mul(F, z_mul(F, h[k][hj], winv), h[hi][l]);
                h[k][l] = z_sub(h[k][l], z_add(t1, t2));
            }
        }
        std::erase(active, hi);
        std::erase(active, hj);
    }
    return sig;
}

// ---------- circle helpers ----------

bool is_palindromic(const LaurentPoly& f) {
    if (f.is_zero()) return false;
    long lo = f.min_exp(), hi = f.max_exp();
    for (long e = lo; e <= hi; ++e)
        if (f.coeff(e) != f.coeff(hi - (e - lo))) return false;
    return true;
}

QPoly palindromic_compress(const LaurentPoly& fin) {
    LaurentPoly f = fin.min_exp() == 0 ? fin : fin.mul_term(1, -fin.min_exp());
    if (!is_palindromic(f) || f.span() % 2 != 0) fail("polynomial is not evenly palindromic");
    long m = f.span() / 2;
    // V_k(x) = t^k + t^(-k):  V_0 = 2, V_1 = x, V_{k+1} = x V_k - V_{k-1}
    QPoly g{Rat(f.coeff(m))};
    QPoly vprev{Rat(2)}, vcur{Rat(0), Rat(1)}, x{Rat(0), Rat(1)};
    for (long k = 1; k <= m; ++k) {
        QPoly term = vcur;
        for (Rat& c : term) c *= Rat(f.coeff(m + k));
        g = qpoly_add(g, term);
        QPoly vnext = qpoly_sub(qpoly_mul(x, vcur), vprev);
        vprev = std::move(vcur);
        vcur = std::move(vnext);
    }
    return g;
}

QPoly cos_minimal_poly(unsigned q) {
    if (q == 0) fail("cyclotomic polynomial index must be positive");
    if (q == 1) return {Rat(-2), Rat(1)};
    if (q == 2) return {Rat(2), Rat(1)};
    return palindromic_compress(cyclotomic(q));
}

RealAlgebraic two_cos_of_turn(const Rat& turn) {
    Rat t = mod1(turn);
    if (t == 0) return RealAlgebraic::rational(Rat(2));
    Int p = numerator(t), q = denominator(t);
    if (q == 2) return RealAlgebraic::rational(Rat(-2));
    unsigned uq = q.convert_to<unsigned>();
    Int qp = q - p;
    Int j = std::min(p, qp);
    QPoly psi = cos_minimal_poly(uq);
    if (qpoly_deg(psi) == 1) return RealAlgebraic::rational(-psi[0] / psi[1]);
    std::vector<RealAlgebraic> roots = isolate_roots(psi, Rat(-2), Rat(2));
    // roots ascending in x correspond to j descending; find the index of j
    // among residues coprime to q in [1, q/2]
    std::size_t pos = 0, total = 0;
    for (Int jj = 1; 2 * jj < q; ++jj) {
        if (gcd_int(jj, q) != 1) continue;
        if (jj < j) ++pos;
        ++total;
    }
    if (roots.size() != total) fail("unexpected real cyclotomic root count");
    return roots[total - 1 - pos];
}

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) fail("empty interval for rational selection");
    if (lo < 0 && hi > 0) return Rat(0);
    if (hi <= 0) return -simplest_rational_between(-hi, -lo);
    Int fl = rat_floor(lo);
    if (Rat(fl + 1) < hi) return Rat(fl + 1);
    if (lo == Rat(fl)) {
        // interval (fl, hi) with hi - fl <= 1
        Rat h = 1 / (hi - Rat(fl));
        return Rat(fl) + Rat(1, rat_floor(h) + 1);
    }
    return Rat(fl) + 1 / simplest_rational_between(1 / (hi - Rat(fl)), 1 / (lo - Rat(fl)));
}

std::pair<Rat, Rat> turn_enclosure(const Rat& xlo, const Rat& xhi) {
    if (!(Rat(-2) < xlo) || !(xhi < Rat(2)) || xlo > xhi) fail("turn enclosure out of range");
    using BF = boost::multiprecision::cpp_bin_float_100;
    const BF pi = 2 * acos(BF(0));
    BF tlo = acos(BF(xhi) / 2) / (2 * pi);
    BF thi = acos(BF(xlo) / 2) / (2 * pi);
    Rat pad(1, boost::multiprecision::pow(Int(10), 40));
    Rat rlo = tlo.convert_to<Rat>() - pad;
    Rat rhi = thi.convert_to<Rat>() + pad;
    if (rlo < 0) rlo = 0;
    if (rhi > Rat(1, 2)) rhi = Rat(1, 2);
    return {rlo, rhi};
}

}  // namespace concord
