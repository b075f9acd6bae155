#include "concord/seifert.hpp"

#include "concord/factor.hpp"

#include <algorithm>
#include <utility>

namespace concord {

namespace {

constexpr const char* kUncertified = "uncertified signature; raise precision";

// det(A t - A^t) recovered from integer determinants at t = 0..n.
LaurentPoly alexander_det(const IMat& a) {
    std::size_t n = a.rows();
    if (n == 0) return LaurentPoly::term(1, 0);
    IMat at = a.transpose();
    std::vector<Rat> ys;
    for (std::size_t k = 0; k <= n; ++k) ys.push_back(Rat(det(a.scaled(Int(k)) - at)));
    QPoly p;
    for (std::size_t k = 0; k <= n; ++k) {
        QPoly term{Rat(1)};
        Rat denom(1);
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == k) continue;
            term = qpoly_mul(term, QPoly{Rat(-Int(j)), Rat(1)});
            denom *= Rat(Int(k) - Int(j));
        }
        Rat scale = ys[k] / denom;
        for (Rat& c : term) c *= scale;
        p = qpoly_add(p, term);
    }
    std::vector<Int> coeffs;
    for (const Rat& c : p) {
        if (denominator(c) != 1) fail("interpolated determinant is not integral");
        coeffs.push_back(numerator(c));
    }
    return LaurentPoly::from_coeffs(coeffs);
}

// Hermitian form (1-z)A + (1-conj z)A^t written over F[z]/(z^2 - x z + 1),
// where x is the field generator: entry (i,j) is
// (a_ij + a_ji - x a_ji) + (a_ji - a_ij) z.
int signature_in_field(const IMat& m, NumberField& F) {
    if (F.x0.compare_rat(Rat(2)) >= 0 || F.x0.compare_rat(Rat(-2)) <= 0)
        fail("circle coordinate out of range");
    std::size_t n = m.rows();
    FElem x = f_generator(F);
    std::vector<std::vector<ZElem>> h(n, std::vector<ZElem>(n, z_zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat aij(m(i, j)), aji(m(j, i));
            FElem re = f_sub(f_const(aij + aji), f_mul(F, x, f_const(aji)));
            h[i][j] = z_make(std::move(re), f_const(aji - aij));
        }
    return hermitian_signature(F, std::move(h));
}

int signature_at_x(const IMat& m, const RealAlgebraic& x) {
    NumberField F = x.exact() ? make_field(QPoly{-x.value(), Rat(1)}, x)
                              : make_field(x.minpoly(), x);
    return signature_in_field(m, F);
}

int signature_at_exact(const IMat& m, const Rat& turn) {
    Rat t = mod1(turn);
    if (t == 0) return 0;
    if (denominator(t) == 2) {
        // z = -1: the form is the real symmetric matrix 2(A + A^t)
        NumberField F = make_field(QPoly{Rat(2), Rat(1)}, RealAlgebraic::rational(Rat(-2)));
        std::size_t n = m.rows();
        std::vector<std::vector<ZElem>> h(n, std::vector<ZElem>(n, z_zero()));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Int s = 2 * (m(i, j) + m(j, i));
                h[i][j] = z_make(f_const(Rat(s)), FElem{});
            }
        return hermitian_signature(F, std::move(h));
    }
    return signature_at_x(m, two_cos_of_turn(t));
}

// zero of the Alexander polynomial with turn in (0, 1/2)
struct HalfPoint {
    std::optional<Rat> turn;
    RealAlgebraic x;
    Rat lo, hi;
    LaurentPoly factor;
    int value = 0;
};

[[noreturn]] void isolation_failure(const LaurentPoly& f) {
    fail("root isolation failure at the configured precision: " + f.str());
}

// tighten the certified turn enclosure of an algebraic point until it is
// narrower than `width` and strictly inside (0, 1/2)
void tighten(HalfPoint& p, const Rat& width) {
    if (p.turn) {
        p.lo = p.hi = *p.turn;
        return;
    }
    for (int pass = 0;; ++pass) {
        if (pass > 200) isolation_failure(p.factor);
        auto [tlo, thi] = turn_enclosure(p.x.lower(), p.x.upper());
        p.lo = tlo;
        p.hi = thi;
        if (p.hi - p.lo <= width && p.lo > 0 && p.hi < Rat(1, 2)) return;
        if (p.x.exact()) isolation_failure(p.factor);
        p.x.refine();
        p.x.refine();
    }
}

// exact position of a rational turn s relative to a profile point; the point
// sits at p.turn when exact, else at the turn in the half of the circle named
// by first_half whose cosine coordinate is p.x
int side_of(const Rat& s, const HalfPoint& p, bool first_half) {
    if (p.turn) {
        Rat t = first_half ? *p.turn : 1 - *p.turn;
        return s < t ? -1 : (s > t ? 1 : 0);
    }
    RealAlgebraic xs = two_cos_of_turn(s);
    RealAlgebraic x = p.x;
    if (first_half) {
        if (s >= Rat(1, 2)) return 1;
        int c = xs.compare(x);  // turns ascend as x descends on (0, 1/2)
        return c == 0 ? 0 : (c > 0 ? -1 : 1);
    }
    if (s <= Rat(1, 2)) return -1;
    int c = xs.compare(x);
    return c == 0 ? 0 : (c > 0 ? 1 : -1);
}

Int pairing(const IMat& a, const std::vector<Int>& u, const std::vector<Int>& v) {
    std::vector<Int> av = a.apply(v);
    Int s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * av[i];
    return s;
}

long rank_of_rows(const std::vector<std::vector<Int>>& rows, std::size_t n) {
    IMat m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    return static_cast<long>(hnf_rows(m).rows());
}

// primitive isotropic vectors with entries in [-bound, bound], first nonzero
// positive, ordered simplest-first
std::vector<std::vector<Int>> isotropic_candidates(const IMat& a, long bound, bool& truncated) {
    std::size_t n = a.rows();
    std::vector<std::vector<Int>> out;
    // counting up from the zero vector visits exactly the vectors whose first
    // nonzero entry is positive
    std::vector<long> v(n, 0);
    const long examined_cap = 20000000;
    long examined = 0;
    truncated = false;
    for (;;) {
        std::size_t pos = n;
        while (pos > 0 && v[pos - 1] == bound) v[--pos] = -bound;
        if (pos == 0) break;
        ++v[pos - 1];
        if (++examined > examined_cap) {
            truncated = true;
            break;
        }
        Int g = 0;
        for (long c : v) g = gcd_int(g, Int(c));
        if (g != 1) continue;
        std::vector<Int> w(v.begin(), v.end());
        if (pairing(a, w, w) == 0) out.push_back(std::move(w));
    }
    auto key = [](const std::vector<Int>& w) {
        Int mx = 0;
        long nnz = 0, firstnz = static_cast<long>(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            Int av = w[i] < 0 ? Int(-w[i]) : w[i];
            if (av > mx) mx = av;
            if (w[i] != 0) {
                ++nnz;
                if (firstnz == static_cast<long>(w.size())) firstnz = static_cast<long>(i);
            }
        }
        return std::tuple<Int, long, long>(mx, nnz, firstnz);
    };
    std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
        auto kx = key(x), ky = key(y);
        if (kx != ky) return kx < ky;
        return x < y;
    });
    return out;
}

bool compatible(const IMat& a, const std::vector<Int>& v,
                const std::vector<std::vector<Int>>& chosen) {
    for (const auto& w : chosen)
        if (pairing(a, v, w) != 0 || pairing(a, w, v) != 0) return false;
    return true;
}

bool extend_isotropic(const IMat& a, const std::vector<std::vector<Int>>& cand,
                      std::size_t start, std::size_t target,
                      std::vector<std::vector<Int>>& chosen, long& budget) {
    if (chosen.size() == target) return true;
    for (std::size_t i = start; i < cand.size(); ++i) {
        if (--budget < 0) return false;
        if (!compatible(a, cand[i], chosen)) continue;
        chosen.push_back(cand[i]);
        if (rank_of_rows(chosen, a.rows()) == static_cast<long>(chosen.size())) {
            if (extend_isotropic(a, cand, i + 1, target, chosen, budget)) return true;
        }
        chosen.pop_back();
    }
    return false;
}

IMat rows_to_mat(const std::vector<std::vector<Int>>& rows, std::size_t n) {
    IMat m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    return m;
}

// saturation of the row lattice: integer points of its rational span
IMat saturate_rows(const IMat& rows) {
    IMat kern = kernel_basis(rows);
    return hnf_rows(kernel_basis(kern.transpose()).transpose());
}

// collect every completion to a full isotropic half-rank family, capped
void collect_isotropic(const IMat& a, const std::vector<std::vector<Int>>& cand,
                       std::size_t start, std::size_t target,
                       std::vector<std::vector<Int>>& chosen,
                       std::vector<std::vector<std::vector<Int>>>& found, long& budget,
                       std::size_t found_cap) {
    if (found.size() >= found_cap || --budget < 0) return;
    if (chosen.size() == target) {
        found.push_back(chosen);
        return;
    }
    for (std::size_t i = start; i < cand.size(); ++i) {
        if (!compatible(a, cand[i], chosen)) continue;
        chosen.push_back(cand[i]);
        if (rank_of_rows(chosen, a.rows()) == static_cast<long>(chosen.size()))
            collect_isotropic(a, cand, i + 1, target, chosen, found, budget, found_cap);
        chosen.pop_back();
        if (found.size() >= found_cap || budget < 0) return;
    }
}

}  // namespace

SeifertMatrix::SeifertMatrix(IMat a) : a_(std::move(a)) {
    if (!a_.is_square()) fail("Seifert matrix must be square");
    if (a_.rows() % 2 != 0) fail("Seifert matrix must have even size");
    Int u = det(a_ - a_.transpose());
    if (u != 1 && u != -1) fail("surface intersection form must be unimodular");
}

SeifertMatrix SeifertMatrix::direct_sum(const SeifertMatrix& other) const {
    IMat s(size() + other.size(), size() + other.size());
    s.set_block(0, 0, a_);
    s.set_block(size(), size(), other.a_);
    return SeifertMatrix(std::move(s));
}

SeifertMatrix SeifertMatrix::negated() const { return SeifertMatrix(-a_); }

SeifertMatrix SeifertMatrix::multiple(long m) const {
    SeifertMatrix base = m < 0 ? negated() : *this;
    long k = m < 0 ? -m : m;
    SeifertMatrix out{IMat(0, 0)};
    for (long i = 0; i < k; ++i) out = out.direct_sum(base);
    return out;
}

LaurentPoly alexander(const SeifertMatrix& a) {
    LaurentPoly d = alexander_det(a.entries());
    if (d.is_zero() || d.evaluate_int(1) != 1)
        fail("Alexander determinant must evaluate to 1 at t = 1");
    return d.mul_term(1, -d.min_exp());
}

bool arf_zero_solvable(const SeifertMatrix& a) {
    Int m = mod_floor(alexander(a).evaluate_int(-1), 8);
    return m == 1 || m == 7;
}

UnitCirclePoint UnitCirclePoint::exact_turn(const Rat& t) { return {true, mod1(t)}; }

UnitCirclePoint UnitCirclePoint::transcendental(const Rat& witness) {
    return {false, mod1(witness)};
}

Rat default_enclosure_width() { return Rat(1, Int("1000000000000")); }

SignatureProfile signature_profile(const SeifertMatrix& a) {
    return signature_profile(a, default_enclosure_width());
}

SignatureProfile signature_profile(const SeifertMatrix& a, const Rat& enclosure_width) {
    if (enclosure_width <= 0) fail("enclosure width must be positive");
    const IMat& m = a.entries();
    LaurentPoly d = alexander(a);

    std::vector<HalfPoint> half;
    if (d.span() > 0) {
        std::vector<LaurentPoly> factors;
        for (const LaurentPoly& f : factor_over_integers(d)) {
            if (f.span() == 0) continue;
            if (std::find(factors.begin(), factors.end(), f) == factors.end())
                factors.push_back(f);
        }
        for (const LaurentPoly& f : factors) {
            if (auto idx = cyclotomic_index(f)) {
                if (*idx <= 2) fail("Alexander polynomial cannot vanish at t = 1 or t = -1");
                Int q(*idx);
                for (Int j = 1; 2 * j < q; ++j) {
                    if (gcd_int(j, q) != 1) continue;
                    Rat t(j, q);
                    half.push_back({t, two_cos_of_turn(t), t, t, f, 0});
                }
            } else {
                if (normalize_units(f.mirror()) != f || f.span() % 2 != 0)
                    continue;  // not self-reciprocal: no unit-circle zeros
                QPoly g = palindromic_compress(f);
                for (RealAlgebraic& x : isolate_roots(g, Rat(-2), Rat(2)))
                    half.push_back({std::nullopt, std::move(x), Rat(0), Rat(0), f, 0});
            }
        }
    }

    // sort by x descending, which is turn ascending on (0, 1/2)
    for (std::size_t i = 0; i < half.size(); ++i) {
        std::size_t best = i;
        for (std::size_t j = i + 1; j < half.size(); ++j) {
            int c = half[j].x.compare(half[best].x);
            if (c == 0) fail("distinct factors of the Alexander polynomial share a zero");
            if (c > 0) best = j;
        }
        std::swap(half[i], half[best]);
    }

    for (HalfPoint& p : half) tighten(p, enclosure_width);
    for (std::size_t i = 0; i + 1 < half.size(); ++i) {
        for (int pass = 0; half[i].hi >= half[i + 1].lo; ++pass) {
            if (pass > 200) isolation_failure(half[i].factor);
            if (!half[i].turn) half[i].x.refine();
            if (!half[i + 1].turn) half[i + 1].x.refine();
            tighten(half[i], enclosure_width);
            tighten(half[i + 1], enclosure_width);
        }
    }

    for (HalfPoint& p : half)
        p.value = p.turn ? signature_at_exact(m, *p.turn) : signature_at_x(m, p.x);

    SignatureProfile prof;
    for (const HalfPoint& p : half)
        prof.points.push_back(
            {p.turn, p.lo, p.hi, p.factor, p.value});
    for (std::size_t i = half.size(); i-- > 0;) {
        const HalfPoint& p = half[i];
        prof.points.push_back({p.turn ? std::optional<Rat>(1 - *p.turn) : std::nullopt,
                               1 - p.hi, 1 - p.lo, p.factor, p.value});
    }

    std::size_t k = prof.points.size();
    if (k == 0) {
        int v = signature_at_exact(m, Rat(1, 2));
        if (v != 0) fail("signature arc through z=1 must vanish");
        prof.arcs.push_back({Rat(1, 2), 0});
        return prof;
    }

    // index into `half` plus the side of the circle, for exact sample checks
    auto ref = [&](std::size_t i) -> std::pair<const HalfPoint&, bool> {
        bool first_half = i < half.size();
        return {half[first_half ? i : k - 1 - i], first_half};
    };
    auto check_between = [&](const Rat& s, std::size_t below, std::size_t above) {
        auto [pb, fb] = ref(below);
        auto [pa, fa] = ref(above);
        if (side_of(s, pb, fb) != 1 || side_of(s, pa, fa) != -1)
            fail("arc sample verification failed");
    };

    Rat s0 = simplest_rational_between(prof.points[k - 1].hi, Rat(1));
    {
        auto [pb, fb] = ref(k - 1);
        if (side_of(s0, pb, fb) != 1) fail("arc sample verification failed");
    }
    int v0 = signature_at_exact(m, s0);
    if (v0 != 0) fail("signature arc through z=1 must vanish");
    prof.arcs.push_back({s0, 0});
    for (std::size_t i = 1; i < k; ++i) {
        Rat s = simplest_rational_between(prof.points[i - 1].hi, prof.points[i].lo);
        check_between(s, i - 1, i);
        prof.arcs.push_back({s, signature_at_exact(m, s)});
    }
    return prof;
}

int signature_at(const SeifertMatrix& a, const UnitCirclePoint& z) {
    return signature_at(a, z, default_enclosure_width());
}

int signature_at(const SeifertMatrix& a, const UnitCirclePoint& z, const Rat& enclosure_width) {
    if (z.exact) return signature_at_exact(a.entries(), z.turn);
    SignatureProfile prof = signature_profile(a, enclosure_width);
    const Rat& w = z.turn;
    for (const ProfilePoint& p : prof.points)
        if (p.lo <= w && w <= p.hi) fail(kUncertified);
    std::size_t k = prof.points.size();
    if (k == 0) return prof.arcs[0].value;
    if (w < prof.points[0].lo || w > prof.points[k - 1].hi) return prof.arcs[0].value;
    for (std::size_t i = 1; i < k; ++i)
        if (prof.points[i - 1].hi < w && w < prof.points[i].lo) return prof.arcs[i].value;
    fail(kUncertified);
}

RatInterval signature_integral(const SeifertMatrix& a) {
    SignatureProfile prof = signature_profile(a);
    std::size_t k = prof.points.size();
    if (k == 0) return {Rat(0), Rat(0), true};
    bool exact = true;
    for (const ProfilePoint& p : prof.points) exact = exact && p.turn.has_value();
    Rat lo(0), hi(0);
    auto add = [&](int v, const Rat& len_lo, const Rat& len_hi) {
        Rat cv(v);
        if (v >= 0) {
            lo += cv * len_lo;
            hi += cv * len_hi;
        } else {
            lo += cv * len_hi;
            hi += cv * len_lo;
        }
    };
    add(prof.arcs[0].value, 1 - prof.points[k - 1].hi + prof.points[0].lo,
        1 - prof.points[k - 1].lo + prof.points[0].hi);
    for (std::size_t i = 1; i < k; ++i)
        add(prof.arcs[i].value, prof.points[i].lo - prof.points[i - 1].hi,
            prof.points[i].hi - prof.points[i - 1].lo);
    return {lo, hi, exact};
}

MetabolicResult metabolic_witness(const SeifertMatrix& a, long search_bound, bool doubly) {
    if (search_bound <= 0) fail("search bound must be positive");
    const IMat& m = a.entries();
    std::size_t n = m.rows();
    std::size_t target = n / 2;
    if (n == 0) return {IMat(0, 0), ""};

    bool truncated = false;
    std::vector<std::vector<Int>> cand = isotropic_candidates(m, search_bound, truncated);
    const std::string not_found = "not found (bounded search)";

    if (!doubly) {
        std::vector<std::vector<Int>> chosen;
        long budget = 2000000;
        if (!extend_isotropic(m, cand, 0, target, chosen, budget)) return {std::nullopt, not_found};
        IMat basis = saturate_rows(rows_to_mat(chosen, n));
        if (basis.rows() != target) fail("saturated metabolizer has wrong rank");
        for (std::size_t i = 0; i < target; ++i)
            for (std::size_t j = 0; j < target; ++j)
                if (pairing(m, basis.row(i), basis.row(j)) != 0)
                    fail("saturated metabolizer is not isotropic");
        return {basis, ""};
    }

    std::vector<std::vector<std::vector<Int>>> families;
    std::vector<std::vector<Int>> chosen;
    long budget = 2000000;
    collect_isotropic(m, cand, 0, target, chosen, families, budget, 400);
    for (const auto& l1 : families) {
        // the second family need not pair to zero with the first: only the
        // two diagonal blocks of the stacked basis must vanish
        for (const auto& l2 : families) {
            std::vector<std::vector<Int>> all = l1;
            all.insert(all.end(), l2.begin(), l2.end());
            IMat stacked = rows_to_mat(all, n);
            Int dd = det(stacked);
            if (dd == 1 || dd == -1) return {stacked, ""};
        }
    }
    return {std::nullopt, not_found};
}

}  // namespace concord
