#include "concord/linkform.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace concord {

namespace {

const char* kInconsistent = "presentation/order inconsistency";
const char* kBound = "enumeration bound exceeded";

// Gaussian elimination solving a x = rhs over the rationals.
QMat solve_rational(const IMat& a, const IMat& rhs) {
    std::size_t n = a.rows(), w = rhs.cols();
    QMat m(n, n + w);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rat(a(i, j));
        for (std::size_t j = 0; j < w; ++j) m(i, n + j) = Rat(rhs(i, j));
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) fail("singular presentation matrix");
        m.swap_rows(piv, col);
        Rat inv = Rat(1) / m(col, col);
        for (std::size_t j = col; j < n + w; ++j) m(col, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (std::size_t j = col; j < n + w; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return m.block(0, n, n, w);
}

// Block tridiagonal symmetrized presentation of the k-fold cover homology and
// the deck action on its generators (t w_i = w_{i+1} - w_0, the last image
// being -w_0).
std::pair<IMat, IMat> tridiagonal_presentation(const IMat& a, unsigned k) {
    std::size_t n = a.rows(), blocks = k - 1, m = blocks * n;
    IMat at = a.transpose();
    IMat sym = a + at;
    IMat e(m, m), c(m, m);
    for (std::size_t b = 0; b < blocks; ++b) {
        e.set_block(b * n, b * n, sym);
        if (b + 1 < blocks) {
            e.set_block((b + 1) * n, b * n, -a);
            e.set_block(b * n, (b + 1) * n, -at);
            for (std::size_t i = 0; i < n; ++i) c((b + 1) * n + i, b * n + i) = 1;
        }
        for (std::size_t i = 0; i < n; ++i) c(i, b * n + i) -= 1;
    }
    return {e, c};
}

Int lattice_index(const IMat& hnf) {
    Int p = 1;
    for (std::size_t i = 0; i < hnf.rows(); ++i) p *= hnf(i, i);
    return p;
}

IMat stack_rows(const IMat& top, const std::vector<std::vector<Int>>& extra) {
    IMat out(top.rows() + extra.size(), top.cols());
    out.set_block(0, 0, top);
    for (std::size_t i = 0; i < extra.size(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) out(top.rows() + i, j) = extra[i][j];
    return out;
}

IMat diag_lattice(const std::vector<Int>& d) {
    IMat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

// Smallest t-stable lattice containing lat (lat already contains diag(d)).
IMat t_closure(IMat lat, const IMat& tau) {
    for (;;) {
        std::vector<std::vector<Int>> missing;
        for (std::size_t i = 0; i < lat.rows(); ++i) {
            std::vector<Int> img = tau.apply(lat.row(i));
            if (!row_lattice_contains(lat, img)) missing.push_back(img);
        }
        if (missing.empty()) return lat;
        lat = hnf_rows(stack_rows(lat, missing));
    }
}

Rat pair_vectors(const QMat& gram, const std::vector<Int>& x, const std::vector<Int>& y) {
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) s += Rat(x[i] * y[j]) * gram(i, j);
    }
    return mod1(s);
}

bool rows_pairwise_zero(const QMat& gram, const IMat& lat) {
    for (std::size_t i = 0; i < lat.rows(); ++i)
        for (std::size_t j = i; j < lat.rows(); ++j)
            if (pair_vectors(gram, lat.row(i), lat.row(j)) != 0) return false;
    return true;
}

// Generator rows reported for a subgroup lattice: basis rows that are nonzero
// modulo the factors, reduced coordinatewise.
IMat visible_generators(const IMat& lat, const std::vector<Int>& d) {
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < lat.rows(); ++i) {
        std::vector<Int> r = lat.row(i);
        bool nonzero = false;
        for (std::size_t j = 0; j < r.size(); ++j) {
            r[j] = mod_floor(r[j], d[j]);
            nonzero |= r[j] != 0;
        }
        if (nonzero) rows.push_back(r);
    }
    IMat out(rows.size(), d.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j) out(i, j) = rows[i][j];
    return out;
}

bool next_element(std::vector<Int>& v, const std::vector<Int>& d) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (++v[i] < d[i]) return true;
        v[i] = 0;
    }
    return false;
}

struct MetabolizerSearch {
    const std::vector<Int>& d;
    const QMat& gram;
    const IMat& tau;
    Int target;
    Int whole;
    std::set<std::string> seen;
    std::vector<IMat> found;

    void run(const IMat& lat) {
        if (!seen.insert(lat.str()).second) return;
        Int order = whole / lattice_index(lat);
        if (order == target) {
            found.push_back(lat);
            return;
        }
        std::vector<Int> g(d.size(), 0);
        while (next_element(g, d)) {
            if (row_lattice_contains(lat, g)) continue;
            if (pair_vectors(gram, g, g) != 0) continue;
            bool ok = true;
            for (std::size_t i = 0; ok && i < lat.rows(); ++i)
                ok = pair_vectors(gram, g, lat.row(i)) == 0;
            if (!ok) continue;
            IMat grown = t_closure(hnf_rows(stack_rows(lat, {g})), tau);
            if (whole / lattice_index(grown) > target) continue;
            if (!rows_pairwise_zero(gram, grown)) continue;
            run(grown);
        }
    }
};

}  // namespace

LinkingForm linking_form(const SeifertMatrix& a, unsigned k) {
    CoverGroup cg = cover_group(a, k);
    if (!cg.finite) fail("cover group is infinite");

    auto [e, c] = tridiagonal_presentation(a.entries(), k);
    std::size_t m = e.rows();
    Smith s = smith_normal_form(e);
    IMat w = inverse_unimodular(s.u);

    std::vector<std::size_t> live;
    std::vector<Int> factors;
    for (std::size_t i = 0; i < m; ++i)
        if (s.d(i, i) != 1) {
            live.push_back(i);
            factors.push_back(s.d(i, i));
        }
    if (factors != cg.factors) fail(kInconsistent);

    // deck action must permute the relations and have exact order k
    if (matpow(c, k) != IMat::identity(m)) fail("deck transformation order mismatch");
    IMat relation_lattice = hnf_rows(e.transpose());
    IMat moved = (c * e).transpose();
    for (std::size_t i = 0; i < m; ++i)
        if (!row_lattice_contains(relation_lattice, moved.row(i)))
            fail("deck transformation does not preserve the presentation");

    std::size_t r = live.size();
    IMat wlive(m, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < m; ++i) wlive(i, j) = w(i, live[j]);

    QMat gram(r, r);
    if (r > 0) {
        QMat z = solve_rational(e, wlive);
        QMat full = to_rational(wlive).transpose() * z;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) gram(i, j) = mod1(full(i, j));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (gram(i, j) != gram(j, i)) fail("linking pairing is not symmetric");
    }

    IMat tau_full = s.u * c * w;
    IMat tau(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) tau(i, j) = mod_floor(tau_full(live[i], live[j]), factors[i]);

    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (pair_vectors(gram, tau.col(i), tau.col(j)) != mod1(gram(i, j)))
                fail("deck transformation is not an isometry");

    LinkingForm l;
    l.group.k = k;
    l.group.factors = factors;
    l.group.t_action = tau;
    l.group.finite = true;
    l.group.order = cg.order;
    l.gram = gram;
    return l;
}

Rat pairing(const LinkingForm& l, const std::vector<Int>& x, const std::vector<Int>& y) {
    if (x.size() != l.group.factors.size() || y.size() != l.group.factors.size())
        fail("coordinate length mismatch");
    return pair_vectors(l.gram, x, y);
}

std::vector<Metabolizer> metabolizers(const LinkingForm& l) {
    return metabolizers(l, Int(10000));
}

namespace {

std::vector<Int> prime_divisors(Int n) {
    std::vector<Int> out;
    for (Int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

// The linking form splits orthogonally into its primary parts: elements of
// coprime orders pair to zero, so every metabolizer is the direct sum of a
// metabolizer of each part. Each part is searched on its own, shrinking the
// element scans from the group order to the largest primary component.
struct PrimaryPart {
    std::vector<Int> factors;  // p-power parts of the live invariant factors
    std::vector<Int> lift;     // multiplier embedding part coordinates mod d
    QMat gram;
    IMat tau;
};

PrimaryPart primary_part(const LinkingForm& l, const Int& p) {
    const std::vector<Int>& d = l.group.factors;
    std::size_t r = d.size();
    PrimaryPart part;
    part.factors.resize(r);
    part.lift.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        Int q = 1;
        Int rest = d[i];
        while (rest % p == 0) {
            q *= p;
            rest /= p;
        }
        part.factors[i] = q;
        // multiplier congruent to 1 mod q and 0 mod rest
        Int c = 0;
        if (q > 1) {
            Int inv = 1;
            while (mod_floor(rest * inv, q) != 1) ++inv;
            c = mod_floor(rest * inv, d[i]);
        }
        part.lift[i] = c;
    }
    part.gram = QMat(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            part.gram(i, j) = mod1(l.gram(i, j) * Rat(part.lift[i] * part.lift[j]));
    part.tau = IMat(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            part.tau(i, j) = mod_floor(l.group.t_action(i, j) * part.lift[j], part.factors[i]);
    return part;
}

}  // namespace

std::vector<Metabolizer> metabolizers(const LinkingForm& l, const Int& bound) {
    const std::vector<Int>& d = l.group.factors;
    Int whole = 1;
    for (const Int& di : d) whole *= di;
    if (whole > bound) fail(kBound);

    if (whole == 1) return {Metabolizer{IMat(0, d.size()), 1}};
    Int root = boost::multiprecision::sqrt(whole);
    if (root * root != whole) return {};

    std::vector<std::vector<IMat>> per_prime;  // part lattices lifted mod d
    for (const Int& p : prime_divisors(whole)) {
        PrimaryPart part = primary_part(l, p);
        Int pwhole = 1;
        for (const Int& q : part.factors) pwhole *= q;
        Int proot = boost::multiprecision::sqrt(pwhole);
        if (proot * proot != pwhole) return {};

        MetabolizerSearch search{part.factors, part.gram, part.tau, proot, pwhole, {}, {}};
        search.run(diag_lattice(part.factors));
        if (search.found.empty()) return {};

        std::vector<IMat> lifted;
        for (const IMat& lat : search.found) {
            IMat gens = visible_generators(lat, part.factors);
            IMat up(gens.rows(), d.size());
            for (std::size_t i = 0; i < gens.rows(); ++i)
                for (std::size_t j = 0; j < d.size(); ++j)
                    up(i, j) = mod_floor(gens(i, j) * part.lift[j], d[j]);
            lifted.push_back(up);
        }
        per_prime.push_back(std::move(lifted));
    }

    std::vector<Metabolizer> out;
    std::vector<std::size_t> pick(per_prime.size(), 0);
    for (;;) {
        std::vector<std::vector<Int>> rows;
        for (std::size_t i = 0; i < per_prime.size(); ++i) {
            const IMat& gens = per_prime[i][pick[i]];
            for (std::size_t j = 0; j < gens.rows(); ++j) rows.push_back(gens.row(j));
        }
        IMat lat = t_closure(hnf_rows(stack_rows(diag_lattice(d), rows)), l.group.t_action);
        if (whole / lattice_index(lat) != root) fail(kInconsistent);
        if (!rows_pairwise_zero(l.gram, lat)) fail(kInconsistent);
        out.push_back(Metabolizer{visible_generators(lat, d), root});

        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == per_prime[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const Metabolizer& a, const Metabolizer& b) {
        return a.generators.str() < b.generators.str();
    });
    return out;
}

Metabolizer metabolizer_from_generators(const LinkingForm& l, const IMat& generators) {
    const std::vector<Int>& d = l.group.factors;
    if (generators.cols() != d.size()) fail("coordinate length mismatch");
    IMat lat = hnf_rows(stack_rows(diag_lattice(d), [&] {
        std::vector<std::vector<Int>> rows;
        for (std::size_t i = 0; i < generators.rows(); ++i) rows.push_back(generators.row(i));
        return rows;
    }()));
    if (t_closure(lat, l.group.t_action) != lat) fail("declared metabolizer is not t-invariant");
    if (!rows_pairwise_zero(l.gram, lat)) fail("declared metabolizer is not self-annihilating");
    Int whole = 1;
    for (const Int& di : d) whole *= di;
    Int order = whole / lattice_index(lat);
    if (order * order != whole) fail("declared metabolizer has wrong order");
    return Metabolizer{visible_generators(lat, d), order};
}

std::vector<Character> characters_vanishing(const LinkingForm& l, const Metabolizer& p,
                                            const Int& m, bool allow_any_order) {
    if (m < 1) fail("character order must be positive");
    if (!allow_any_order && !is_prime_power(m))
        fail("character order must be a prime power");
    const std::vector<Int>& d = l.group.factors;
    std::size_t r = d.size();
    if (m == 1 || r == 0) return {};

    IMat lat = hnf_rows(stack_rows(diag_lattice(d), [&] {
        std::vector<std::vector<Int>> rows;
        for (std::size_t i = 0; i < p.generators.rows(); ++i) rows.push_back(p.generators.row(i));
        return rows;
    }()));
    Smith s = smith_normal_form(lat.transpose());

    std::vector<std::size_t> live;
    std::vector<Int> counts;
    for (std::size_t i = 0; i < r; ++i) {
        Int q = s.d(i, i);
        Int c = gcd_int(q, m);
        if (c > 1) {
            live.push_back(i);
            counts.push_back(c);
        }
    }

    std::vector<Character> out;
    std::vector<Int> wsel(live.size(), 0);
    if (live.empty()) return out;
    while (next_element(wsel, counts)) {
        Character chi;
        chi.m = m;
        chi.values.assign(r, 0);
        Int content = m;
        for (std::size_t j = 0; j < live.size(); ++j) {
            Int v = wsel[j] * (m / counts[j]);
            content = gcd_int(content, v);
            for (std::size_t i = 0; i < r; ++i)
                chi.values[i] = mod_floor(chi.values[i] + v * s.u(live[j], i), m);
        }
        chi.exact_order = m / content;
        chi.surjective = chi.exact_order == m;
        out.push_back(chi);
    }
    return out;
}

std::vector<std::pair<Metabolizer, Metabolizer>> complementary_pairs(const LinkingForm& l) {
    return complementary_pairs(l, Int(10000));
}

std::vector<std::pair<Metabolizer, Metabolizer>> complementary_pairs(const LinkingForm& l,
                                                                     const Int& bound) {
    std::vector<Metabolizer> mets = metabolizers(l, bound);
    const std::vector<Int>& d = l.group.factors;
    Int whole = 1;
    for (const Int& di : d) whole *= di;

    std::vector<IMat> lattices;
    for (const Metabolizer& p : mets) {
        std::vector<std::vector<Int>> rows;
        for (std::size_t i = 0; i < p.generators.rows(); ++i) rows.push_back(p.generators.row(i));
        lattices.push_back(hnf_rows(stack_rows(diag_lattice(d), rows)));
    }

    std::vector<std::pair<Metabolizer, Metabolizer>> out;
    for (std::size_t i = 0; i < mets.size(); ++i)
        for (std::size_t j = 0; j < mets.size(); ++j) {
            if (mets[i].order * mets[j].order != whole) continue;
            std::vector<std::vector<Int>> rows;
            for (std::size_t t = 0; t < lattices[j].rows(); ++t) rows.push_back(lattices[j].row(t));
            IMat sum = hnf_rows(stack_rows(lattices[i], rows));
            if (sum == IMat::identity(d.size())) out.emplace_back(mets[i], mets[j]);
        }
    return out;
}

namespace {

// Presentation, deck action and Smith coordinates of one cover level.
struct CoverCoords {
    IMat e, c;
    Smith s;
    std::vector<std::size_t> live;
    std::vector<Int> factors;
};

CoverCoords cover_coords(const SeifertMatrix& a, unsigned k) {
    auto [e, c] = tridiagonal_presentation(a.entries(), k);
    CoverCoords cc{e, c, smith_normal_form(e), {}, {}};
    for (std::size_t i = 0; i < cc.e.rows(); ++i)
        if (cc.s.d(i, i) != 1) {
            cc.live.push_back(i);
            cc.factors.push_back(cc.s.d(i, i));
        }
    return cc;
}

std::vector<Int> live_coordinates(const CoverCoords& cc, const std::vector<Int>& ambient) {
    std::vector<Int> t = cc.s.u.apply(ambient);
    std::vector<Int> y(cc.live.size());
    for (std::size_t i = 0; i < cc.live.size(); ++i)
        y[i] = mod_floor(t[cc.live[i]], cc.factors[i]);
    return y;
}

}  // namespace

IMat level_projection(const SeifertMatrix& a, unsigned k, unsigned ks) {
    if (k == 0 || ks == 0) fail("cover degree must be positive");
    if (k % ks != 0) fail("projection level must divide the cover degree");
    std::size_t n = a.entries().rows();
    CoverCoords src = cover_coords(a, k);
    CoverCoords dst = cover_coords(a, ks);
    std::size_t ms = (k - 1) * n, md = (ks - 1) * n;

    // sheet folding b -> b mod ks on the generator blocks; the coefficient
    // of target block cb in the image of w_b counts sheet classes by residue
    IMat amb(md, ms);
    for (std::size_t b = 0; b + 1 < k; ++b) {
        auto count = [&](std::size_t j) {
            return j > b ? Int(0) : Int((b - j) / ks + 1);
        };
        for (std::size_t cb = 0; cb + 1 < ks; ++cb) {
            Int coeff = count(cb) - count(cb + 1);
            if (coeff == 0) continue;
            for (std::size_t i = 0; i < n; ++i) amb(cb * n + i, b * n + i) = coeff;
        }
    }

    if (md > 0) {
        IMat dst_rel = hnf_rows(dst.e.transpose());
        IMat moved = (amb * src.e).transpose();
        for (std::size_t i = 0; i < moved.rows(); ++i)
            if (!row_lattice_contains(dst_rel, moved.row(i)))
                fail("level projection does not preserve the presentation");
        IMat comm = ((amb * src.c) - (dst.c * amb)).transpose();
        for (std::size_t i = 0; i < comm.rows(); ++i)
            if (!row_lattice_contains(dst_rel, comm.row(i)))
                fail("level projection does not commute with the deck action");
    }

    IMat w = inverse_unimodular(src.s.u);
    std::size_t rs = src.live.size(), rd = dst.live.size();
    IMat proj(rd, rs);
    for (std::size_t j = 0; j < rs; ++j) {
        std::vector<Int> x(ms);
        for (std::size_t i = 0; i < ms; ++i) x[i] = w(i, src.live[j]);
        std::vector<Int> y = live_coordinates(dst, amb.apply(x));
        for (std::size_t i = 0; i < rd; ++i) proj(i, j) = y[i];
    }
    return proj;
}

Metabolizer metabolizer_from_seifert_lattice(const SeifertMatrix& a, const LinkingForm& l,
                                             const IMat& rows) {
    const IMat& m0 = a.entries();
    std::size_t n = m0.rows();
    if (rows.cols() != n) fail("coordinate length mismatch");
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t j = 0; j < rows.rows(); ++j) {
            Int s = 0;
            for (std::size_t p = 0; p < n; ++p) {
                if (rows(i, p) == 0) continue;
                for (std::size_t q = 0; q < n; ++q) s += rows(i, p) * m0(p, q) * rows(j, q);
            }
            if (s != 0) fail("lattice is not Seifert-isotropic");
        }

    unsigned k = l.group.k;
    CoverCoords cc = cover_coords(a, k);
    if (cc.factors != l.group.factors) fail(kInconsistent);
    std::size_t r = cc.live.size();

    std::vector<std::vector<Int>> gen;
    IMat at = m0.transpose();
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        std::vector<Int> push = at.apply(rows.row(i));
        std::vector<Int> x((k - 1) * n, Int(0));
        for (std::size_t p = 0; p < n; ++p) x[p] = push[p];
        std::vector<Int> y = live_coordinates(cc, x);
        for (unsigned b = 0; b < k; ++b) {
            gen.push_back(y);
            y = l.group.t_action.apply(y);
            for (std::size_t q = 0; q < r; ++q) y[q] = mod_floor(y[q], cc.factors[q]);
        }
    }
    IMat gens(gen.size(), r);
    for (std::size_t i = 0; i < gen.size(); ++i)
        for (std::size_t j = 0; j < r; ++j) gens(i, j) = gen[i][j];
    return metabolizer_from_generators(l, gens);
}

}  // namespace concord
