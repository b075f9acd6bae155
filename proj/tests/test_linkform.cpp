#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "concord/linkform.hpp"
#include "fixtures.hpp"

using namespace concord;
using namespace concord::fixtures;

namespace {

using Elem = std::vector<Int>;

Elem reduce_elem(const Elem& v, const std::vector<Int>& d) {
    Elem out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod_floor(v[i], d[i]);
    return out;
}

Elem add_elem(const Elem& a, const Elem& b, const std::vector<Int>& d) {
    Elem out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod_floor(a[i] + b[i], d[i]);
    return out;
}

std::vector<Elem> all_elements(const std::vector<Int>& d) {
    std::vector<Elem> out{Elem(d.size(), 0)};
    for (std::size_t i = 0; i < d.size(); ++i) {
        std::vector<Elem> grown;
        for (const Elem& e : out)
            for (Int v = 0; v < d[i]; ++v) {
                Elem f = e;
                f[i] = v;
                grown.push_back(f);
            }
        out = grown;
    }
    return out;
}

// additive + deck closure by plain element arithmetic, no lattice machinery
std::set<Elem> span_elements(const std::vector<Elem>& gens, const IMat& tau,
                             const std::vector<Int>& d, bool use_tau) {
    std::set<Elem> s{Elem(d.size(), 0)};
    std::vector<Elem> queue(gens);
    for (Elem& g : queue) g = reduce_elem(g, d);
    while (!queue.empty()) {
        Elem g = queue.back();
        queue.pop_back();
        if (!s.insert(g).second) continue;
        for (const Elem& h : std::set<Elem>(s)) queue.push_back(add_elem(g, h, d));
        if (use_tau) queue.push_back(reduce_elem(tau.apply(g), d));
    }
    return s;
}

std::set<std::set<Elem>> brute_metabolizers(const LinkingForm& l) {
    const std::vector<Int>& d = l.group.factors;
    Int whole = 1;
    for (const Int& di : d) whole *= di;
    std::vector<Elem> elems = all_elements(d);

    std::set<std::set<Elem>> out;
    for (const Elem& g : elems)
        for (const Elem& h : elems) {
            std::set<Elem> p = span_elements({g, h}, l.group.t_action, d, true);
            Int size = p.size();
            if (size * size != whole) continue;
            bool iso = true;
            for (const Elem& x : p)
                for (const Elem& y : p)
                    if (pairing(l, x, y) != 0) { iso = false; break; }
            if (iso) out.insert(p);
        }
    return out;
}

std::set<std::set<Elem>> as_element_sets(const LinkingForm& l, const std::vector<Metabolizer>& ms) {
    const std::vector<Int>& d = l.group.factors;
    std::set<std::set<Elem>> out;
    for (const Metabolizer& m : ms) {
        std::vector<Elem> gens;
        for (std::size_t i = 0; i < m.generators.rows(); ++i) gens.push_back(m.generators.row(i));
        std::set<Elem> p = span_elements(gens, l.group.t_action, d, false);
        CHECK(Int(p.size()) == m.order);
        for (const Elem& x : p)
            CHECK(p.count(reduce_elem(l.group.t_action.apply(x), d)) == 1);
        out.insert(p);
    }
    return out;
}

IMat poly_at_matrix(const LaurentPoly& f, const IMat& m) {
    IMat out(m.rows(), m.cols());
    for (const auto& [e, c] : f.coeffs()) {
        if (e < 0) fail("negative exponent");
        out = out + matpow(m, static_cast<unsigned long>(e)).scaled(c);
    }
    return out;
}

LinkingForm handmade(std::vector<Int> factors, QMat gram, IMat tau) {
    LinkingForm l;
    l.group.k = 2;
    l.group.factors = factors;
    l.group.t_action = tau;
    l.group.finite = true;
    l.group.order = 1;
    for (const Int& d : factors) l.group.order *= d;
    l.gram = std::move(gram);
    return l;
}

long rank_mod_p(IMat m, const Int& p) {
    std::size_t rows = m.rows(), cols = m.cols(), rank = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = mod_floor(m(i, j), p);
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        m.swap_rows(piv, rank);
        Int inv = 1;
        while (mod_floor(inv * m(rank, col), p) != 1) ++inv;
        for (std::size_t j = 0; j < cols; ++j) m(rank, j) = mod_floor(m(rank, j) * inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m(i, col) == 0) continue;
            Int f = m(i, col);
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = mod_floor(m(i, j) - f * m(rank, j), p);
        }
        ++rank;
    }
    return static_cast<long>(rank);
}

}  // namespace

TEST_CASE("double cover of the trefoil presents Z/3 with self-linking 2/3") {
    LinkingForm l = linking_form(b2(), 2);
    CHECK(l.group.factors == std::vector<Int>{3});
    CHECK(l.gram(0, 0) == Rat(2, 3));
    CHECK(l.group.t_action == IMat{{2}});
    CHECK(pairing(l, {1}, {1}) == Rat(2, 3));
    CHECK(pairing(l, {1}, {2}) == Rat(1, 3));
    CHECK(pairing(l, {3}, {1}) == 0);
    CHECK_THROWS_WITH(pairing(l, {1, 0}, {1}), "coordinate length mismatch");
}

TEST_CASE("double cover linking forms agree with the cover groups") {
    struct Row {
        SeifertMatrix a;
        Int order;
    };
    for (const Row& row : {Row{b1(), 9}, Row{b2(), 3}, Row{b3(), 7}, Row{figure_eight(), 5}}) {
        LinkingForm l = linking_form(row.a, 2);
        CoverGroup cg = cover_group(row.a, 2);
        CHECK(l.group.factors == cg.factors);
        CHECK(l.group.order == row.order);
        REQUIRE(l.group.factors.size() == 1);
        // cyclic group coordinates are canonical, so deck actions must agree
        CHECK(l.group.t_action == cg.t_action);
        CHECK(l.group.t_action(0, 0) == row.order - 1);
        // self-linking of the generator is a unit over the group order
        Rat g = l.gram(0, 0);
        CHECK(denominator(g) == row.order);
        // nonsingular: every nonzero element pairs nontrivially with some other
        for (Int x = 1; x < row.order; ++x) {
            bool hit = false;
            for (Int y = 1; y < row.order && !hit; ++y) hit = pairing(l, {x}, {y}) != 0;
            CHECK(hit);
        }
    }
}

TEST_CASE("deck transformation acts as an isometry") {
    for (unsigned k : {2u, 3u}) {
        LinkingForm l = linking_form(figure_eight(), k);
        const std::vector<Int>& d = l.group.factors;
        std::vector<Elem> elems = all_elements(d);
        for (const Elem& x : elems)
            for (const Elem& y : elems) {
                Elem tx = reduce_elem(l.group.t_action.apply(x), d);
                Elem ty = reduce_elem(l.group.t_action.apply(y), d);
                CHECK(pairing(l, tx, ty) == pairing(l, x, y));
            }
    }
    LinkingForm l3 = linking_form(figure_eight(), 3);
    CHECK(l3.group.factors == std::vector<Int>{4, 4});
    IMat alex_at_tau = poly_at_matrix(alexander(figure_eight()), l3.group.t_action);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(mod_floor(alex_at_tau(i, j), l3.group.factors[i]) == 0);
}

TEST_CASE("denominators divide the annihilators") {
    for (unsigned k : {2u, 3u, 4u}) {
        LinkingForm l = linking_form(b3(), k);
        for (std::size_t i = 0; i < l.group.factors.size(); ++i)
            for (std::size_t j = 0; j < l.group.factors.size(); ++j) {
                Rat v = l.gram(i, j) * Rat(l.group.factors[i]);
                CHECK(denominator(v) == 1);
            }
    }
}

TEST_CASE("trivial covers carry only the vacuous metabolizer") {
    for (LinkingForm l : {linking_form(unknot(), 2), linking_form(unknot(), 5),
                          linking_form(stabilized_unknot(), 4), linking_form(b2(), 5)}) {
        CHECK(l.group.factors.empty());
        std::vector<Metabolizer> ms = metabolizers(l);
        REQUIRE(ms.size() == 1);
        CHECK(ms[0].generators.rows() == 0);
        CHECK(ms[0].order == 1);
        CHECK(complementary_pairs(l).size() == 1);
        CHECK(characters_vanishing(l, ms[0], 3).empty());
    }
}

TEST_CASE("infinite cover groups are rejected") {
    CHECK_THROWS_WITH(linking_form(b2(), 6), "cover group is infinite");
    CHECK_THROWS_WITH(linking_form(b3(), 14), "cover group is infinite");
}

TEST_CASE("metabolizer search matches a brute force subgroup scan") {
    struct Case {
        SeifertMatrix a;
        unsigned k;
        std::size_t expected;
    };
    const Case cases[] = {
        {b1(), 2, 1},                           // Z/9: the three element subgroup
        {b2(), 2, 0},                           // order 3 is not a square
        {b3(), 2, 0},                           // order 7 is not a square
        {figure_eight(), 2, 0},                 // order 5 is not a square
        {b2().direct_sum(b2()), 2, 0},          // order 9, but no isotropic line
        {b2().direct_sum(b2().negated()), 2, 2},
    };
    for (const Case& c : cases) {
        LinkingForm l = linking_form(c.a, c.k);
        std::vector<Metabolizer> ms = metabolizers(l);
        CHECK(ms.size() == c.expected);
        CHECK(as_element_sets(l, ms) == brute_metabolizers(l));
    }
    LinkingForm l8 = linking_form(figure_eight(), 3);
    CHECK(as_element_sets(l8, metabolizers(l8)) == brute_metabolizers(l8));
}

TEST_CASE("unique metabolizer of the nine element cyclic form") {
    LinkingForm l = linking_form(b1(), 2);
    std::vector<Metabolizer> ms = metabolizers(l);
    REQUIRE(ms.size() == 1);
    CHECK(ms[0].generators == IMat{{3}});
    CHECK(ms[0].order == 3);

    Metabolizer validated = metabolizer_from_generators(l, IMat{{3}});
    CHECK(validated.generators == ms[0].generators);
    CHECK(validated.order == 3);
    CHECK(metabolizer_from_generators(l, IMat{{6}}).generators == IMat{{3}});
    CHECK_THROWS_WITH(metabolizer_from_generators(l, IMat{{1}}),
                      "declared metabolizer is not self-annihilating");
    CHECK_THROWS_WITH(metabolizer_from_generators(l, IMat(0, 1)),
                      "declared metabolizer has wrong order");
    CHECK_THROWS_WITH(metabolizer_from_generators(l, IMat{{1, 0}}), "coordinate length mismatch");
}

TEST_CASE("complementary pairs for a form and its negative") {
    LinkingForm l = linking_form(b2().direct_sum(b2().negated()), 2);
    CHECK(l.group.order == 9);
    std::vector<Metabolizer> ms = metabolizers(l);
    REQUIRE(ms.size() == 2);
    CHECK(ms[0].order == 3);
    CHECK(ms[1].order == 3);
    CHECK(ms[0].generators != ms[1].generators);

    auto pairs = complementary_pairs(l);
    REQUIRE(pairs.size() == 2);
    for (const auto& [p, q] : pairs) {
        CHECK(p.generators != q.generators);
        CHECK(p.order * q.order == l.group.order);
    }
}

TEST_CASE("hyperbolic forms split into two transverse metabolizers") {
    QMat g3(2, 2);
    g3(0, 1) = Rat(1, 3);
    g3(1, 0) = Rat(1, 3);
    LinkingForm l = handmade({3, 3}, g3, IMat::identity(2));
    std::vector<Metabolizer> ms = metabolizers(l);
    REQUIRE(ms.size() == 2);
    std::set<std::set<Elem>> sets = as_element_sets(l, ms);
    std::set<Elem> first = span_elements({{1, 0}}, l.group.t_action, l.group.factors, false);
    std::set<Elem> second = span_elements({{0, 1}}, l.group.t_action, l.group.factors, false);
    CHECK(sets == std::set<std::set<Elem>>{first, second});
    CHECK(complementary_pairs(l).size() == 2);
    CHECK(sets == brute_metabolizers(l));
}

TEST_CASE("characters vanishing on a metabolizer") {
    LinkingForm l = linking_form(b1(), 2);
    Metabolizer p = metabolizers(l)[0];

    std::vector<Character> chars = characters_vanishing(l, p, 3);
    REQUIRE(chars.size() == 2);
    std::set<Int> seen;
    for (const Character& c : chars) {
        CHECK(c.m == 3);
        CHECK(c.exact_order == 3);
        CHECK(c.surjective);
        REQUIRE(c.values.size() == 1);
        CHECK(mod_floor(c.values[0] * 3, 3) == 0);
        seen.insert(c.values[0]);
    }
    CHECK(seen == std::set<Int>{1, 2});

    std::vector<Character> lifted = characters_vanishing(l, p, 9);
    REQUIRE(lifted.size() == 2);
    for (const Character& c : lifted) {
        CHECK(c.exact_order == 3);
        CHECK_FALSE(c.surjective);
        CHECK(mod_floor(c.values[0] * 3, 9) == 0);
    }

    CHECK(characters_vanishing(l, p, 2).empty());
    CHECK_THROWS_WITH(characters_vanishing(l, p, 6), "character order must be a prime power");
    CHECK(characters_vanishing(l, p, 6, true).size() == 2);
}

TEST_CASE("characters kill the declared subgroup") {
    QMat g5(2, 2);
    g5(0, 1) = Rat(1, 5);
    g5(1, 0) = Rat(1, 5);
    LinkingForm l = handmade({5, 5}, g5, IMat::identity(2));
    Metabolizer p = metabolizer_from_generators(l, IMat{{1, 0}});
    CHECK(p.order == 5);

    std::vector<Character> chars = characters_vanishing(l, p, 5);
    REQUIRE(chars.size() == 4);
    std::set<Int> seen;
    for (const Character& c : chars) {
        CHECK(c.values[0] == 0);  // the first coordinate generates the metabolizer
        CHECK(c.exact_order == 5);
        CHECK(c.surjective);
        seen.insert(c.values[1]);
    }
    CHECK(seen == std::set<Int>{1, 2, 3, 4});
}

TEST_CASE("twisted form on (Z/4)^2 has only the doubling metabolizer") {
    QMat g(2, 2);
    g(0, 0) = Rat(1, 2);
    g(0, 1) = Rat(1, 4);
    g(1, 0) = Rat(1, 4);
    g(1, 1) = Rat(1, 2);
    IMat tau{{0, 3}, {1, 3}};
    LinkingForm l = handmade({4, 4}, g, tau);

    // tau is a cube root of the identity mod 4 and an isometry
    IMat cube = matpow(tau, 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(mod_floor(cube(i, j), Int(4)) == (i == j ? 1 : 0));
    std::vector<Elem> elems = all_elements(l.group.factors);
    for (const Elem& x : elems)
        for (const Elem& y : elems) {
            Elem tx = reduce_elem(tau.apply(x), l.group.factors);
            Elem ty = reduce_elem(tau.apply(y), l.group.factors);
            CHECK(pairing(l, tx, ty) == pairing(l, x, y));
        }

    std::vector<Metabolizer> ms = metabolizers(l);
    REQUIRE(ms.size() == 1);
    CHECK(ms[0].generators == IMat{{2, 0}, {0, 2}});
    CHECK(ms[0].order == 4);
    CHECK(as_element_sets(l, ms) == brute_metabolizers(l));
    CHECK(complementary_pairs(l).empty());

    CHECK_THROWS_WITH(metabolizer_from_generators(l, IMat{{1, 0}}),
                      "declared metabolizer is not t-invariant");
    CHECK(metabolizer_from_generators(l, IMat{{2, 0}, {0, 2}}).order == 4);

    std::vector<Character> twos = characters_vanishing(l, ms[0], 2);
    CHECK(twos.size() == 3);
    std::vector<Character> fours = characters_vanishing(l, ms[0], 4);
    CHECK(fours.size() == 3);
    for (const Character& c : fours) {
        CHECK(c.exact_order == 2);
        CHECK_FALSE(c.surjective);
    }
}

TEST_CASE("product form cover supports order five characters") {
    LinkingForm l = linking_form(phi30_square_knot(), 6);
    CHECK(l.group.order == 625);
    std::vector<Metabolizer> ms = metabolizers(l);
    REQUIRE(!ms.empty());
    for (const Metabolizer& m : ms) CHECK(m.order == 25);

    const Metabolizer& p = ms[0];
    std::vector<Character> chars = characters_vanishing(l, p, 5);

    // independent count: 5-rank of the quotient from a mod 5 row reduction
    std::size_t r = l.group.factors.size();
    IMat lat(p.generators.rows() + r, r);
    lat.set_block(0, 0, p.generators);
    for (std::size_t i = 0; i < r; ++i) lat(p.generators.rows() + i, i) = l.group.factors[i];
    long s = static_cast<long>(r) - rank_mod_p(lat, 5);
    Int expected = 1;
    for (long i = 0; i < s; ++i) expected *= 5;
    CHECK(Int(chars.size()) == expected - 1);
    CHECK(!chars.empty());

    for (const Character& c : chars)
        for (std::size_t i = 0; i < p.generators.rows(); ++i) {
            Int dot = 0;
            for (std::size_t j = 0; j < r; ++j) dot += c.values[j] * p.generators(i, j);
            CHECK(mod_floor(dot, 5) == 0);
        }
}

TEST_CASE("oversized groups refuse enumeration") {
    LinkingForm l = linking_form(terasaka_knot(), 5);
    CHECK(l.group.order == 1679616);
    CHECK_THROWS_WITH(metabolizers(l), "enumeration bound exceeded");

    LinkingForm l8 = linking_form(figure_eight(), 3);
    CHECK_THROWS_WITH(metabolizers(l8, Int(10)), "enumeration bound exceeded");
}

TEST_CASE("level projection folds covers onto their quotients") {
    // same level: identity on the invariant-factor coordinates
    LinkingForm l2 = linking_form(b1(), 2);
    IMat id = level_projection(b1(), 2, 2);
    REQUIRE(id.rows() == l2.group.factors.size());
    CHECK(id == IMat::identity(id.rows()));

    // projection to the trivial cover
    IMat triv = level_projection(b1(), 4, 1);
    CHECK(triv.rows() == 0);

    CHECK_THROWS_WITH(level_projection(b1(), 4, 3),
                      "projection level must divide the cover degree");
    CHECK_THROWS_WITH(level_projection(b1(), 4, 0), "cover degree must be positive");
}

static void check_projection(const SeifertMatrix& a, unsigned k, unsigned ks) {
    LinkingForm lk = linking_form(a, k);
    LinkingForm ls = linking_form(a, ks);
    IMat proj = level_projection(a, k, ks);
    const std::vector<Int>& d = lk.group.factors;
    const std::vector<Int>& dd = ls.group.factors;
    REQUIRE(proj.rows() == dd.size());
    REQUIRE(proj.cols() == d.size());

    // well defined: the source relations map to zero
    for (std::size_t j = 0; j < d.size(); ++j)
        for (std::size_t i = 0; i < dd.size(); ++i)
            CHECK(mod_floor(proj(i, j) * d[j], dd[i]) == 0);

    // equivariant: proj composed with the deck actions in either order
    IMat left = proj * lk.group.t_action;
    IMat right = ls.group.t_action * proj;
    for (std::size_t i = 0; i < dd.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            CHECK(mod_floor(left(i, j) - right(i, j), dd[i]) == 0);

    // surjective: images of the source generators span the target
    std::vector<std::vector<Int>> span;
    for (std::size_t i = 0; i < dd.size(); ++i) {
        std::vector<Int> row(dd.size(), Int(0));
        row[i] = dd[i];
        span.push_back(row);
    }
    for (std::size_t j = 0; j < d.size(); ++j) span.push_back(proj.col(j));
    IMat lat(span.size(), dd.size());
    for (std::size_t i = 0; i < span.size(); ++i)
        for (std::size_t j = 0; j < dd.size(); ++j) lat(i, j) = span[i][j];
    IMat h = hnf_rows(lat);
    Int index = 1;
    for (std::size_t i = 0; i < h.rows(); ++i) index *= h(i, i);
    CHECK(index == 1);
}

TEST_CASE("level projections are equivariant surjections") {
    check_projection(b1(), 4, 2);
    check_projection(figure_eight(), 6, 3);
    check_projection(figure_eight(), 6, 2);
    check_projection(b2(), 4, 2);
}

TEST_CASE("seifert isotropic lattices induce metabolizers") {
    MetabolicResult w = metabolic_witness(b1(), 1);
    REQUIRE(w.basis.has_value());

    LinkingForm l2 = linking_form(b1(), 2);
    Metabolizer p2 = metabolizer_from_seifert_lattice(b1(), l2, *w.basis);
    std::vector<Metabolizer> all = metabolizers(l2);
    REQUIRE(all.size() == 1);
    CHECK(p2.order == all[0].order);
    CHECK(p2.generators == all[0].generators);

    LinkingForm l4 = linking_form(b1(), 4);
    Metabolizer p4 = metabolizer_from_seifert_lattice(b1(), l4, *w.basis);
    CHECK(p4.order * p4.order == Int(l4.group.order));

    // the block form [[0, M], [Y, 0]] is isotropic on its leading half
    SeifertMatrix phi = phi30_square_knot();
    IMat half(8, 16);
    for (std::size_t i = 0; i < 8; ++i) half(i, i) = 1;
    LinkingForm l6 = linking_form(phi, 6);
    Metabolizer p6 = metabolizer_from_seifert_lattice(phi, l6, half);
    CHECK(p6.order * p6.order == Int(l6.group.order));
    bool found = false;
    for (const Metabolizer& q : metabolizers(l6))
        found = found || (q.generators == p6.generators && q.order == p6.order);
    CHECK(found);

    // far beyond enumeration range
    SeifertMatrix ter = terasaka_knot();
    LinkingForm l5 = linking_form(ter, 5);
    Metabolizer p5 = metabolizer_from_seifert_lattice(ter, l5, half);
    CHECK(p5.order == 1296);
    CHECK(p5.order * p5.order == Int(l5.group.order));

    CHECK_THROWS_WITH(metabolizer_from_seifert_lattice(
                          b2(), linking_form(b2(), 2), IMat{{1, 0}}),
                      "lattice is not Seifert-isotropic");
}

TEST_CASE("complementary pair search accepts a custom bound") {
    SeifertMatrix s(IMat{{-1, 1, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}});
    LinkingForm l = linking_form(s, 2);
    CHECK(complementary_pairs(l, Int(100)).size() == complementary_pairs(l).size());
    CHECK_THROWS_WITH(complementary_pairs(l, Int(2)), "enumeration bound exceeded");
}

TEST_CASE("mixed order forms split into primary parts") {
    // diag(1/6, -1/6) on (Z/6)^2: one isotropic line in the two-part,
    // two in the three-part, so exactly two metabolizers of order six
    QMat gram(2, 2);
    gram(0, 0) = Rat(1, 6);
    gram(1, 1) = Rat(-1, 6);
    LinkingForm l = handmade({6, 6}, gram, IMat::identity(2));
    std::vector<Metabolizer> ms = metabolizers(l);
    REQUIRE(ms.size() == 2);
    for (const Metabolizer& m : ms) CHECK(m.order == 6);
    CHECK(as_element_sets(l, ms) == brute_metabolizers(l));

    // a definite three-part has no isotropic line and kills the whole form
    QMat g2(2, 2);
    g2(0, 0) = Rat(1, 6);
    g2(1, 1) = Rat(1, 6);
    LinkingForm l2 = handmade({6, 6}, g2, IMat::identity(2));
    CHECK(metabolizers(l2).empty());
    CHECK(brute_metabolizers(l2).empty());
}

TEST_CASE("doubled twist cover enumerates at level four") {
    LinkingForm l = linking_form(doubled_twist_knot(), 4);
    Int order = 1;
    for (const Int& d : l.group.factors) order *= d;
    CHECK(order == 50625);
    std::vector<Metabolizer> ms = metabolizers(l, Int(60000));
    REQUIRE(ms.size() == 24);
    CHECK(ms[0].generators == IMat{{0, 1, 0, 0}, {0, 0, 1, 0}});
    for (const Metabolizer& m : ms) {
        CHECK(m.order == 225);
        Metabolizer v = metabolizer_from_generators(l, m.generators);
        CHECK(v.order == 225);
    }
}
