#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "concord/etacalc.hpp"
#include "fixtures.hpp"

using namespace concord;
using namespace concord::fixtures;

namespace {

Character chi_mod(std::vector<Int> values, Int m) {
    Character c;
    c.m = m;
    c.values = std::move(values);
    Int content = m;
    for (const Int& v : c.values) content = gcd_int(content, v);
    c.exact_order = m / content;
    c.surjective = c.exact_order == m;
    return c;
}

const UnitCirclePoint zgen = UnitCirclePoint::transcendental(Rat(1, 100));

SatelliteKnot ribbon_orbit_satellite() {
    SatelliteKnot s(b1());
    s.ribbon = true;
    s.metabolizer_family[2] = IMat{{3}};
    SatelliteKnot::Stage stage(b2());
    stage.axis[2] = {1};
    s.stages.push_back(stage);
    return s;
}

std::multiset<Rat> term_turns(const EtaExpression& e) {
    std::multiset<Rat> out;
    for (const SignatureTerm& t : e.terms) out.insert(t.turn);
    return out;
}

}  // namespace

TEST_CASE("cover corrections sum signatures at roots of unity") {
    CHECK(cover_correction(b2(), 5) == 8);   // 2 at each of 1/5..4/5, 0 at 1
    CHECK(cover_correction(b1(), 4) == 0);   // fourth roots miss the jump set
    CHECK(cover_correction(b3(), 7) == 8);   // arcs cover j = 1, 3, 4, 6
    CHECK(cover_correction(b2(), 6) == 8);   // 1 + 2 + 2 + 2 + 1, averaged endpoints
    CHECK(cover_correction(b2(), 1) == 0);
    CHECK(cover_correction(b1(), 1) == 0);
    CHECK(cover_correction(unknot(), 5) == 0);
    CHECK_THROWS_WITH(cover_correction(b2(), 0), "cover degree must be positive");
}

TEST_CASE("metabolic knots have zero correction away from the jump set") {
    for (unsigned k : {2u, 3u, 4u, 5u, 7u}) {
        CHECK(cover_correction(b1(), k) == 0);
        CHECK(cover_correction(stabilized_unknot(), k) == 0);
    }
}

TEST_CASE("satellite eta with a vanishing ribbon base") {
    SatelliteKnot s = ribbon_orbit_satellite();
    Character chi = chi_mod({1}, 3);
    EtaExpression e = satellite_eta(s, 2, chi, zgen);

    CHECK(e.base_known);
    CHECK(e.base.exact);
    CHECK(e.base.lo == 0);
    REQUIRE(e.assumptions.size() == 1);
    CHECK(e.assumptions[0] ==
          "base eta vanishes: orbit declared ribbon and the character vanishes on the declared "
          "metabolizer");

    REQUIRE(e.terms.size() == 2);
    CHECK(term_turns(e) == std::multiset<Rat>{Rat(1, 3), Rat(2, 3)});
    for (const SignatureTerm& t : e.terms) CHECK(t.value == 2);
    RatInterval v = eta_value(e);
    CHECK(v.exact);
    CHECK(v.lo == 4);
    CHECK(correction_sum(e) == 4);
}

TEST_CASE("corrections are invariant under shifting the axis lift") {
    SatelliteKnot s = ribbon_orbit_satellite();
    SatelliteKnot shifted = s;
    shifted.stages[0].axis[2] = {8};  // the deck image of the original lift
    Character chi = chi_mod({1}, 3);
    EtaExpression a = satellite_eta(s, 2, chi, zgen);
    EtaExpression b = satellite_eta(shifted, 2, chi, zgen);
    CHECK(term_turns(a) == term_turns(b));
    CHECK(eta_value(a).lo == eta_value(b).lo);
}

TEST_CASE("character missing the metabolizer leaves the base unknown") {
    SatelliteKnot s = ribbon_orbit_satellite();
    Character chi = chi_mod({1}, 9);  // chi(3) = 3 mod 9, nonzero
    EtaExpression e = satellite_eta(s, 2, chi, zgen);
    CHECK_FALSE(e.base_known);
    REQUIRE(e.assumptions.size() == 1);
    CHECK(e.assumptions[0] ==
          "base eta unknown: character does not vanish on the declared metabolizer");
    CHECK(correction_sum(e) == 0);  // turns 1/9 and 8/9 sit outside the arc
    CHECK_THROWS_WITH(eta_value(e), "eta value carries an unresolved base");
}

TEST_CASE("missing declarations are surfaced") {
    SatelliteKnot s = ribbon_orbit_satellite();

    // no declared metabolizer at level 4
    LinkingForm l4 = linking_form(b1(), 4);
    std::size_t r = l4.group.factors.size();
    s.stages[0].axis[4] = std::vector<Int>(r, 0);
    Character triv;
    triv.m = 1;
    triv.values = std::vector<Int>(r, 0);
    EtaExpression e4 = satellite_eta(s, 4, triv, zgen);
    CHECK_FALSE(e4.base_known);
    CHECK(e4.assumptions[0] == "base eta unknown: no declared metabolizer at this level");

    // orbit without any vanishing declaration
    SatelliteKnot plain(b2());
    SatelliteKnot::Stage stage(b2());
    stage.axis[2] = {1};
    plain.stages.push_back(stage);
    EtaExpression e2 = satellite_eta(plain, 2, chi_mod({1}, 3), zgen);
    CHECK_FALSE(e2.base_known);
    CHECK(e2.assumptions[0] == "base eta unknown: orbit carries no vanishing declaration");
    CHECK(correction_sum(e2) == 4);

    // axis data absent at the requested level
    SatelliteKnot missing = ribbon_orbit_satellite();
    missing.stages[0].axis.clear();
    missing.stages[0].axis[3] = {0};
    CHECK_THROWS_WITH(satellite_eta(missing, 2, chi_mod({1}, 3), zgen),
                      "axis lift data missing at the requested level");
}

TEST_CASE("trivial characters fall outside the admissible class") {
    SatelliteKnot s = ribbon_orbit_satellite();
    Character triv = chi_mod({0}, 1);
    EtaExpression e = satellite_eta(s, 2, triv, zgen);
    CHECK(!e.base_known);
    REQUIRE(e.assumptions.size() == 1);
    CHECK(e.assumptions[0] == "base eta unknown: character is outside the admissible class");
    CHECK(correction_sum(e) == 0);
    for (const SignatureTerm& t : e.terms) {
        CHECK(t.turn == 0);
        CHECK(t.value == 0);
    }
    CHECK_THROWS(eta_value(e));
}

TEST_CASE("exact circle parameters fall outside the admissible class") {
    SatelliteKnot s = ribbon_orbit_satellite();
    Character chi = chi_mod({1}, 3);
    EtaExpression e = satellite_eta(s, 2, chi, UnitCirclePoint::exact_turn(Rat(1, 7)));
    CHECK(!e.base_known);
    REQUIRE(e.assumptions.size() == 1);
    CHECK(e.assumptions[0] == "base eta unknown: character is outside the admissible class");
}

TEST_CASE("a declared bound resolves an otherwise unknown base") {
    SatelliteKnot s = ribbon_orbit_satellite();
    s.base_bound = Rat(3);
    Character chi9 = chi_mod({1}, 9);
    EtaExpression e = satellite_eta(s, 2, chi9, zgen);
    CHECK(e.base_known);
    CHECK(e.base.lo == -3);
    CHECK(e.base.hi == 3);
    CHECK(!e.base.exact);
    REQUIRE(e.assumptions.size() == 1);
    CHECK(e.assumptions[0] == "base eta bounded: declared bound on the orbit eta");
    RatInterval v = eta_value(e);
    CHECK(v.lo == -3 + correction_sum(e));
    CHECK(v.hi == 3 + correction_sum(e));

    Character chi3 = chi_mod({1}, 3);
    EtaExpression ev = satellite_eta(s, 2, chi3, zgen);
    CHECK(ev.base.exact);
    CHECK(ev.base.lo == 0);
    CHECK(ev.assumptions[0] ==
          "base eta vanishes: orbit declared ribbon and the character vanishes on the declared "
          "metabolizer");

    SatelliteKnot plain(b2());
    plain.base_bound = Rat(1, 2);
    EtaExpression ep = satellite_eta(plain, 2, chi_mod({1}, 3), zgen);
    CHECK(ep.base_known);
    CHECK(ep.base.lo == Rat(-1, 2));
    CHECK(ep.base.hi == Rat(1, 2));

    s.base_bound = Rat(0);
    EtaExpression ez = satellite_eta(s, 2, chi9, zgen);
    CHECK(ez.base.exact);
    CHECK(ez.base.lo == 0);
    CHECK(ez.base.hi == 0);

    s.base_bound = Rat(-1);
    CHECK_THROWS(satellite_eta(s, 2, chi9, zgen));
}

TEST_CASE("stage copies scale the correction terms") {
    SatelliteKnot s = ribbon_orbit_satellite();
    s.stages[0].copies = -2;
    Character chi = chi_mod({1}, 3);
    EtaExpression e = satellite_eta(s, 2, chi, zgen);
    REQUIRE(e.terms.size() == 2);
    for (const SignatureTerm& t : e.terms) {
        CHECK(t.copies == -2);
        CHECK(t.value == -4);
    }
    RatInterval v = eta_value(e);
    CHECK(v.exact);
    CHECK(v.lo == -8);
}

TEST_CASE("stage order does not change the expression") {
    SatelliteKnot s = ribbon_orbit_satellite();
    SatelliteKnot::Stage second(b3());
    second.axis[2] = {2};
    s.stages.push_back(second);

    SatelliteKnot swapped = s;
    std::swap(swapped.stages[0], swapped.stages[1]);

    Character chi = chi_mod({1}, 3);
    EtaExpression a = satellite_eta(s, 2, chi, zgen);
    EtaExpression b = satellite_eta(swapped, 2, chi, zgen);
    CHECK(correction_sum(a) == correction_sum(b));
    CHECK(term_turns(a) == term_turns(b));
    CHECK(eta_value(a).lo == eta_value(b).lo);
}

TEST_CASE("abelian L2 values are signature integrals") {
    RatInterval v2 = l2_abelian(b2());
    CHECK(v2.exact);
    CHECK(v2.lo == Rat(4, 3));
    RatInterval v1 = l2_abelian(b1());
    CHECK(v1.exact);
    CHECK(v1.lo == 0);
}

TEST_CASE("satellite L2 assembly") {
    EtaExpression unchanged = l2_satellite(Rat(0), {{b2(), false}});
    CHECK(unchanged.base_known);
    CHECK(unchanged.base.lo == 0);
    CHECK(unchanged.assumptions.empty());

    EtaExpression bumped = l2_satellite(Rat(0), {{b2(), true}});
    CHECK(eta_value(bumped).lo == Rat(4, 3));
    CHECK(bumped.assumptions.empty());

    EtaExpression zero = l2_satellite(Rat(0), {{b1(), true}});
    CHECK(eta_value(zero).lo == 0);

    EtaExpression shiftedBase = l2_satellite(Rat(-2), {{b2(), true}});
    CHECK(eta_value(shiftedBase).lo == Rat(-2, 3));

    EtaExpression iterated = l2_satellite(Rat(0), {{b1(), true}, {b2(), true}});
    CHECK(eta_value(iterated).lo == Rat(4, 3));
    REQUIRE(iterated.assumptions.size() == 1);
    CHECK(iterated.assumptions[0] == "iterated-thml2forsat");

    EtaExpression unknown = l2_satellite(std::nullopt, {{b2(), true}});
    CHECK_FALSE(unknown.base_known);
    CHECK(unknown.assumptions[0] == "base eta unknown: no declared value");
    CHECK_THROWS_WITH(eta_value(unknown), "eta value carries an unresolved base");
}
