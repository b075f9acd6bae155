#include "concord/etacalc.hpp"

namespace concord {

namespace {

std::vector<Int> reduce_coords(std::vector<Int> v, const std::vector<Int>& d) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod_floor(v[i], d[i]);
    return v;
}

RatInterval interval_sum(const RatInterval& a, const RatInterval& b) {
    return RatInterval{a.lo + b.lo, a.hi + b.hi, a.exact && b.exact};
}

}  // namespace

Rat correction_sum(const EtaExpression& e) {
    Rat s = 0;
    for (const SignatureTerm& t : e.terms) s += t.value;
    return s;
}

RatInterval eta_value(const EtaExpression& e) {
    if (!e.base_known) fail("eta value carries an unresolved base");
    Rat c = correction_sum(e);
    return RatInterval{e.base.lo + c, e.base.hi + c, e.base.exact};
}

int cover_correction(const SeifertMatrix& a, unsigned k) {
    if (k == 0) fail("cover degree must be positive");
    int total = 0;
    for (unsigned j = 1; j <= k; ++j)
        total += signature_at(a, UnitCirclePoint::exact_turn(Rat(j, k)));
    return total;
}

EtaExpression satellite_eta(const SatelliteKnot& s, unsigned k, const Character& chi,
                            const UnitCirclePoint& z) {
    return satellite_eta(s, linking_form(s.orbit, k), chi, z);
}

EtaExpression satellite_eta(const SatelliteKnot& s, const LinkingForm& l, const Character& chi,
                            const UnitCirclePoint& z) {
    unsigned k = l.group.k;
    const std::vector<Int>& d = l.group.factors;
    if (chi.values.size() != d.size()) fail("coordinate length mismatch");
    for (std::size_t i = 0; i < d.size(); ++i)
        if (mod_floor(chi.values[i] * d[i], chi.m) != 0)
            fail("character is not defined on the cover group");

    EtaExpression e;

    std::string reason;
    bool resolved = false;
    if (s.ribbon || s.slice) {
        auto fam = s.metabolizer_family.find(k);
        if (fam == s.metabolizer_family.end()) {
            reason = "no declared metabolizer at this level";
        } else {
            Metabolizer p = metabolizer_from_generators(l, fam->second);
            bool kills = true;
            for (std::size_t i = 0; i < p.generators.rows(); ++i)
                kills = kills && character_turn(chi, p.generators.row(i)) == 0;
            if (!kills) {
                reason = "character does not vanish on the declared metabolizer";
            } else if (!classify(build_rep(k, z, l.group, chi)).in_pk_irr) {
                reason = "character is outside the admissible class";
            } else {
                resolved = true;
                e.base = RatInterval{0, 0, true};
                e.assumptions.push_back(
                    std::string("base eta vanishes: orbit declared ") +
                    (s.ribbon ? "ribbon" : "slice") +
                    " and the character vanishes on the declared metabolizer");
            }
        }
    } else {
        reason = "orbit carries no vanishing declaration";
    }
    if (!resolved) {
        if (s.base_bound) {
            if (*s.base_bound < 0) fail("declared eta bound must be nonnegative");
            e.base = RatInterval{-*s.base_bound, *s.base_bound, *s.base_bound == 0};
            e.assumptions.push_back("base eta bounded: declared bound on the orbit eta");
        } else {
            e.base_known = false;
            e.assumptions.push_back("base eta unknown: " + reason);
        }
    }

    for (std::size_t si = 0; si < s.stages.size(); ++si) {
        const SatelliteKnot::Stage& stage = s.stages[si];
        auto axis = stage.axis.find(k);
        if (axis == stage.axis.end()) fail("axis lift data missing at the requested level");
        if (axis->second.size() != d.size()) fail("coordinate length mismatch");
        std::map<Rat, int> memo;
        std::vector<Int> lift = reduce_coords(axis->second, d);
        for (unsigned i = 0; i < k; ++i) {
            Rat turn = character_turn(chi, lift);
            auto hit = memo.find(turn);
            if (hit == memo.end())
                hit = memo.emplace(turn, signature_at(stage.companion,
                                                      UnitCirclePoint::exact_turn(turn)))
                          .first;
            int value = static_cast<int>(stage.copies) * hit->second;
            e.terms.push_back(SignatureTerm{stage.companion, stage.copies, turn, value});
            lift = reduce_coords(l.group.t_action.apply(lift), d);
        }
    }
    return e;
}

RatInterval l2_abelian(const SeifertMatrix& a) { return signature_integral(a); }

EtaExpression l2_satellite(const std::optional<Rat>& base_value,
                           const std::vector<std::pair<SeifertMatrix, bool>>& companions) {
    EtaExpression e;
    if (base_value) {
        e.base = RatInterval{*base_value, *base_value, true};
    } else {
        e.base_known = false;
        e.assumptions.push_back("base eta unknown: no declared value");
    }
    for (const auto& [companion, nonvanishing] : companions) {
        if (!nonvanishing) continue;
        e.base = interval_sum(e.base, l2_abelian(companion));
    }
    if (companions.size() > 1)
        e.assumptions.push_back("iterated-thml2forsat");
    return e;
}

}  // namespace concord
