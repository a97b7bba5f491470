#include "affadm/admissible.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace affadm;

namespace {

RootSystemPtr rs_of(const char* name) { return build_root_system(CartanKind::parse(name)); }

RatVec coweight(const RootSystem& rs, IntVec x) { return rs.from_coweight_coords(to_rational(x)); }

bool positive_affine(const IntVec& a, std::int64_t level) {
    if (level != 0) return level > 0;
    for (auto x : a)
        if (x < 0) return false;
    return true;
}

// x = t_b w sends a + nc to wa + (n - (wa, b)) c.
bool admissible_by_formula(const RootSystem& rs, int u, const RatVec& b, const WeylElement& w) {
    auto image_ok = [&](IntVec a, std::int64_t n) {
        const IntVec wa = rs.act(w, a);
        const Rational lvl = Rational(n) - inner(rs, to_rational(wa), b);
        REQUIRE(is_integral(lvl));
        return positive_affine(wa, lvl.numerator());
    };
    IntVec neg_theta = rs.theta_coroot;
    for (auto& x : neg_theta) x = -x;
    if (!image_ok(neg_theta, u)) return false;
    for (int i = 0; i < rs.rank; ++i) {
        IntVec e(static_cast<std::size_t>(rs.rank), 0);
        e[static_cast<std::size_t>(i)] = 1;
        if (!image_ok(e, 0)) return false;
    }
    return true;
}

// All admissible t_b w with b in the coweight box of radius r, keyed by (coweight coords, matrix).
std::set<std::pair<IntVec, IntVec>> box_scan(const RootSystem& rs, int u, std::int64_t r, bool& touched) {
    std::set<std::pair<IntVec, IntVec>> out;
    const auto group = rs.enumerate_weyl_group();
    IntVec x(static_cast<std::size_t>(rs.rank), -r);
    touched = false;
    for (;;) {
        const RatVec b = coweight(rs, x);
        for (const auto& w : group)
            if (admissible_by_formula(rs, u, b, w)) {
                out.insert({x, w.matrix});
                for (auto c : x)
                    if (c == r || c == -r) touched = true;
            }
        std::size_t k = 0;
        while (k < x.size() && x[k] == r) x[k++] = -r;
        if (k == x.size()) break;
        ++x[k];
    }
    return out;
}

// lambda + rho-bar in pairing coordinates: u_b^{-1} rho-bar + (k + h^vee) b.
RatVec shifted_weight(const RootSystem& rs, const PiElement& p, const Rational& kappa) {
    const RatVec r = rs.act(rs.inverse(p.u_b), rs.rho_nu);
    RatVec out;
    for (int i = 0; i < rs.rank; ++i) {
        RatVec e(static_cast<std::size_t>(rs.rank), Rational(0));
        e[static_cast<std::size_t>(i)] = 1;
        out.push_back(inner(rs, r, e) + kappa * inner(rs, p.b, e));
    }
    return out;
}

Rational anomaly_oracle(const RootSystem& rs, const RatVec& shifted, const Rational& kappa) {
    // |mu|^2 = mu^T G^{-1} mu for pairing coordinates mu
    const Rational n2 = dot(shifted, mat_vec(rs.gram_inv, shifted));
    return n2 / (Rational(2) * kappa) - rs.rho_norm2 / Rational(2 * rs.dual_coxeter);
}

}  // namespace

TEST_CASE("level validation") {
    auto a1 = rs_of("A1");
    const auto lv = validate_level(*a1, 3);
    CHECK(lv.k == Rational(-4, 3));
    CHECK(lv.shift == Rational(2, 3));
    try {
        validate_level(*rs_of("B2"), 2);
        FAIL("B2, u = 2 accepted");
    } catch (const LevelError& e) {
        CHECK(e.violated() == "gcd(u,r^vee)");
    }
    try {
        validate_level(*rs_of("A2"), 3);
        FAIL("A2, u = 3 accepted");
    } catch (const LevelError& e) {
        CHECK(e.violated() == "gcd(u,h^vee)");
    }
    CHECK_THROWS_AS(validate_level(*a1, 0), LevelError);
}

TEST_CASE("Pi_u at u = 1 is the set of simple affine coroots") {
    auto rs = rs_of("B3");
    const auto pu = pi_u_set(*rs, 1);
    REQUIRE(pu.coroots.size() == 4);
    CHECK(pu.coroots[0].level == 1);
    IntVec neg = rs->theta_coroot;
    for (auto& x : neg) x = -x;
    CHECK(pu.coroots[0].finite == neg);
    for (int i = 1; i <= 3; ++i) CHECK(pu.coroots[static_cast<std::size_t>(i)].level == 0);
}

TEST_CASE("A1, u = 3: admissibility examples") {
    auto rs = rs_of("A1");
    const auto pu = pi_u_set(*rs, 3);
    const RatVec w = rs->fundamental_coweight(1);
    CHECK(is_u_admissible(*rs, identity_element(*rs), pu));
    CHECK_FALSE(is_u_admissible(*rs, translation(*rs, scale(Rational(-3), w)), pu));
    const auto pi3 = AffineWeylElement{rs->kind, scale(Rational(3), w), rs->simple_reflection(0)};
    CHECK(is_u_admissible(*rs, pi3, pu));
    for (std::int64_t n : {0, -1, -2, 1, 2, 3}) CHECK(sigma_u_membership(*rs, 3, scale(Rational(n), w)));
    CHECK_FALSE(sigma_u_membership(*rs, 3, scale(Rational(-3), w)));
    CHECK_FALSE(sigma_u_membership(*rs, 3, scale(Rational(4), w)));
}

TEST_CASE("membership agrees with the admissibility formula on pi_b") {
    for (auto [name, u] : std::vector<std::pair<const char*, int>>{{"A1", 5}, {"A2", 2}, {"B2", 3}, {"G2", 5}, {"A3", 3}}) {
        auto rs = rs_of(name);
        const std::int64_t r = u + 2;
        IntVec x(static_cast<std::size_t>(rs->rank), -r);
        for (;;) {
            const RatVec b = coweight(*rs, x);
            const PiElement p = antidominant_decomposition(*rs, b);
            CHECK(sigma_u_membership(*rs, u, b) == admissible_by_formula(*rs, u, p.element.b, p.element.w));
            std::size_t k = 0;
            while (k < x.size() && x[k] == r) x[k++] = -r;
            if (k == x.size()) break;
            ++x[k];
        }
    }
}

TEST_CASE("enumeration agrees elementwise with an independent box scan") {
    for (auto [name, u] : std::vector<std::pair<const char*, int>>{
             {"A1", 3}, {"A1", 5}, {"A2", 2}, {"A2", 4}, {"B2", 5}, {"G2", 5}, {"G2", 7}, {"A3", 3}}) {
        CAPTURE(name);
        CAPTURE(u);
        auto rs = rs_of(name);
        bool touched = true;
        const auto scan = box_scan(*rs, u, u + 1, touched);
        CHECK_FALSE(touched);
        std::set<std::pair<IntVec, IntVec>> got;
        for (const auto& p : enumerate_sigma_u(*rs, u)) got.insert({coweight_key(*rs, p.element.b), p.element.w.matrix});
        CHECK(got == scan);
        std::uint64_t ul = 1;
        for (int i = 0; i < rs->rank; ++i) ul *= static_cast<std::uint64_t>(u);
        CHECK(scan.size() == ul * static_cast<std::uint64_t>(rs->e));
        CHECK(enumerate_admissible(*rs, u).size() == ul);
    }
}

TEST_CASE("A2, u = 2: twelve members in four classes") {
    auto rs = rs_of("A2");
    CHECK(enumerate_sigma_u(*rs, 2).size() == 12);
    CHECK(enumerate_admissible(*rs, 2).size() == 4);
}

TEST_CASE("G2, u = 5: 25 classes of one member each") {
    auto rs = rs_of("G2");
    const auto classes = enumerate_admissible(*rs, 5);
    CHECK(classes.size() == 25);
    for (const auto& c : classes) CHECK(c.orbit.size() == 1);
}

TEST_CASE("A1, u = 3: classes, weights and anomalies") {
    auto rs = rs_of("A1");
    const auto lv = validate_level(*rs, 3);
    const auto classes = enumerate_admissible(*rs, 3);
    REQUIRE(classes.size() == 3);
    const std::vector<std::vector<IntVec>> orbits{{{-2}, {1}}, {{-1}, {2}}, {{0}, {3}}};
    const std::vector<Rational> weights{Rational(-4, 3), Rational(-2, 3), Rational(0)};
    const std::vector<Rational> anomalies{Rational(-1, 12), Rational(-1, 12), Rational(1, 4)};
    for (std::size_t i = 0; i < 3; ++i) {
        CAPTURE(i);
        std::vector<IntVec> keys;
        for (const auto& m : classes[i].orbit) keys.push_back(coweight_key(*rs, m.b));
        CHECK(keys == orbits[i]);
        CHECK(classes[i].class_id == static_cast<int>(i));
        CHECK(classes[i].weight.finite_part == RatVec{weights[i]});
        CHECK(classes[i].weight.level == lv.k);
        CHECK(classes[i].weight.anomaly == anomalies[i]);
    }
}

TEST_CASE("weights and anomalies match an independent dot-action oracle") {
    for (auto [name, u] : std::vector<std::pair<const char*, int>>{
             {"A1", 7}, {"A2", 5}, {"B2", 5}, {"G2", 7}, {"A3", 3}, {"C3", 5}, {"B3", 7}}) {
        CAPTURE(name);
        auto rs = rs_of(name);
        const auto lv = validate_level(*rs, u);
        std::set<RatVec> seen;
        for (const auto& cl : enumerate_admissible(*rs, u)) {
            CHECK(seen.insert(cl.weight.finite_part).second);
            for (const auto& m : cl.orbit) {
                const RatVec sh = shifted_weight(*rs, m, lv.shift);
                RatVec lam = sh;
                for (auto& x : lam) x -= 1;
                CHECK(lam == cl.weight.finite_part);
                CHECK(anomaly_oracle(*rs, sh, lv.shift) == cl.weight.anomaly);
            }
        }
    }
}

TEST_CASE("dilated alcove") {
    auto rs = rs_of("A2");
    for (const auto& v : dilated_alcove(*rs, 4)) {
        for (int i = 0; i < 2; ++i) CHECK(rs->pair_simple(i, v) <= 0);
        CHECK(Rational(4) + inner(*rs, to_rational(rs->theta_coroot), v) >= 0);
    }
}
