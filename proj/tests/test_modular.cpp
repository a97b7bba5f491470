#include "affadm/modular.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace affadm;

namespace {

constexpr double kPi = std::numbers::pi;

RootSystemPtr rs_of(const char* name) { return build_root_system(CartanKind::parse(name)); }

struct Case {
    RootSystemPtr rs;
    LevelData lv;
    std::vector<AdmissibleClass> classes;
};

Case make(const char* name, int u) {
    auto rs = rs_of(name);
    return {rs, validate_level(*rs, u), enumerate_admissible(*rs, u)};
}

// A1, u = 3 in class order: class id i has representative b = -n varpi with n = 2 - i.
int a1_n(Eigen::Index i) { return 2 - static_cast<int>(i); }

}  // namespace

TEST_CASE("phase powers") {
    const PhasePower a{Rational(1, 3)}, b{Rational(5, 6)};
    CHECK((a * b).exponent == Rational(7, 6));
    CHECK((a * b) == PhasePower{Rational(1, 6)});
    CHECK(a.inverse().exponent == Rational(-1, 3));
    CHECK(PhasePower{Rational(4)}.is_one());
    for (int k = -12; k <= 12; ++k) {
        const PhasePower p{Rational(k, 7)};
        CHECK(std::abs(std::abs(p.value()) - 1.0) < 1e-15);
        CHECK(std::abs(p.value() - std::polar(1.0, 2 * kPi * k / 7.0)) < 1e-14);
    }
    auto rs = rs_of("A1");
    // q^x = e^{-2 pi i h^vee x / u}
    CHECK(q_power(*rs, 3, Rational(1, 2)).exponent == Rational(-1, 3));
}

TEST_CASE("A1, u = 3: Kac-Wakimoto S against the hand formula") {
    auto c = make("A1", 3);
    const auto kw = kw_matrices(*c.rs, c.lv, c.classes);
    REQUIRE(kw.S.rows() == 3);
    for (Eigen::Index i = 0; i < 3; ++i)
        for (Eigen::Index j = 0; j < 3; ++j) {
            const int n = a1_n(i), m = a1_n(j);
            const cplx want = (1.0 / std::sqrt(3.0)) * ((n + m + 1) % 2 == 0 ? 1.0 : -1.0) *
                              std::polar(1.0, -2 * kPi * n * m / 3.0);
            CHECK(std::abs(kw.S(i, j) - want) < 1e-12);
        }
    // vacuum b = 0 is class 2
    CHECK(std::abs(kw.T(2, 2) - std::polar(1.0, 5 * kPi / 8)) < 1e-12);
    CHECK(max_abs(kw.T - Eigen::MatrixXcd(kw.T.diagonal().asDiagonal())) == 0.0);
}

TEST_CASE("Kac-Wakimoto S does not depend on orbit representatives") {
    for (auto [name, u] : std::vector<std::pair<const char*, int>>{{"A1", 3}, {"A2", 4}, {"A3", 3}}) {
        auto c = make(name, u);
        const auto base = kw_matrices(*c.rs, c.lv, c.classes);
        for (std::size_t k = 1; k < static_cast<std::size_t>(c.rs->e); ++k) {
            auto alt = c.classes;
            for (auto& cl : alt) cl.rep = cl.orbit[k];
            const auto other = kw_matrices(*c.rs, c.lv, alt);
            CHECK(max_abs(other.S - base.S) < 1e-12);
            CHECK(max_abs(other.T - base.T) < 1e-12);
        }
    }
}

TEST_CASE("Kac-Wakimoto T against the anomaly") {
    for (auto [name, u] : std::vector<std::pair<const char*, int>>{{"A1", 5}, {"A2", 5}, {"B2", 5}, {"G2", 7}}) {
        auto c = make(name, u);
        const auto kw = kw_matrices(*c.rs, c.lv, c.classes);
        const cplx ref = kw.T(0, 0) / std::polar(1.0, 2 * kPi * to_double(c.classes[0].weight.anomaly));
        for (Eigen::Index i = 0; i < kw.T.rows(); ++i) {
            const double s = to_double(c.classes[static_cast<std::size_t>(i)].weight.anomaly);
            CHECK(std::abs(kw.T(i, i) / std::polar(1.0, 2 * kPi * s) - ref) < 1e-12);
        }
        CHECK(std::abs(std::abs(ref) - 1.0) < 1e-12);
    }
}

TEST_CASE("Kac-Wakimoto S is symmetric and unitary on tested cases") {
    for (auto [name, u] : std::vector<std::pair<const char*, int>>{{"A1", 3}, {"A2", 5}, {"B2", 5}, {"G2", 5}, {"C3", 5}}) {
        auto c = make(name, u);
        const auto kw = kw_matrices(*c.rs, c.lv, c.classes);
        const auto n = kw.S.rows();
        CHECK(max_abs(kw.S - kw.S.transpose()) < 1e-12);
        CHECK(max_abs(kw.S * kw.S.adjoint() - Eigen::MatrixXcd::Identity(n, n)) < 1e-10);
    }
}

TEST_CASE("DAHA S is the zeta power of the form") {
    for (auto [name, u] : std::vector<std::pair<const char*, int>>{{"A1", 3}, {"A2", 2}, {"B2", 5}, {"G2", 5}}) {
        auto c = make(name, u);
        const auto d = daha_specialized_matrices(*c.rs, c.lv, c.classes);
        CHECK(d.construction.at("macdonald_route_exact_mismatch") == 0.0);
        CHECK(d.construction.at("gaussian_mismatch") == 0.0);
        for (std::size_t i = 0; i < c.classes.size(); ++i)
            for (std::size_t j = 0; j < c.classes.size(); ++j) {
                const double x = to_double(inner(*c.rs, c.classes[i].rep.b, c.classes[j].rep.b));
                const cplx want = std::polar(1.0, -2 * kPi * c.rs->dual_coxeter * x / u);
                CHECK(std::abs(d.S(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) - want) < 1e-10);
            }
    }
    auto c = make("A1", 3);
    const auto d = daha_specialized_matrices(*c.rs, c.lv, c.classes);
    for (Eigen::Index j = 0; j < 3; ++j) CHECK(std::abs(d.S(2, j) - 1.0) < 1e-14);
}

TEST_CASE("T relation between the two constructions") {
    for (auto [name, u] : std::vector<std::pair<const char*, int>>{{"A1", 3}, {"A2", 5}, {"B2", 7}, {"G2", 5}, {"A3", 3}}) {
        auto c = make(name, u);
        const auto kw = kw_matrices(*c.rs, c.lv, c.classes);
        const auto d = daha_specialized_matrices(*c.rs, c.lv, c.classes);
        const cplx f = std::polar(1.0, kPi * to_double(c.rs->rho_norm2) / (2.0 * c.rs->dual_coxeter));
        CHECK(max_abs(d.T - f * kw.T) < 1e-12);
    }
}

TEST_CASE("mu bullet specializes to one") {
    auto c = make("A1", 3);
    CHECK(std::abs(mu_bullet_at_specialization(*c.rs, c.lv, antidominant_decomposition(*c.rs, {0})) - 1.0) < 1e-14);
    const auto p3 = antidominant_decomposition(*c.rs, scale(Rational(3), c.rs->fundamental_coweight(1)));
    CHECK(std::abs(mu_bullet_at_specialization(*c.rs, c.lv, p3) - 1.0) < 1e-12);
    for (auto [name, u] : std::vector<std::pair<const char*, int>>{{"A2", 2}, {"A2", 5}, {"B2", 5}, {"G2", 7}, {"C3", 5}}) {
        auto k = make(name, u);
        for (const auto& cl : k.classes)
            for (const auto& m : cl.orbit) CHECK(std::abs(mu_bullet_at_specialization(*k.rs, k.lv, m) - 1.0) < 1e-10);
    }
}

TEST_CASE("intertwiner ratio") {
    auto c = make("A1", 3);
    const auto kw = kw_matrices(*c.rs, c.lv, c.classes);
    const auto d = daha_specialized_matrices(*c.rs, c.lv, c.classes);
    const auto r = intertwiner_comparison(*c.rs, c.lv, c.classes, kw, d);
    CHECK(r.max_deviation < 1e-12);
    CHECK(std::abs(std::abs(r.a) - 1.0 / std::sqrt(3.0)) < 1e-12);
    CHECK(std::abs(r.residuals.at("abs_a_squared_times_u_pow_l") - 1.0) < 1e-12);
    // the literal sign choice eps(u_b) eps(u_b') is off by -1 at (b, b') = (-varpi, -2 varpi)
    bool seen = false;
    for (const auto& e : r.sign_diagnostics)
        if (e.row == 1 && e.col == 0) {
            seen = true;
            CHECK(std::abs(e.ratio + 1.0) < 1e-12);
        }
    CHECK(seen);

    for (auto [name, u] : std::vector<std::pair<const char*, int>>{{"A2", 5}, {"B2", 5}, {"G2", 7}, {"A3", 5}}) {
        auto k = make(name, u);
        const auto rk = intertwiner_comparison(*k.rs, k.lv, k.classes, kw_matrices(*k.rs, k.lv, k.classes),
                                               daha_specialized_matrices(*k.rs, k.lv, k.classes));
        CHECK(rk.max_deviation < 1e-9);
        CHECK(std::abs(rk.residuals.at("abs_a_squared_times_u_pow_l") - 1.0) < 1e-9);
    }
}

TEST_CASE("intertwiner signs are plus or minus one") {
    auto c = make("B2", 5);
    for (const auto& cl : c.classes)
        for (const auto& m : cl.orbit) {
            const int d = intertwiner_sign(*c.rs, m);
            CHECK((d == 1 || d == -1));
        }
}

TEST_CASE("residuals of the identity vanish") {
    ModularMatrices m;
    m.S = Eigen::MatrixXcd::Identity(4, 4);
    m.T = Eigen::MatrixXcd::Identity(4, 4);
    const auto r = sl2z_residuals(m);
    CHECK(r.residuals.at("st3_minus_s2") == 0.0);
    CHECK(r.residuals.at("s4_minus_identity") == 0.0);
}

TEST_CASE("DAHA S squared permutes the index by negation") {
    auto c = make("A1", 3);
    const auto d = daha_specialized_matrices(*c.rs, c.lv, c.classes);
    const auto r = sl2z_residuals(d, 3, 1);
    REQUIRE(r.flags.at("s2_is_permutation"));
    // n -> -n mod 3 on n = 2, 1, 0
    CHECK(r.permutation == std::vector<int>{1, 0, 2});
    for (auto [name, u] : std::vector<std::pair<const char*, int>>{{"A2", 5}, {"B2", 5}, {"G2", 5}}) {
        auto k = make(name, u);
        const auto dk = daha_specialized_matrices(*k.rs, k.lv, k.classes);
        CHECK(sl2z_residuals(dk, u, k.rs->rank).flags.at("s2_is_permutation"));
    }
}

TEST_CASE("scalar-adjusted SL(2,Z) relations") {
    for (auto [name, u] : std::vector<std::pair<const char*, int>>{{"A1", 3}, {"A2", 2}, {"B2", 5}}) {
        auto c = make(name, u);
        const auto kw = kw_matrices(*c.rs, c.lv, c.classes);
        const auto lift = sl2z_lift(kw.S, kw.T);
        CHECK(lift.st3_residual < 1e-10);
        CHECK(lift.s4_residual < 1e-10);
        CHECK(std::abs(std::abs(lift.s_scalar) - 1.0) < 1e-12);
        CHECK(std::abs(std::abs(lift.t_scalar) - 1.0) < 1e-12);
        const auto lit = sl2z_residuals(kw);
        MESSAGE(std::string(name) << " u=" << u << " literal (ST)^3 - S^2: " << lit.residuals.at("st3_minus_s2"));
    }
}

TEST_CASE("e_f projector") {
    auto c = make("A1", 3);
    const auto kw = kw_matrices(*c.rs, c.lv, c.classes);
    const auto ef = ef_projector_and_restriction(*c.rs, c.lv, levi_datum(*c.rs, {1}), c.classes, kw);
    CHECK(ef.rank == 1);
    CHECK(ef.closed_form == 1);
    REQUIRE(ef.restricted.S.rows() == 1);
    CHECK(std::abs(std::abs(ef.restricted.S(0, 0)) - 1.0) < 1e-12);

    const auto none = ef_projector_and_restriction(*c.rs, c.lv, levi_datum(*c.rs, {}), c.classes, kw);
    CHECK(max_abs(none.E - Eigen::MatrixXd::Identity(3, 3)) == 0.0);
    CHECK(max_abs(none.restricted.S - kw.S) < 1e-12);
    CHECK(max_abs(none.restricted.T - kw.T) < 1e-12);

    auto a2 = make("A2", 5);
    for (const ModularMatrices& m : {kw_matrices(*a2.rs, a2.lv, a2.classes), daha_specialized_matrices(*a2.rs, a2.lv, a2.classes)}) {
        for (const std::vector<int>& s : {std::vector<int>{1}, std::vector<int>{1, 2}}) {
            const auto e = ef_projector_and_restriction(*a2.rs, a2.lv, levi_datum(*a2.rs, s), a2.classes, m);
            CHECK(e.rank == count_closed_form(*a2.rs, 5, levi_datum(*a2.rs, s)));
            CHECK(e.commutator_S < 1e-9);
            CHECK(e.commutator_T < 1e-9);
            CHECK(e.projector_defect < 1e-9);
            CHECK(e.restriction_defect < 1e-9);
        }
    }
    const auto e1 = ef_projector_and_restriction(*a2.rs, a2.lv, levi_datum(*a2.rs, {1}), a2.classes,
                                                 kw_matrices(*a2.rs, a2.lv, a2.classes));
    CHECK(e1.rank == 10);
    const auto lift = sl2z_lift(e1.restricted.S, e1.restricted.T);
    CHECK(lift.st3_residual < 1e-8);
    CHECK(lift.s4_residual < 1e-8);
}
