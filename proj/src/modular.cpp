#include "affadm/modular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

namespace affadm {

namespace {

constexpr double kPi = std::numbers::pi;

Rational pow_int(std::int64_t base, int exp) {
    Rational r(1);
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

cplx PhasePower::value() const {
    Rational r = frac(exponent);
    if (r > Rational(1, 2)) r -= 1;
    return std::polar(1.0, 2.0 * kPi * to_double(r));
}

PhasePower q_power(const RootSystem& rs, int u, const Rational& x) {
    return PhasePower{-Rational(rs.dual_coxeter, u) * x};
}

double scaled_tolerance(double tol, Eigen::Index n) { return tol * std::max(1.0, static_cast<double>(n) / 100.0); }

ModularMatrices kw_matrices(const RootSystem& rs, const LevelData& lv, const std::vector<AdmissibleClass>& classes) {
    const auto n = static_cast<Eigen::Index>(classes.size());
    const int u = lv.u, hv = rs.dual_coxeter;
    ModularMatrices m;
    m.flavor = Flavor::KW;
    // (alpha, rho-bar) for the root alpha with coroot a: ht(a) * 2/|a|^2. The lattice index is taken
    // against the long-root lattice, |P/(u h^vee) nu(Q^vee)| = (u h^vee)^l e prod_i |alpha_i^vee|^2/2.
    double sines = 1.0;
    for (const auto& co : rs.positive_coroots) {
        const Rational x = Rational(rs.height(co)) * 2 / rs.norm2(to_rational(co));
        const Rational arg = x * u / hv;
        if (is_integral(arg)) throw std::logic_error("vanishing sine factor");
        sines *= 2.0 * std::sin(kPi * to_double(arg));
    }
    Rational index = pow_int(static_cast<std::int64_t>(u) * hv, rs.rank) * rs.e;
    for (int i = 0; i < rs.rank; ++i) index *= rs.gram[i][i] / 2;
    m.s_scale = sines / std::sqrt(to_double(index));
    m.S.resize(n, n);
    m.T = Eigen::MatrixXcd::Zero(n, n);
    m.s_phase.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    m.t_phase.resize(static_cast<std::size_t>(n));
    const Rational hu(hv, u);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& pi = classes[static_cast<std::size_t>(i)].rep;
        m.index.push_back(classes[static_cast<std::size_t>(i)].class_id);
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto& pj = classes[static_cast<std::size_t>(j)].rep;
            Rational r = -(hu * inner(rs, pi.b, pj.b) + inner(rs, add(pi.b, pj.b), rs.rho_nu));
            if (pi.u_b.sign() * pj.u_b.sign() < 0) r += Rational(1, 2);
            m.s_phase[i][j] = r;
            m.S(i, j) = m.s_scale * PhasePower{r}.value();
        }
        RatVec x = add(rs.act(rs.inverse(pi.u_b), rs.rho_nu), scale(hu, pi.b));
        Rational t = Rational(u, 2 * hv) * (rs.norm2(x) - rs.rho_norm2 / (2 * u));
        m.t_phase[i] = t;
        m.T(i, i) = PhasePower{t}.value();
    }
    return m;
}

ModularMatrices daha_specialized_matrices(const RootSystem& rs, const LevelData& lv,
                                          const std::vector<AdmissibleClass>& classes) {
    const auto n = static_cast<Eigen::Index>(classes.size());
    const int u = lv.u;
    const Rational kappa(-u, rs.dual_coxeter);
    const RatVec rho_k = scale(kappa, rs.rho_nu);
    ModularMatrices m;
    m.flavor = Flavor::DAHA;
    m.S.resize(n, n);
    m.T = Eigen::MatrixXcd::Zero(n, n);
    m.s_phase.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    m.t_phase.resize(static_cast<std::size_t>(n));

    std::vector<RatVec> sharp;
    std::vector<cplx> mu;
    for (const auto& c : classes) {
        sharp.push_back(sub(c.rep.b, rs.act(rs.inverse(c.rep.u_b), rho_k)));
        mu.push_back(mu_bullet_at_specialization(rs, lv, c.rep));
    }
    double route = 0.0, exact_route = 0.0, gauss = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& pi = classes[static_cast<std::size_t>(i)].rep;
        m.index.push_back(classes[static_cast<std::size_t>(i)].class_id);
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto& pj = classes[static_cast<std::size_t>(j)].rep;
            PhasePower direct = q_power(rs, u, inner(rs, pi.b, pj.b));
            Rational x = -inner(rs, rho_k, pi.b_minus) + inner(rs, sharp[static_cast<std::size_t>(j)], pi.b);
            PhasePower macdonald = q_power(rs, u, x);
            if (!(macdonald == direct)) exact_route = 1.0;
            cplx entry = macdonald.value() * mu[static_cast<std::size_t>(j)];
            route = std::max(route, std::abs(entry - direct.value()));
            m.s_phase[i][j] = direct.exponent;
            m.S(i, j) = entry;
        }
        const RatVec& bs = sharp[static_cast<std::size_t>(i)];
        PhasePower t = q_power(rs, u, -rs.norm2(bs) / 2);
        // Gaussian expanded separately: |b|^2 - 2 kappa (b, u_b^{-1} rho) + kappa^2 |rho|^2
        Rational g = rs.norm2(pi.b) - 2 * kappa * inner(rs, pi.b, rs.act(rs.inverse(pi.u_b), rs.rho_nu)) +
                     kappa * kappa * rs.rho_norm2;
        PhasePower gamma = q_power(rs, u, g / 2);
        if (!(gamma.inverse() == t)) gauss = 1.0;
        m.t_phase[i] = t.exponent;
        m.T(i, i) = t.value();
    }
    m.construction["macdonald_route_deviation"] = route;
    m.construction["macdonald_route_exact_mismatch"] = exact_route;
    m.construction["gaussian_mismatch"] = gauss;
    return m;
}

cplx mu_bullet_at_specialization(const RootSystem& rs, const LevelData& lv, const PiElement& p) {
    const int u = lv.u;
    const Rational kappa(-u, rs.dual_coxeter);
    cplx prod(1.0, 0.0);
    for (const auto& a : inversion_set(rs, p.element)) {
        const Rational nu = rs.norm2(to_rational(a.finite)) / 2;
        const Rational ht(rs.height(a.finite));
        const Rational qn = nu * a.level;                 // q_alpha^n
        const Rational th = nu * kappa / 2;               // t_alpha^{1/2}
        const Rational x = -kappa * ht;                   // (alpha, -rho_kappa)
        PhasePower n1 = q_power(rs, u, -th), n2 = q_power(rs, u, qn + th + x);
        PhasePower d1 = q_power(rs, u, th), d2 = q_power(rs, u, qn - th + x);
        if (d1 == d2)
            throw MuBulletError("vanishing denominator at coroot level " + std::to_string(a.level), a);
        prod *= (n1.value() - n2.value()) / (d1.value() - d2.value());
    }
    return prod;
}

int intertwiner_sign(const RootSystem& rs, const PiElement& p) {
    Rational two = 2 * inner(rs, p.b, rs.rho_nu);
    if (!is_integral(two)) throw std::logic_error("2(b, rho) is not an integer");
    int s = (two.numerator() % 2 == 0) ? 1 : -1;
    return s * p.u_b.sign();
}

ComparisonReport intertwiner_comparison(const RootSystem& rs, const LevelData& lv,
                                        const std::vector<AdmissibleClass>& classes, const ModularMatrices& kw,
                                        const ModularMatrices& daha) {
    if (kw.index != daha.index) throw std::invalid_argument("matrices use different index orders");
    const auto n = kw.S.rows();
    std::vector<int> D, eps;
    for (int id : kw.index) {
        const auto& p = classes.at(static_cast<std::size_t>(id)).rep;
        D.push_back(intertwiner_sign(rs, p));
        eps.push_back(p.u_b.sign());
    }
    Eigen::MatrixXcd R(n, n), L(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            R(i, j) = kw.S(i, j) / (static_cast<double>(D[i] * D[j]) * daha.S(i, j));
            L(i, j) = kw.S(i, j) / (static_cast<double>(eps[i] * eps[j]) * daha.S(i, j));
        }
    ComparisonReport rep;
    rep.a = R.mean();
    rep.max_deviation = max_abs((R.array() - rep.a).matrix());
    const double ul = std::pow(static_cast<double>(lv.u), rs.rank);
    const double a2 = std::norm(rep.a);
    rep.residuals["ratio_max_deviation"] = rep.max_deviation;
    rep.residuals["abs_a_squared"] = a2;
    rep.residuals["abs_a_squared_times_u_pow_l"] = a2 * ul;
    rep.residuals["abs_a_squared_over_u_pow_l"] = a2 / ul;
    rep.residuals["literal_max_deviation"] = max_abs((L.array() - rep.a).matrix());
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            cplx r = L(i, j) / rep.a;
            if (std::abs(r - 1.0) > 1e-9)
                rep.sign_diagnostics.push_back({kw.index[i], kw.index[j], r});
        }
    const cplx c = std::polar(1.0, kPi * to_double(rs.rho_norm2) / (2.0 * rs.dual_coxeter));
    rep.residuals["t_relation"] = max_abs(daha.T - c * kw.T);
    rep.flags["ratio_constant"] = rep.max_deviation <= 1e-9;
    rep.flags["abs_a_squared_times_u_pow_l_is_one"] = std::abs(a2 * ul - 1.0) <= 1e-9;
    rep.flags["abs_a_squared_equals_u_pow_l"] = std::abs(a2 / ul - 1.0) <= 1e-9;
    rep.flags["literal_ratio_constant"] = rep.sign_diagnostics.empty();
    return rep;
}

ComparisonReport sl2z_residuals(const ModularMatrices& m, int u, int rank) {
    ComparisonReport rep;
    const auto n = m.S.rows();
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd S2 = m.S * m.S;
    const Eigen::MatrixXcd ST = m.S * m.T;
    rep.residuals["st3_minus_s2"] = max_abs(ST * ST * ST - S2);
    rep.residuals["s4_minus_identity"] = max_abs(S2 * S2 - I);

    Eigen::MatrixXcd N = m.S;
    if (m.flavor == Flavor::DAHA) {
        N /= std::pow(static_cast<double>(u), rank / 2.0);
        const Eigen::MatrixXcd N2 = N * N;
        const Eigen::MatrixXcd NT = N * m.T;
        rep.residuals["normalized_st3_minus_s2"] = max_abs(NT * NT * NT - N2);
        rep.residuals["normalized_s4_minus_identity"] = max_abs(N2 * N2 - I);
    }
    const Eigen::MatrixXcd P = N * N;
    bool perm = true, signed_perm = true;
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    for (Eigen::Index j = 0; j < n && signed_perm; ++j) {
        int hits = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const cplx z = P(i, j);
            if (std::abs(z) < 1e-8) continue;
            if (std::abs(std::abs(z) - 1.0) > 1e-8 || std::abs(z.imag()) > 1e-8) {
                signed_perm = false;
                break;
            }
            if (z.real() < 0) perm = false;
            image[static_cast<std::size_t>(j)] = static_cast<int>(i);
            ++hits;
        }
        if (hits != 1) signed_perm = false;
    }
    rep.flags["s2_is_signed_permutation"] = signed_perm;
    rep.flags["s2_is_permutation"] = signed_perm && perm;
    if (signed_perm) rep.permutation = image;
    return rep;
}

LiftReport sl2z_lift(const Eigen::MatrixXcd& S, const Eigen::MatrixXcd& T) {
    // (sS cT)^3 = s^3 c^3 (ST)^3 and (sS)^2 = s^2 S^2, so the products are formed once.
    const auto n = S.rows();
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd S2 = S * S;
    const Eigen::MatrixXcd S4 = S2 * S2;
    const Eigen::MatrixXcd ST = S * T;
    const Eigen::MatrixXcd M3 = ST * ST * ST;
    const cplx lam = S4.trace() / static_cast<double>(n);
    LiftReport best;
    best.s4_proportionality = max_abs(S4 - lam * I) / std::abs(lam);
    best.st3_residual = std::numeric_limits<double>::infinity();
    const cplx s0 = std::pow(lam, -0.25);
    const cplx i4(0.0, 1.0);
    for (int k = 0; k < 4; ++k) {
        const cplx s = s0 * std::pow(i4, k);
        const cplx s2 = s * s, s3 = s2 * s;
        const cplx c3 = (M3.conjugate().cwiseProduct(S2)).sum() * s2 / (s3 * M3.squaredNorm());
        for (int r = 0; r < 3; ++r) {
            const cplx c = std::pow(c3, 1.0 / 3.0) * std::polar(1.0, 2.0 * kPi * r / 3.0);
            const double res = max_abs(Eigen::MatrixXcd((c * c * c * s3) * M3 - s2 * S2));
            if (res < best.st3_residual) {
                best.st3_residual = res;
                best.s_scalar = s;
                best.t_scalar = c;
                best.s4_residual = max_abs(Eigen::MatrixXcd((s2 * s2) * S4 - I));
            }
        }
    }
    return best;
}

EfRestriction ef_projector_and_restriction(const RootSystem& rs, const LevelData& lv, const LeviDatum& levi,
                                           const std::vector<AdmissibleClass>& classes, const ModularMatrices& m) {
    const ParabolicGroup g = parabolic_group(rs, levi);
    const SuQuotient q(rs, lv.u);
    const ClassIndex idx = class_index(rs, q, classes);
    const auto n = m.S.rows();
    std::vector<Eigen::Index> pos(classes.size(), -1);
    for (Eigen::Index i = 0; i < n; ++i) pos[static_cast<std::size_t>(m.index[i])] = i;
    std::vector<int> D(classes.size(), 1);
    if (m.flavor == Flavor::KW)
        for (const auto& c : classes) D[static_cast<std::size_t>(c.class_id)] = intertwiner_sign(rs, c.rep);

    EfRestriction out;
    out.E = Eigen::MatrixXd::Zero(n, n);
    std::vector<std::set<int>> orbit(classes.size());
    for (const auto& w : g.elements)
        for (const auto& c : classes) {
            const int from = c.class_id;
            const int to = act_on_class(rs, q, idx, classes, w, from);
            orbit[static_cast<std::size_t>(from)].insert(to);
            out.E(pos[static_cast<std::size_t>(to)], pos[static_cast<std::size_t>(from)]) +=
                w.sign() * D[static_cast<std::size_t>(from)] * D[static_cast<std::size_t>(to)];
        }
    const double order = static_cast<double>(g.elements.size());
    out.projector_defect = max_abs(Eigen::MatrixXd(out.E * out.E - order * out.E));
    const Eigen::MatrixXcd Ec = out.E.cast<cplx>();
    out.commutator_S = max_abs(Eigen::MatrixXcd(m.S * Ec - Ec * m.S));
    out.commutator_T = max_abs(Eigen::MatrixXcd(m.T * Ec - Ec * m.T));
    out.rank = std::llround(out.E.trace() / order);
    out.closed_form = count_closed_form(rs, lv.u, levi);

    std::set<int> seen;
    for (Eigen::Index i = 0; i < n; ++i) {
        const int id = m.index[i];
        const int rep = *orbit[static_cast<std::size_t>(id)].begin();
        if (!seen.insert(rep).second) continue;
        if (out.E.col(pos[static_cast<std::size_t>(rep)]).cwiseAbs().maxCoeff() > 0.5) out.basis.push_back(rep);
    }
    std::sort(out.basis.begin(), out.basis.end());
    if (out.rank != out.closed_form || static_cast<std::int64_t>(out.basis.size()) != out.rank)
        throw std::logic_error("rank of e_f (" + std::to_string(out.rank) + ", basis " +
                               std::to_string(out.basis.size()) + ") differs from the closed-form count " +
                               std::to_string(out.closed_form));

    const auto k = static_cast<Eigen::Index>(out.basis.size());
    Eigen::MatrixXcd B(n, k);
    for (Eigen::Index c = 0; c < k; ++c) B.col(c) = Ec.col(pos[static_cast<std::size_t>(out.basis[c])]);
    const Eigen::MatrixXcd G = B.adjoint() * B;
    const Eigen::MatrixXcd Sf = G.ldlt().solve(B.adjoint() * m.S * B);
    const Eigen::MatrixXcd Tf = G.ldlt().solve(B.adjoint() * m.T * B);
    out.restriction_defect = std::max(max_abs(Eigen::MatrixXcd(m.S * B - B * Sf)), max_abs(Eigen::MatrixXcd(m.T * B - B * Tf)));
    out.restricted.flavor = m.flavor;
    out.restricted.index = out.basis;
    out.restricted.S = Sf;
    out.restricted.T = Tf;
    out.restricted.s_scale = m.s_scale;
    return out;
}

}  // namespace affadm
