#include "affadm/verify.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace affadm {

namespace {

constexpr std::uint32_t kSeed = 20190611u;

using Outcome = std::pair<bool, std::string>;

class Collector {
public:
    explicit Collector(std::vector<CheckResult>& out) : out_(out) {}

    void set_module(std::string m) { module_ = std::move(m); }

    void record(const std::string& name, CheckStatus s, const std::string& detail) {
        out_.push_back({module_, name, s, detail});
    }

    // Runs body; a GateExceeded becomes a skip, any other exception a failure.
    void check(const std::string& name, const std::function<Outcome()>& body) {
        try {
            auto [ok, detail] = body();
            record(name, ok ? CheckStatus::Pass : CheckStatus::Fail, detail);
        } catch (const GateExceeded& e) {
            record(name, CheckStatus::Skip, e.what());
        } catch (const std::exception& e) {
            record(name, CheckStatus::Fail, std::string("exception: ") + e.what());
        }
    }

private:
    std::vector<CheckResult>& out_;
    std::string module_;
};

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << x;
    return s.str();
}

std::string vec_str(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

RatVec random_rational(std::mt19937& gen, int n) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    RatVec v;
    for (int i = 0; i < n; ++i) v.emplace_back(num(gen), den(gen));
    return v;
}

AffineWeylElement random_affine(const RootSystem& rs, std::mt19937& gen, const std::vector<PiElement>& omega) {
    std::uniform_int_distribution<int> len(0, 7), node(0, rs.rank), om(0, static_cast<int>(omega.size()));
    AffineWeylElement x = identity_element(rs);
    const int l = len(gen);
    for (int i = 0; i < l; ++i) x = compose(rs, x, affine_simple_reflection(rs, node(gen)));
    const int k = om(gen);
    if (k > 0) x = compose(rs, x, omega[static_cast<std::size_t>(k - 1)].element);
    return x;
}

int inversion_length(const RootSystem& rs, const AffineWeylElement& x) {
    return static_cast<int>(inversion_set(rs, x).size());
}

// Levis to exercise: the requested one, or every single-node subset.
std::vector<std::vector<int>> levi_list(const RootSystem& rs, const VerifyOptions& opt) {
    if (opt.levi) return {*opt.levi};
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= rs.rank; ++i) out.push_back({i});
    return out;
}

void rootdata_checks(const RootSystem& rs, Collector& c) {
    c.set_module("rootdata");
    c.check("dual_coxeter_is_comark_sum", [&] {
        std::int64_t s = 0;
        for (auto a : rs.comarks) s += a;
        return Outcome{s == rs.dual_coxeter, "sum = " + std::to_string(s) + ", h^vee = " + std::to_string(rs.dual_coxeter)};
    });
    c.check("positive_count_is_exponent_sum", [&] {
        std::int64_t s = 0;
        for (int m : rs.exponents) s += m;
        return Outcome{s == static_cast<std::int64_t>(rs.positive_coroots.size()),
                         std::to_string(rs.positive_coroots.size()) + " positive coroots, exponent sum " + std::to_string(s)};
    });
    c.check("weyl_order_is_exponent_product", [&] {
        std::uint64_t p = 1;
        for (int m : rs.exponents) p *= static_cast<std::uint64_t>(m + 1);
        bool ok = p == rs.weyl_order;
        std::string d = "prod(m_i + 1) = " + std::to_string(p);
        if (rs.weyl_order <= kBruteForceGate) {
            auto n = rs.enumerate_weyl_group().size();
            ok = ok && n == rs.weyl_order;
            d += ", enumerated " + std::to_string(n);
        }
        return Outcome{ok, d};
    });
    c.check("simple_reflections_preserve_form", [&] {
        std::mt19937 gen(kSeed);
        int bad = 0;
        for (int t = 0; t < 50; ++t) {
            RatVec v = random_rational(gen, rs.rank), w = random_rational(gen, rs.rank);
            for (int i = 0; i < rs.rank; ++i) {
                WeylElement s = rs.simple_reflection(i);
                if (inner(rs, rs.act(s, v), rs.act(s, w)) != inner(rs, v, w)) ++bad;
            }
        }
        return Outcome{bad == 0, std::to_string(bad) + " violations over 50 random pairs"};
    });
    c.check("coroot_heights_positive", [&] {
        for (const auto& co : rs.positive_coroots)
            if (rs.height(co) < 1) return Outcome{false, "coroot " + vec_str(co)};
        return Outcome{true, std::to_string(rs.positive_coroots.size()) + " coroots"};
    });
}

void affine_checks(const RootSystem& rs, int u, const std::vector<PiElement>& sigma, Collector& c, const VerifyOptions& opt) {
    c.set_module("affine_weyl");
    const PiUSet pu = pi_u_set(rs, u);
    c.check("pi_u_images_have_nonnegative_level", [&] {
        for (const auto& p : sigma)
            for (const auto& a : pu.coroots) {
                AffineCoroot img = act(rs, p.element, a);
                if (img.level < 0 || !img.positive())
                    return Outcome{false, "b = " + vec_str(coweight_key(rs, p.b)) + " sends a coroot to level " +
                                                std::to_string(img.level)};
            }
        return Outcome{true, std::to_string(sigma.size()) + " elements"};
    });
    // u ht + n h^vee never vanishes on a real affine coroot (gcd(u, h^vee) = 1 and |ht| < h^vee).
    std::size_t negative = 0;
    c.check("weight_pairing_nonvanishing", [&] {
        std::size_t seen = 0;
        for (std::int64_t n = 0; n <= 3; ++n)
            for (const auto& co : rs.positive_coroots)
                for (int sgn : {1, -1}) {
                    AffineCoroot a{co, n};
                    if (sgn < 0)
                        for (auto& x : a.finite) x = -x;
                    if (!a.positive() || !is_real_affine_coroot(rs, a)) continue;
                    ++seen;
                    const std::int64_t v = u * sgn * rs.height(co) + n * rs.dual_coxeter;
                    if (v == 0) return Outcome{false, "vanishes at level " + std::to_string(n)};
                    if (v < 0) ++negative;
                }
        return Outcome{true, std::to_string(seen) + " positive affine coroots with level <= 3"};
    });
    c.record("weight_pairing_sign", CheckStatus::Diagnostic,
             std::to_string(negative) + " positive affine coroots of level <= 3 with u ht + n h^vee < 0");

    c.check("pi_element_invariants", [&] {
        for (const auto& p : sigma) {
            for (int i = 0; i < rs.rank; ++i)
                if (rs.pair_simple(i, p.b_minus) > 0) return Outcome{false, "b_minus not antidominant"};
            for (const auto& a : inversion_set(rs, finite_element(rs, p.u_b)))
                if (inner(rs, to_rational(a.finite), p.b) == 0) return Outcome{false, "(alpha, b) = 0 on Phi(u_b)"};
            for (const auto& a : inversion_set(rs, p.element))
                if (a.level == 0) return Outcome{false, "pi_b inverts a finite coroot"};
        }
        return Outcome{true, std::to_string(sigma.size()) + " members"};
    });

    c.check("decomposition_uniqueness", [&] {
        const auto group = rs.weyl_order <= kBruteForceGate ? rs.enumerate_weyl_group()
                                                             : throw GateExceeded("W-bar too large to enumerate");
        int radius = 3;
        while (radius > 0 && static_cast<double>(ipow(2 * radius + 1, rs.rank)) * group.size() > opt.scan_limit) --radius;
        if (static_cast<double>(ipow(2 * radius + 1, rs.rank)) * group.size() > opt.scan_limit)
            throw GateExceeded("box scan exceeds the scan limit");
        std::size_t tested = 0;
        IntVec x(rs.rank, -radius);
        while (true) {
            RatVec b = rs.from_coweight_coords(to_rational(x));
            int valid = 0;
            WeylElement found;
            for (const auto& w : group) {
                RatVec wb = rs.act(w, b);
                bool anti = true;
                for (int i = 0; i < rs.rank && anti; ++i) anti = rs.pair_simple(i, wb) <= 0;
                if (!anti) continue;
                bool sep = true;
                for (const auto& a : inversion_set(rs, finite_element(rs, w)))
                    if (inner(rs, to_rational(a.finite), b) == 0) sep = false;
                if (sep) {
                    ++valid;
                    found = w;
                }
            }
            if (valid != 1 || !(found == antidominant_decomposition(rs, b).u_b))
                return Outcome{false, "b = " + vec_str(x) + " has " + std::to_string(valid) + " valid decompositions"};
            ++tested;
            int k = 0;
            while (k < rs.rank && x[k] == radius) x[k++] = -radius;
            if (k == rs.rank) break;
            ++x[k];
        }
        return Outcome{true, std::to_string(tested) + " coweights with |x_i| <= " + std::to_string(radius)};
    });

    c.check("length_and_sign_on_random_pairs", [&] {
        std::mt19937 gen(kSeed + 1);
        const auto omega = omega_generators(rs);
        for (int t = 0; t < 200; ++t) {
            AffineWeylElement x = random_affine(rs, gen, omega), y = random_affine(rs, gen, omega);
            AffineWeylElement xy = compose(rs, x, y);
            const int lx = inversion_length(rs, x), ly = inversion_length(rs, y), lxy = inversion_length(rs, xy);
            if (lxy > lx + ly) return Outcome{false, "l(xy) > l(x) + l(y)"};
            if ((lxy + lx + ly) % 2 != 0) return Outcome{false, "sign is not multiplicative"};
            if (length_by_descent(rs, xy).length != lxy) return Outcome{false, "descent length differs from |Phi(x)|"};
            if (!(compose(rs, xy, invert(rs, xy)) == identity_element(rs))) return Outcome{false, "x x^{-1} != 1"};
        }
        return Outcome{true, "200 random pairs"};
    });
}

void admissible_checks(const RootSystem& rs, int u, const std::vector<PiElement>& sigma,
                       const std::vector<AdmissibleClass>& classes, Collector& c, const VerifyOptions& opt) {
    c.set_module("admissible");
    const LevelData lv = validate_level(rs, u);
    const PiUSet pu = pi_u_set(rs, u);
    const std::uint64_t ul = ipow(static_cast<std::uint64_t>(u), rs.rank);
    c.check("sigma_u_size", [&] {
        return Outcome{sigma.size() == ul * static_cast<std::uint64_t>(rs.e),
                         std::to_string(sigma.size()) + " members, e u^l = " + std::to_string(ul * rs.e)};
    });
    c.check("class_count", [&] {
        return Outcome{classes.size() == ul, std::to_string(classes.size()) + " classes, u^l = " + std::to_string(ul)};
    });
    c.check("box_scan_agrees_elementwise", [&] {
        const std::int64_t bound = admissible_box_bound(rs, u);
        const double cost = static_cast<double>(ipow(static_cast<std::uint64_t>(2 * bound + 1), rs.rank)) *
                            static_cast<double>(rs.weyl_order);
        if (cost > static_cast<double>(opt.scan_limit) || rs.weyl_order > kBruteForceGate)
            throw GateExceeded("box scan of " + fmt(cost) + " elements exceeds the scan limit");
        auto scan = scan_admissible_box(rs, u, bound);
        std::set<std::pair<IntVec, IntVec>> a, b;
        for (const auto& x : scan) {
            IntVec key = coweight_key(rs, x.b);
            for (auto k : key)
                if (k == bound || k == -bound) return Outcome{false, "scan hit the box boundary"};
            a.insert({key, x.w.matrix});
        }
        for (const auto& p : sigma) b.insert({coweight_key(rs, p.element.b), p.element.w.matrix});
        return Outcome{a == b, std::to_string(scan.size()) + " scanned, " + std::to_string(sigma.size()) + " enumerated"};
    });
    c.check("fixed_point_reading", [&] {
        for (const auto& p : sigma) {
            AffineWeylElement w = invert(rs, p.element);
            if (!is_u_admissible(rs, invert(rs, w), pu)) return Outcome{false, "w^{-1}(Pi_u) not positive"};
        }
        return Outcome{true, std::to_string(sigma.size()) + " members"};
    });
    c.check("weights_distinct_across_classes", [&] {
        std::set<RatVec> seen;
        for (const auto& cl : classes)
            if (!seen.insert(cl.weight.finite_part).second) return Outcome{false, "repeated weight"};
        return Outcome{true, std::to_string(classes.size()) + " weights"};
    });
    c.check("weights_equal_within_class", [&] {
        for (const auto& cl : classes)
            for (const auto& m : cl.orbit) {
                AdmissibleWeight w = realize_weight(rs, m, lv);
                if (!w.same_class(cl.weight) || w.anomaly != cl.weight.anomaly)
                    return Outcome{false, "class " + std::to_string(cl.class_id)};
            }
        return Outcome{true, "all orbits"};
    });
    c.check("dominance_up_to_level_10", [&] {
        std::size_t tested = 0;
        for (const auto& cl : classes) {
            RatVec lam = cl.weight.finite_part;
            for (auto& x : lam) x += 1;  // lambda + rho, finite pairing coordinates
            for (std::int64_t n = 0; n <= 10; ++n)
                for (const auto& co : rs.positive_coroots)
                    for (int sgn : {1, -1}) {
                        AffineCoroot a{co, n};
                        if (sgn < 0)
                            for (auto& x : a.finite) x = -x;
                        if (!a.positive() || !is_real_affine_coroot(rs, a)) continue;
                        Rational v = Rational(n) * lv.shift;
                        for (int i = 0; i < rs.rank; ++i) v += Rational(a.finite[i]) * lam[i];
                        if (!is_integral(v)) continue;
                        ++tested;
                        if (v <= 0) return Outcome{false, "class " + std::to_string(cl.class_id) + " fails at level " +
                                                                std::to_string(n)};
                    }
        }
        return Outcome{true, std::to_string(tested) + " integral pairings positive"};
    });
    c.check("epsilon_multiplicative", [&] {
        const std::size_t n = std::min<std::size_t>(classes.size(), 60);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto& a = classes[i].rep.u_b;
                const auto& b = classes[j].rep.u_b;
                if (a.sign() * b.sign() != rs.multiply(a, b).sign()) return Outcome{false, "eps(u_b u_b') mismatch"};
            }
        return Outcome{true, std::to_string(n * n) + " pairs"};
    });
}

void spaltenstein_checks(const RootSystem& rs, int u, const std::vector<PiElement>& sigma,
                         const std::vector<AdmissibleClass>& classes, Collector& c, const VerifyOptions& opt) {
    c.set_module("spaltenstein");
    const SuQuotient q(rs, u);
    const PiUSet pu = pi_u_set(rs, u);
    c.check("s_u_bijection", [&] {
        class_index(rs, q, classes);
        return Outcome{true, "|S_u| = " + std::to_string(q.order())};
    });
    c.check("sommers_law", [&] {
        if (rs.weyl_order > kBruteForceGate ||
            static_cast<double>(rs.weyl_order) * static_cast<double>(q.order()) > static_cast<double>(opt.scan_limit))
            throw GateExceeded("|W| |S_u| exceeds the scan limit");
        for (const auto& w : rs.enumerate_weyl_group()) {
            const std::uint64_t got = fixed_point_count(rs, q, w);
            const std::uint64_t want = static_cast<std::uint64_t>(rs.e) * ipow(u, fixed_dimension(rs, w));
            if (got != want)
                return Outcome{false, "word of length " + std::to_string(w.length()) + ": " + std::to_string(got) +
                                            " != " + std::to_string(want)};
        }
        return Outcome{true, std::to_string(rs.weyl_order) + " elements"};
    });
    for (const auto& subset : levi_list(rs, opt)) {
        const LeviDatum levi = levi_datum(rs, subset);
        const std::string tag = "[" + levi.label() + "]";
        c.check("closed_form_expansion" + tag, [&] {
            using boost::multiprecision::cpp_int;
            const ParabolicGroup g = parabolic_group(rs, levi);
            cpp_int lhs = rs.e;
            for (int i = 0; i < rs.rank - levi.j; ++i) lhs *= u;
            for (int m : levi.exponents) lhs *= (u - m);
            cpp_int rhs = 0;
            for (const auto& w : g.elements) rhs += cpp_int(w.sign()) * rs.e * cpp_int(ipow(u, fixed_dimension(rs, w)));
            return Outcome{lhs == rhs, "e u^{l-j} prod(u - m_i) = " + lhs.str()};
        });
        c.check("sign_sum_identity" + tag, [&] {
            const ParabolicGroup g = parabolic_group(rs, levi);
            if (static_cast<double>(g.elements.size()) * static_cast<double>(q.order()) > static_cast<double>(opt.scan_limit))
                throw GateExceeded("|W_f| |S_u| exceeds the scan limit");
            std::int64_t free = 0, signed_sum = 0;
            for (std::uint64_t i = 0; i < q.order(); ++i) {
                OrbitReport r = stabilizer_order(q, q.element(i), g);
                if (r.free) ++free;
            }
            for (const auto& w : g.elements)
                signed_sum += w.sign() * static_cast<std::int64_t>(fixed_point_count(rs, q, w));
            return Outcome{signed_sum == free,
                             "sum eps |S^w| = " + std::to_string(signed_sum) + ", free points " + std::to_string(free)};
        });
        c.check("closed_form_vs_brute_force" + tag, [&] {
            auto cf = count_closed_form(rs, u, levi);
            auto bf = count_brute_force(rs, u, levi);
            return Outcome{cf == bf, "closed form " + std::to_string(cf) + ", brute force " + std::to_string(bf)};
        });
        c.check("levi_admissible_iff_free" + tag, [&] {
            const ParabolicGroup g = parabolic_group(rs, levi);
            for (const auto& p : sigma)
                if (is_levi_admissible(rs, p, pu, levi) != stabilizer_order(q, q.reduce(p.b), g).free)
                    return Outcome{false, "b = " + vec_str(coweight_key(rs, p.b))};
            return Outcome{true, std::to_string(sigma.size()) + " members"};
        });
        c.check("enumeration_matches_closed_form" + tag, [&] {
            auto e = enumerate_levi_admissible(rs, u, levi);
            auto cf = count_closed_form(rs, u, levi);
            return Outcome{static_cast<std::int64_t>(e.orbits.size()) == cf,
                             std::to_string(e.orbits.size()) + " orbits, closed form " + std::to_string(cf)};
        });
    }
}

void modular_checks(const RootSystem& rs, int u, const std::vector<PiElement>& sigma,
                    const std::vector<AdmissibleClass>& classes, Collector& c, const VerifyOptions& opt) {
    c.set_module("modular_data");
    const auto n = static_cast<Eigen::Index>(classes.size());
    const LevelData lv = validate_level(rs, u);
    c.check("mu_bullet_is_one", [&] {
        double dev = 0.0;
        for (const auto& p : sigma) dev = std::max(dev, std::abs(mu_bullet_at_specialization(rs, lv, p) - 1.0));
        return Outcome{dev <= opt.tol.identity, "max deviation " + fmt(dev)};
    });
    if (n > opt.matrix_limit) {
        c.record("matrices", CheckStatus::Skip, "size " + std::to_string(n) + " exceeds the matrix limit");
        return;
    }
    const double tol_id = scaled_tolerance(opt.tol.identity, n);
    const double tol_ratio = scaled_tolerance(opt.tol.ratio, n);
    const double tol_rel = scaled_tolerance(opt.tol.relation, n);
    const ModularMatrices kw = kw_matrices(rs, lv, classes);
    const ModularMatrices daha = daha_specialized_matrices(rs, lv, classes);
    const ComparisonReport cmp = intertwiner_comparison(rs, lv, classes, kw, daha);
    c.check("macdonald_route", [&] {
        const double d = daha.construction.at("macdonald_route_deviation");
        return Outcome{d <= tol_id && daha.construction.at("macdonald_route_exact_mismatch") == 0.0 &&
                             daha.construction.at("gaussian_mismatch") == 0.0,
                         "max deviation from zeta^{(b,b')} " + fmt(d)};
    });
    c.check("t_relation", [&] {
        const double r = cmp.residuals.at("t_relation");
        return Outcome{r <= tol_id, "max |T - c T_KW| = " + fmt(r)};
    });
    c.check("intertwiner_ratio_constant", [&] {
        return Outcome{cmp.max_deviation <= tol_ratio, "max deviation " + fmt(cmp.max_deviation)};
    });
    c.check("abs_a_squared_u_pow_l", [&] {
        const double v = cmp.residuals.at("abs_a_squared_times_u_pow_l");
        return Outcome{std::abs(v - 1.0) <= tol_ratio, "|a|^2 u^l = " + std::to_string(v)};
    });
    c.record("literal_sign_variant", CheckStatus::Diagnostic,
             std::to_string(cmp.sign_diagnostics.size()) + " entries off the constant with eps(u_b) eps(u_b') in place of D_b D_b'");
    c.check("daha_s_squared_permutation", [&] {
        const ComparisonReport r = sl2z_residuals(daha, u, rs.rank);
        return Outcome{r.flags.at("s2_is_permutation"), "(u^{-l/2} S)^2 is a permutation matrix"};
    });
    c.check("sl2z_lift", [&] {
        const LiftReport lift = sl2z_lift(kw.S, kw.T);
        return Outcome{lift.st3_residual <= tol_rel && lift.s4_residual <= tol_rel,
                         "scalar-adjusted (ST)^3 - S^2: " + fmt(lift.st3_residual) + ", S^4 - I: " + fmt(lift.s4_residual)};
    });
    {
        const ComparisonReport r = sl2z_residuals(kw, u, rs.rank);
        c.record("sl2z_literal", CheckStatus::Diagnostic,
                 "literal (ST)^3 - S^2: " + fmt(r.residuals.at("st3_minus_s2")) +
                     ", S^4 - I: " + fmt(r.residuals.at("s4_minus_identity")));
    }
    for (const auto& subset : levi_list(rs, opt)) {
        const LeviDatum levi = levi_datum(rs, subset);
        const std::string tag = "[" + levi.label() + "]";
        for (const ModularMatrices* m : {&kw, &daha}) {
            const std::string flavor = m->flavor == Flavor::KW ? "kw" : "daha";
            c.check("ef_projector_" + flavor + tag, [&] {
                const EfRestriction ef = ef_projector_and_restriction(rs, lv, levi, classes, *m);
                const bool ok = ef.commutator_S <= tol_ratio && ef.commutator_T <= tol_ratio &&
                                ef.projector_defect <= tol_ratio && ef.restriction_defect <= tol_ratio;
                return Outcome{ok, "rank " + std::to_string(ef.rank) + " (closed form " + std::to_string(ef.closed_form) +
                                         "), [E,S] " + fmt(ef.commutator_S) + ", [E,T] " + fmt(ef.commutator_T)};
            });
        }
        c.check("ef_restriction_sl2z_lift" + tag, [&] {
            const EfRestriction ef = ef_projector_and_restriction(rs, lv, levi, classes, kw);
            if (ef.rank == 0) return Outcome{true, "empty image"};
            const LiftReport lift = sl2z_lift(ef.restricted.S, ef.restricted.T);
            const ComparisonReport lit = sl2z_residuals(ef.restricted);
            c.record("ef_restriction_sl2z_literal" + tag, CheckStatus::Diagnostic,
                     "literal (ST)^3 - S^2: " + fmt(lit.residuals.at("st3_minus_s2")));
            return Outcome{lift.st3_residual <= tol_rel && lift.s4_residual <= tol_rel,
                             "scalar-adjusted (ST)^3 - S^2: " + fmt(lift.st3_residual)};
        });
    }
}

}  // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skip: return "SKIP";
        case CheckStatus::Diagnostic: return "INFO";
    }
    return "?";
}

std::int64_t admissible_box_bound(const RootSystem&, int u) { return u + 1; }

std::vector<AffineWeylElement> scan_admissible_box(const RootSystem& rs, int u, std::int64_t bound) {
    const PiUSet pu = pi_u_set(rs, u);
    const auto group = rs.enumerate_weyl_group();
    std::vector<AffineWeylElement> out;
    IntVec x(rs.rank, -bound);
    while (true) {
        const RatVec b = rs.from_coweight_coords(to_rational(x));
        for (const auto& w : group) {
            AffineWeylElement e{rs.kind, b, w};
            if (is_u_admissible(rs, e, pu)) out.push_back(std::move(e));
        }
        int k = 0;
        while (k < rs.rank && x[k] == bound) x[k++] = -bound;
        if (k == rs.rank) break;
        ++x[k];
    }
    return out;
}

std::vector<CheckResult> verify_suite(const RootSystem& rs, int u, const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    Collector c(out);
    rootdata_checks(rs, c);
    const auto classes = enumerate_admissible(rs, u);
    std::vector<PiElement> sigma;
    for (const auto& cl : classes) sigma.insert(sigma.end(), cl.orbit.begin(), cl.orbit.end());
    affine_checks(rs, u, sigma, c, opt);
    admissible_checks(rs, u, sigma, classes, c, opt);
    spaltenstein_checks(rs, u, sigma, classes, c, opt);
    modular_checks(rs, u, sigma, classes, c, opt);
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == CheckStatus::Fail; });
}

}  // namespace affadm
