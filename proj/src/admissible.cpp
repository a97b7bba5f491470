#include "affadm/admissible.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace affadm {

LevelData validate_level(const RootSystem& rs, int u) {
    if (u < 1) throw LevelError("u must be a positive integer, got " + std::to_string(u), "u>=1");
    if (std::gcd(u, rs.dual_coxeter) != 1)
        throw LevelError("gcd(u,h^vee) = gcd(" + std::to_string(u) + "," + std::to_string(rs.dual_coxeter) + ") != 1",
                         "gcd(u,h^vee)");
    if (std::gcd(u, rs.lacing) != 1)
        throw LevelError("gcd(u,r^vee) = gcd(" + std::to_string(u) + "," + std::to_string(rs.lacing) + ") != 1",
                         "gcd(u,r^vee)");
    LevelData lv;
    lv.u = u;
    lv.shift = Rational(rs.dual_coxeter, u);
    lv.k = lv.shift - Rational(rs.dual_coxeter);
    return lv;
}

PiUSet pi_u_set(const RootSystem& rs, int u) {
    PiUSet pu;
    IntVec neg = rs.theta_coroot;
    for (auto& c : neg) c = -c;
    pu.coroots.push_back({neg, u});
    for (int i = 0; i < rs.rank; ++i) {
        IntVec e(rs.rank, 0);
        e[i] = 1;
        pu.coroots.push_back({e, 0});
    }
    return pu;
}

bool is_u_admissible(const RootSystem& rs, const AffineWeylElement& x, const PiUSet& pu) {
    return std::all_of(pu.coroots.begin(), pu.coroots.end(),
                       [&](const AffineCoroot& a) { return act(rs, x, a).positive(); });
}

bool sigma_u_membership(const RootSystem& rs, int u, const RatVec& b) {
    PiElement p = antidominant_decomposition(rs, b);
    Rational s = Rational(u) + inner(rs, to_rational(rs.theta_coroot), p.b_minus);
    if (s > 0) return true;
    if (s < 0) return false;
    IntVec img = rs.act(rs.inverse(p.u_b), rs.theta_coroot);
    return AffineCoroot{img, 0}.positive() == false;
}

AdmissibleWeight realize_weight(const RootSystem& rs, const PiElement& p, const LevelData& lv) {
    const int n = rs.rank;
    const Rational L = lv.shift;
    // k varpi_0 + rho: finite part rho-bar, level h^vee/u.
    RatVec pair(n, Rational(1));
    RatVec v = rs.act(rs.inverse(p.u_b), mat_vec(rs.gram_inv, pair));
    pair = mat_vec(rs.gram, v);
    Rational delta(0);
    delta -= dot(pair, p.b) + L * inner(rs, p.b, p.b) / 2;
    RatVec gb = mat_vec(rs.gram, p.b);
    for (int i = 0; i < n; ++i) pair[i] += L * gb[i];

    AdmissibleWeight w;
    w.finite_part = pair;
    for (auto& x : w.finite_part) x -= 1;
    w.level = lv.k;
    w.delta = delta;
    w.anomaly = anomaly(rs, w, lv);
    return w;
}

Rational anomaly(const RootSystem& rs, const AdmissibleWeight& w, const LevelData& lv) {
    RatVec shifted = w.finite_part;
    for (auto& x : shifted) x += 1;
    Rational norm = dot(shifted, mat_vec(rs.gram_inv, shifted));
    return norm / (2 * lv.shift) - rs.rho_norm2 / (2 * rs.dual_coxeter);
}

IntVec coweight_key(const RootSystem& rs, const RatVec& b) { return to_integer(rs.to_coweight_coords(b)); }

std::vector<RatVec> dilated_alcove(const RootSystem& rs, int u) {
    std::vector<RatVec> out;
    const int n = rs.rank;
    IntVec coeff(n, 0);
    // n_i >= 0 with sum n_i a_i <= u
    auto rec = [&](auto&& self, int i, std::int64_t budget) -> void {
        if (i == n) {
            RatVec x(n);
            for (int k = 0; k < n; ++k) x[k] = Rational(-coeff[k]);
            out.push_back(rs.from_coweight_coords(x));
            return;
        }
        for (std::int64_t c = 0; c * rs.marks[i + 1] <= budget; ++c) {
            coeff[i] = c;
            self(self, i + 1, budget - c * rs.marks[i + 1]);
        }
        coeff[i] = 0;
    };
    rec(rec, 0, u);
    return out;
}

std::vector<PiElement> enumerate_sigma_u(const RootSystem& rs, int u) {
    std::vector<PiElement> members;
    for (const auto& bm : dilated_alcove(rs, u)) {
        std::set<IntVec> seen{coweight_key(rs, bm)};
        std::vector<RatVec> orbit{bm};
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (int i = 0; i < rs.rank; ++i) {
                if (rs.pair_simple(i, orbit[head]) == 0) continue;
                RatVec next = rs.act(rs.simple_reflection(i), orbit[head]);
                if (seen.insert(coweight_key(rs, next)).second) orbit.push_back(next);
            }
        for (const auto& b : orbit)
            if (sigma_u_membership(rs, u, b)) members.push_back(antidominant_decomposition(rs, b));
    }
    std::sort(members.begin(), members.end(), [&](const PiElement& x, const PiElement& y) {
        return coweight_key(rs, x.b) < coweight_key(rs, y.b);
    });
    return members;
}

std::vector<AdmissibleClass> enumerate_admissible(const RootSystem& rs, int u) {
    const LevelData lv = validate_level(rs, u);
    std::vector<PiElement> members = enumerate_sigma_u(rs, u);
    std::map<IntVec, std::size_t> index;
    for (std::size_t i = 0; i < members.size(); ++i) index[coweight_key(rs, members[i].b)] = i;

    std::vector<bool> assigned(members.size(), false);
    std::vector<AdmissibleClass> classes;
    for (std::size_t s = 0; s < members.size(); ++s) {
        if (assigned[s]) continue;
        std::vector<std::size_t> orbit{s};
        assigned[s] = true;
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (int j : rs.J) {
                PiElement next = omega_u_translate(rs, members[orbit[head]], j, u);
                auto it = index.find(coweight_key(rs, next.b));
                if (it == index.end()) throw std::logic_error("Omega_u translate left Sigma_u");
                if (!assigned[it->second]) {
                    assigned[it->second] = true;
                    orbit.push_back(it->second);
                }
            }
        if (orbit.size() != static_cast<std::size_t>(rs.e)) throw std::logic_error("Omega_u orbit size differs from e");
        std::sort(orbit.begin(), orbit.end());  // members are sorted by coweight key
        AdmissibleClass c;
        for (auto i : orbit) c.orbit.push_back(members[i]);
        c.rep = c.orbit.front();
        c.weight = realize_weight(rs, c.rep, lv);
        for (const auto& m : c.orbit)
            if (!realize_weight(rs, m, lv).same_class(c.weight))
                throw std::logic_error("weight depends on the Omega_u representative");
        classes.push_back(std::move(c));
    }
    std::sort(classes.begin(), classes.end(), [&](const AdmissibleClass& x, const AdmissibleClass& y) {
        auto kx = coweight_key(rs, x.rep.b_minus), ky = coweight_key(rs, y.rep.b_minus);
        if (kx != ky) return kx < ky;
        return coweight_key(rs, x.rep.b) < coweight_key(rs, y.rep.b);
    });
    for (std::size_t i = 0; i < classes.size(); ++i) classes[i].class_id = static_cast<int>(i);
    return classes;
}

}  // namespace affadm
