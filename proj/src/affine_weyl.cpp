#include "affadm/affine_weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace affadm {

namespace {

void require_same(const AffineWeylElement& x, const AffineWeylElement& y) {
    if (!(x.kind == y.kind)) throw std::invalid_argument("elements belong to different root systems");
}

bool nonzero_first_negative(const IntVec& v) {
    for (auto x : v)
        if (x != 0) return x < 0;
    return false;
}

}  // namespace

bool AffineCoroot::positive() const {
    if (level != 0) return level > 0;
    return !nonzero_first_negative(finite) && std::any_of(finite.begin(), finite.end(), [](auto x) { return x != 0; });
}

bool is_real_affine_coroot(const RootSystem& rs, const AffineCoroot& a) {
    if (!rs.is_coroot(a.finite)) return false;
    return !rs.is_long_coroot(a.finite) || a.level % rs.lacing == 0;
}

AffineWeylElement identity_element(const RootSystem& rs) {
    return AffineWeylElement{rs.kind, RatVec(rs.rank, Rational(0)), rs.identity()};
}

AffineWeylElement translation(const RootSystem& rs, const RatVec& b) {
    if (b.size() != static_cast<std::size_t>(rs.rank)) throw std::invalid_argument("translation: dimension mismatch");
    return AffineWeylElement{rs.kind, b, rs.identity()};
}

AffineWeylElement finite_element(const RootSystem& rs, const WeylElement& w) {
    return AffineWeylElement{rs.kind, RatVec(rs.rank, Rational(0)), w};
}

AffineWeylElement affine_simple_reflection(const RootSystem& rs, int i) {
    if (i < 0 || i > rs.rank) throw std::out_of_range("affine simple reflection index");
    if (i > 0) return finite_element(rs, rs.simple_reflection(i - 1));
    auto it = std::find(rs.positive_coroots.begin(), rs.positive_coroots.end(), rs.theta_coroot);
    auto idx = static_cast<std::size_t>(it - rs.positive_coroots.begin());
    return AffineWeylElement{rs.kind, to_rational(rs.theta_coroot), rs.reflection(idx)};
}

AffineWeylElement compose(const RootSystem& rs, const AffineWeylElement& x, const AffineWeylElement& y) {
    require_same(x, y);
    if (!(x.kind == rs.kind)) throw std::invalid_argument("element does not belong to this root system");
    return AffineWeylElement{rs.kind, add(x.b, rs.act(x.w, y.b)), rs.multiply(x.w, y.w)};
}

AffineWeylElement invert(const RootSystem& rs, const AffineWeylElement& x) {
    if (!(x.kind == rs.kind)) throw std::invalid_argument("element does not belong to this root system");
    WeylElement wi = rs.inverse(x.w);
    return AffineWeylElement{rs.kind, scale(Rational(-1), rs.act(wi, x.b)), wi};
}

AffineCoroot act(const RootSystem& rs, const AffineWeylElement& x, const AffineCoroot& a) {
    IntVec wa = rs.act(x.w, a.finite);
    Rational p = inner(rs, to_rational(wa), x.b);
    if (!is_integral(p)) throw std::domain_error("translation part is not in the coweight lattice");
    return AffineCoroot{wa, a.level - p.numerator()};
}

std::vector<AffineCoroot> inversion_set(const RootSystem& rs, const AffineWeylElement& x) {
    std::int64_t bound = 0;
    for (const auto& co : rs.positive_coroots) {
        Rational p = inner(rs, to_rational(co), x.b);
        if (p < 0) p = -p;
        bound = std::max(bound, floor_of(p) + 1);
    }
    std::vector<AffineCoroot> out;
    for (int sgn : {1, -1}) {
        for (const auto& co : rs.positive_coroots) {
            IntVec f = co;
            if (sgn < 0)
                for (auto& c : f) c = -c;
            const bool is_long = rs.is_long_coroot(co);
            for (std::int64_t n = (sgn > 0 ? 0 : 1); n <= bound; ++n) {
                if (is_long && n % rs.lacing != 0) continue;
                AffineCoroot a{f, n};
                if (!act(rs, x, a).positive()) out.push_back(a);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

DescentResult length_by_descent(const RootSystem& rs, const AffineWeylElement& x) {
    std::vector<AffineCoroot> simple;
    IntVec neg_theta = rs.theta_coroot;
    for (auto& c : neg_theta) c = -c;
    simple.push_back({neg_theta, 1});
    for (int i = 0; i < rs.rank; ++i) {
        IntVec e(rs.rank, 0);
        e[i] = 1;
        simple.push_back({e, 0});
    }
    DescentResult res{0, {}, x};
    for (;;) {
        int found = -1;
        for (int i = 0; i <= rs.rank && found < 0; ++i)
            if (!act(rs, res.remainder, simple[i]).positive()) found = i;
        if (found < 0) break;
        res.remainder = compose(rs, res.remainder, affine_simple_reflection(rs, found));
        res.word.push_back(found);
        if (++res.length > 1000000) throw std::logic_error("descent did not terminate");
    }
    std::reverse(res.word.begin(), res.word.end());
    return res;
}

PiElement antidominant_decomposition(const RootSystem& rs, const RatVec& b) {
    if (!rs.in_coweight_lattice(b)) throw std::invalid_argument("b is not in the coweight lattice");
    RatVec v = b;
    std::vector<int> applied;
    for (;;) {
        int found = -1;
        for (int i = 0; i < rs.rank && found < 0; ++i)
            if (rs.pair_simple(i, v) > 0) found = i;
        if (found < 0) break;
        v = rs.act(rs.simple_reflection(found), v);
        applied.push_back(found + 1);
    }
    std::reverse(applied.begin(), applied.end());
    PiElement p;
    p.b = b;
    p.u_b = rs.from_word(applied);
    p.b_minus = v;
    p.element = AffineWeylElement{rs.kind, b, rs.inverse(p.u_b)};
    p.length = static_cast<int>(inversion_set(rs, p.element).size());
    p.sign = p.length % 2 == 0 ? 1 : -1;
    return p;
}

std::vector<PiElement> omega_generators(const RootSystem& rs) {
    std::vector<PiElement> out;
    for (int j : rs.J) out.push_back(antidominant_decomposition(rs, rs.fundamental_coweight(j)));
    return out;
}

PiElement omega_u_translate(const RootSystem& rs, const PiElement& p, int j, int u) {
    if (std::find(rs.J.begin(), rs.J.end(), j) == rs.J.end())
        throw std::invalid_argument("node " + std::to_string(j) + " is not in J");
    if (u < 1) throw std::invalid_argument("u must be positive");
    RatVec shift = rs.act(rs.inverse(p.u_b), scale(Rational(u), rs.fundamental_coweight(j)));
    return antidominant_decomposition(rs, add(p.b, shift));
}

}  // namespace affadm
