#include "affadm/spaltenstein.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace affadm {

namespace {

std::int64_t pos_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

IntVec apply_matrix(const IntVec& mat, const IntVec& x) {
    const std::size_t n = x.size();
    IntVec y(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y[i] += mat[i * n + j] * x[j];
    return y;
}

std::vector<int> zero_based(const std::vector<int>& nodes) {
    std::vector<int> out;
    for (int i : nodes) out.push_back(i - 1);
    return out;
}

}  // namespace

SuQuotient::SuQuotient(const RootSystem& rs, int u) : rs_(&rs), u_(u) {
    if (u < 1) throw std::invalid_argument("u must be positive");
    IntMat m = rs.cartan;
    for (auto& row : m)
        for (auto& x : row) x *= u;
    smith_ = smith_normal_form(m);
    for (auto d : smith_.diagonal) order_ *= static_cast<std::uint64_t>(d);
    std::uint64_t expect = static_cast<std::uint64_t>(rs.e);
    for (int i = 0; i < rs.rank; ++i) expect *= static_cast<std::uint64_t>(u);
    if (order_ != expect) throw std::logic_error("|S_u| != e u^l");
}

TorsionClass SuQuotient::reduce_coweight(const IntVec& x) const {
    const std::size_t n = x.size();
    TorsionClass t;
    t.coords.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        std::int64_t y = 0;
        for (std::size_t i = 0; i < n; ++i) y += x[i] * smith_.V[i][j];
        t.coords[j] = pos_mod(y, smith_.diagonal[j]);
    }
    t.lift = rs_->from_coweight_coords(to_rational(coweight_lift(t)));
    return t;
}

TorsionClass SuQuotient::reduce(const RatVec& b) const { return reduce_coweight(coweight_key(*rs_, b)); }

IntVec SuQuotient::coweight_lift(const TorsionClass& t) const {
    const std::size_t n = t.coords.size();
    IntVec x(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x[j] += t.coords[i] * smith_.V_inv[i][j];
    return x;
}

TorsionClass SuQuotient::element(std::uint64_t index) const {
    if (index >= order_) throw std::out_of_range("S_u index");
    TorsionClass t;
    for (auto d : smith_.diagonal) {
        t.coords.push_back(static_cast<std::int64_t>(index % static_cast<std::uint64_t>(d)));
        index /= static_cast<std::uint64_t>(d);
    }
    t.lift = rs_->from_coweight_coords(to_rational(coweight_lift(t)));
    return t;
}

std::uint64_t SuQuotient::index_of(const TorsionClass& t) const {
    std::uint64_t idx = 0;
    for (std::size_t i = t.coords.size(); i-- > 0;)
        idx = idx * static_cast<std::uint64_t>(smith_.diagonal[i]) + static_cast<std::uint64_t>(t.coords[i]);
    return idx;
}

SuQuotient s_u_quotient(const RootSystem& rs, int u) { return SuQuotient(rs, u); }

TorsionClass weyl_action_on_s_u(const RootSystem& rs, const SuQuotient& q, const WeylElement& w, const TorsionClass& x) {
    return q.reduce_coweight(apply_matrix(rs.coweight_matrix(w), q.coweight_lift(x)));
}

ParabolicGroup parabolic_group(const RootSystem& rs, const LeviDatum& levi) {
    if (levi.order > kBruteForceGate)
        throw GateExceeded("|W_f| = " + std::to_string(levi.order) + " exceeds the brute-force gate of " +
                           std::to_string(kBruteForceGate) + "; use the closed-form count");
    ParabolicGroup g;
    g.elements = rs.enumerate_parabolic(zero_based(levi.subset));
    for (const auto& w : g.elements) g.coweight.push_back(rs.coweight_matrix(w));
    return g;
}

OrbitReport stabilizer_order(const SuQuotient& q, const TorsionClass& x, const ParabolicGroup& group) {
    OrbitReport r;
    const IntVec lift = q.coweight_lift(x);
    std::set<std::uint64_t> seen;
    for (std::size_t k = 0; k < group.elements.size(); ++k) {
        TorsionClass y = q.reduce_coweight(apply_matrix(group.coweight[k], lift));
        if (y == x) {
            ++r.stabilizer_order;
            r.stabilizer_sign_sum += group.elements[k].sign();
        }
        if (seen.insert(q.index_of(y)).second) r.members.push_back(y);
    }
    r.orbit_size = r.members.size();
    r.free = r.stabilizer_order == 1;
    std::sort(r.members.begin(), r.members.end(),
              [&](const TorsionClass& a, const TorsionClass& b) { return q.index_of(a) < q.index_of(b); });
    return r;
}

OrbitReport stabilizer_order(const RootSystem& rs, const SuQuotient& q, const TorsionClass& x, const LeviDatum& levi) {
    return stabilizer_order(q, x, parabolic_group(rs, levi));
}

std::uint64_t fixed_point_count(const RootSystem& rs, const SuQuotient& q, const WeylElement& w) {
    const IntVec mat = rs.coweight_matrix(w);
    std::uint64_t n = 0;
    for (std::uint64_t i = 0; i < q.order(); ++i) {
        TorsionClass x = q.element(i);
        if (q.reduce_coweight(apply_matrix(mat, q.coweight_lift(x))) == x) ++n;
    }
    return n;
}

int fixed_dimension(const RootSystem& rs, const WeylElement& w) {
    IntMat m(rs.rank, IntVec(rs.rank));
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) m[i][j] = w.at(i, j) - (i == j ? 1 : 0);
    return rs.rank - static_cast<int>(rank(m));
}

bool is_levi_admissible(const RootSystem& rs, const PiElement& p, const PiUSet& pu, const LeviDatum& levi) {
    for (const auto& beta : pu.coroots) {
        AffineCoroot img = act(rs, p.element, beta);
        if (img.level != 0) continue;
        bool inside = true;
        for (int i = 0; i < rs.rank; ++i)
            if (img.finite[i] != 0 && !std::binary_search(levi.subset.begin(), levi.subset.end(), i + 1)) inside = false;
        if (inside) return false;
    }
    return true;
}

ClassIndex class_index(const RootSystem& rs, const SuQuotient& q, const std::vector<AdmissibleClass>& classes) {
    ClassIndex idx;
    std::size_t members = 0;
    for (const auto& c : classes)
        for (const auto& m : c.orbit) {
            ++members;
            if (!idx.class_of.emplace(q.reduce(m.b).coords, c.class_id).second)
                throw std::logic_error("two members of Sigma_u share a class in S_u");
        }
    if (members != q.order()) throw std::logic_error("Sigma_u and S_u have different sizes");
    (void)rs;
    return idx;
}

int act_on_class(const RootSystem& rs, const SuQuotient& q, const ClassIndex& idx,
                 const std::vector<AdmissibleClass>& classes, const WeylElement& w, int c) {
    const RatVec& b = classes.at(static_cast<std::size_t>(c)).rep.b;
    TorsionClass y = q.reduce(rs.act(w, b));
    return idx.class_of.at(y.coords);
}

LeviEnumeration enumerate_levi_admissible(const RootSystem& rs, int u, const LeviDatum& levi) {
    LeviEnumeration out;
    out.classes = enumerate_admissible(rs, u);
    const PiUSet pu = pi_u_set(rs, u);
    for (const auto& c : out.classes) {
        bool pass = is_levi_admissible(rs, c.rep, pu, levi);
        for (const auto& m : c.orbit)
            if (is_levi_admissible(rs, m, pu, levi) != pass) throw std::logic_error("Levi test is not Omega_u-stable");
        if (pass) out.admissible.push_back(c.class_id);
    }
    if (levi.subset.empty()) {
        for (int id : out.admissible) out.orbits.push_back({id});
    } else {
        const SuQuotient q(rs, u);
        const ClassIndex idx = class_index(rs, q, out.classes);
        const ParabolicGroup g = parabolic_group(rs, levi);
        std::set<int> pending(out.admissible.begin(), out.admissible.end());
        while (!pending.empty()) {
            int c = *pending.begin();
            std::set<int> orbit;
            for (const auto& w : g.elements) orbit.insert(act_on_class(rs, q, idx, out.classes, w, c));
            for (int o : orbit)
                if (pending.erase(o) == 0) throw std::logic_error("W_f moved a Levi-admissible class outside the set");
            out.orbits.emplace_back(orbit.begin(), orbit.end());
        }
    }
    for (const auto& o : out.orbits) out.representatives.push_back(out.classes[static_cast<std::size_t>(o.front())]);
    return out;
}

std::int64_t count_closed_form(const RootSystem& rs, int u, const LeviDatum& levi) {
    validate_level(rs, u);
    using boost::multiprecision::cpp_int;
    cpp_int num = 1;
    for (int i = 0; i < rs.rank - levi.j; ++i) num *= u;
    for (int m : levi.exponents) num *= (u - m);
    if (num % levi.order != 0) throw std::logic_error("closed-form count is not an integer");
    cpp_int c = num / levi.order;
    if (c < 0) throw std::logic_error("closed-form count is negative");
    if (c > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("closed-form count overflows");
    return c.convert_to<std::int64_t>();
}

std::int64_t count_brute_force(const RootSystem& rs, int u, const LeviDatum& levi) {
    validate_level(rs, u);
    const SuQuotient q(rs, u);
    if (static_cast<double>(q.order()) * static_cast<double>(levi.order) > 5e8)
        throw GateExceeded("brute-force count would visit more than 5e8 (point, element) pairs");
    const ParabolicGroup g = parabolic_group(rs, levi);
    std::uint64_t free = 0;
    for (std::uint64_t i = 0; i < q.order(); ++i) {
        TorsionClass x = q.element(i);
        const IntVec lift = q.coweight_lift(x);
        bool is_free = true;
        for (std::size_t k = 1; k < g.elements.size() && is_free; ++k)
            if (q.reduce_coweight(apply_matrix(g.coweight[k], lift)) == x) is_free = false;
        if (is_free) ++free;
    }
    const std::uint64_t denom = static_cast<std::uint64_t>(rs.e) * levi.order;
    if (free % denom != 0) throw std::logic_error("free points are not a multiple of e |W_f|");
    return static_cast<std::int64_t>(free / denom);
}

std::vector<int> levi_fixture(const RootSystem& rs, const std::string& name, int u) {
    const int n = rs.rank;
    if (name == "none" || name == "empty") return {};
    if (name == "principal") {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 1);
        return all;
    }
    if (name == "A6") {
        if (!(rs.kind == CartanKind{'E', 7})) throw std::invalid_argument("fixture A6 is defined for E7 only");
        std::vector<int> s{1, 3, 4, 5, 6, 7};
        if (levi_datum(rs, s).label() != "A6") throw std::logic_error("E7 fixture does not induce an A6 diagram");
        return s;
    }
    if (name == "row") {
        const char f = rs.kind.family;
        if (f != 'A' && f != 'B' && f != 'C' && f != 'D')
            throw std::invalid_argument("fixture row is defined for classical types only");
        if (u < 1 || n % u != 0)
            throw std::invalid_argument("fixture row needs u dividing the rank (" + std::to_string(n) + ")");
        std::vector<int> s;
        for (int block = 0; block < n / u; ++block)
            for (int i = 1; i < u; ++i) s.push_back(block * u + i);
        return s;
    }
    throw std::invalid_argument("unknown Levi fixture '" + name + "'");
}

std::string table1_row(const RootSystem& rs, int u, const LeviDatum& levi) {
    const int n = rs.rank;
    if (levi.j == n && u == rs.coxeter + 1) return "principal, u = h+1";
    if (rs.kind == CartanKind{'E', 7} && u == 7 && levi.label() == "A6") return "e7, u = 7, A6";
    const char f = rs.kind.family;
    if (f == 'E' || f == 'F' || f == 'G') return "";
    // classical rows: Levi of type A_{u-1}^c with n = u c (u = 1: zero nilpotent)
    bool blocks = n % u == 0;
    if (u == 1) {
        blocks = levi.j == 0;
    } else {
        for (const auto& k : levi.components)
            if (!(k == CartanKind{'A', u - 1})) blocks = false;
        if (static_cast<int>(levi.components.size()) * u != n) blocks = false;
    }
    if (!blocks) return "";
    if (f == 'A') return "sl(ul+1), [u,...,u,1]";
    if (u % 2 == 0) return "";
    if (f == 'B') return "so(ul+1), [u,...,u,1], u odd, l even";
    if (f == 'C') return "sp(ul), [u,...,u], u odd, l even";
    return "so(ul), [u,...,u], u odd, l even";
}

Table1Report table1_scan(int max_rank, int max_u) {
    Table1Report rep{max_rank, max_u, {}};
    std::vector<CartanKind> kinds;
    for (int n = 1; n <= max_rank; ++n) kinds.push_back({'A', n});
    for (int n = 2; n <= max_rank; ++n) kinds.push_back({'B', n});
    for (int n = 3; n <= max_rank; ++n) kinds.push_back({'C', n});
    for (int n = 4; n <= max_rank; ++n) kinds.push_back({'D', n});
    for (int n = 6; n <= std::min(8, max_rank); ++n) kinds.push_back({'E', n});
    if (max_rank >= 4) kinds.push_back({'F', 4});
    if (max_rank >= 2) kinds.push_back({'G', 2});
    for (const auto& kind : kinds) {
        auto rs = build_root_system(kind);
        std::vector<LeviDatum> levis;
        for (std::uint32_t mask = 0; mask < (1u << rs->rank); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < rs->rank; ++i)
                if (mask & (1u << i)) s.push_back(i + 1);
            levis.push_back(levi_datum(*rs, s));
        }
        for (int u = 1; u <= max_u; ++u) {
            if (std::gcd(u, rs->dual_coxeter) != 1 || std::gcd(u, rs->lacing) != 1) continue;
            std::set<std::string> reported;
            for (const auto& L : levis) {
                if (count_closed_form(*rs, u, L) != 1) continue;
                if (!reported.insert(L.label()).second) continue;
                rep.hits.push_back({kind, u, L.subset, L.label(), table1_row(*rs, u, L)});
            }
        }
    }
    return rep;
}

}  // namespace affadm
