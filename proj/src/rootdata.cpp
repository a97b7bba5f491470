#include "affadm/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace affadm {

namespace {

void set_edge(IntMat& a, int i, int j, int aij, int aji) {
    a[i][j] = aij;
    a[j][i] = aji;
}

IntMat cartan_matrix(const CartanKind& k) {
    const int n = k.rank;
    IntMat a(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    switch (k.family) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) set_edge(a, i, i + 1, -1, -1);
            break;
        case 'B':
            for (int i = 0; i + 2 < n; ++i) set_edge(a, i, i + 1, -1, -1);
            set_edge(a, n - 2, n - 1, -1, -2);  // alpha_n short
            break;
        case 'C':
            for (int i = 0; i + 2 < n; ++i) set_edge(a, i, i + 1, -1, -1);
            set_edge(a, n - 2, n - 1, -2, -1);  // alpha_n long
            break;
        case 'D':
            for (int i = 0; i + 3 < n; ++i) set_edge(a, i, i + 1, -1, -1);
            set_edge(a, n - 3, n - 2, -1, -1);
            set_edge(a, n - 3, n - 1, -1, -1);
            break;
        case 'E':
            set_edge(a, 0, 2, -1, -1);
            set_edge(a, 1, 3, -1, -1);
            for (int i = 2; i + 1 < n; ++i) set_edge(a, i, i + 1, -1, -1);
            break;
        case 'F':
            set_edge(a, 0, 1, -1, -1);
            set_edge(a, 1, 2, -1, -2);  // alpha_3, alpha_4 short
            set_edge(a, 2, 3, -1, -1);
            break;
        case 'G':
            set_edge(a, 0, 1, -3, -1);  // alpha_1 short
            break;
        default:
            throw std::invalid_argument("unknown family");
    }
    return a;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

bool is_nonneg(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
}

std::int64_t sum_of(const IntVec& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

bool height_lex_less(const IntVec& a, const IntVec& b) {
    auto ha = sum_of(a), hb = sum_of(b);
    if (ha != hb) return ha < hb;
    return a < b;
}

IntVec mat_mul(const IntVec& x, const IntVec& y, int n) {
    IntVec z(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            auto xik = x[static_cast<std::size_t>(i * n + k)];
            if (xik == 0) continue;
            for (int j = 0; j < n; ++j)
                z[static_cast<std::size_t>(i * n + j)] += xik * y[static_cast<std::size_t>(k * n + j)];
        }
    return z;
}

IntVec identity_matrix(int n) {
    IntVec m(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
    return m;
}

/// Column-negative test: w(alpha_i^vee) is a negative coroot.
bool column_negative(const IntVec& m, int n, int i) {
    for (int r = 0; r < n; ++r) {
        auto x = m[static_cast<std::size_t>(r * n + i)];
        if (x != 0) return x < 0;
    }
    return false;
}

}  // namespace

CartanKind CartanKind::parse(const std::string& text) {
    if (text.size() < 2) throw std::invalid_argument("bad root system type '" + text + "'");
    CartanKind k;
    k.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    const std::string digits = text.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("bad root system type '" + text + "'");
    if (digits.size() > 3) throw std::invalid_argument("bad root system type '" + text + "'");
    k.rank = std::stoi(digits);
    validate_kind(k);
    return k;
}

std::string CartanKind::name() const { return std::string(1, family) + std::to_string(rank); }

void validate_kind(const CartanKind& k) {
    bool ok = false;
    switch (k.family) {
        case 'A': ok = k.rank >= 1; break;
        case 'B': ok = k.rank >= 2; break;
        case 'C': ok = k.rank >= 2; break;
        case 'D': ok = k.rank >= 4; break;
        case 'E': ok = k.rank >= 6 && k.rank <= 8; break;
        case 'F': ok = k.rank == 4; break;
        case 'G': ok = k.rank == 2; break;
        default: break;
    }
    if (!ok) throw std::invalid_argument("invalid rank " + std::to_string(k.rank) + " for family " + std::string(1, k.family));
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : w.matrix) h = (h ^ static_cast<std::size_t>(x + 7)) * 1099511628211ull;
    return h;
}

std::vector<IntVec> positive_coroots_of(const IntMat& a) {
    const int n = static_cast<int>(a.size());
    std::set<IntVec> seen;
    std::queue<IntVec> todo;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        seen.insert(e);
        todo.push(e);
    }
    while (!todo.empty()) {
        IntVec v = todo.front();
        todo.pop();
        for (int j = 0; j < n; ++j) {
            std::int64_t p = 0;
            for (int k = 0; k < n; ++k) p += v[k] * a[k][j];
            if (p == 0) continue;
            IntVec w = v;
            w[j] -= p;
            if (seen.insert(w).second) todo.push(w);
        }
    }
    std::vector<IntVec> pos;
    for (const auto& v : seen)
        if (is_nonneg(v)) pos.push_back(v);
    std::sort(pos.begin(), pos.end(), height_lex_less);
    return pos;
}

std::vector<int> exponents_from_heights(const std::vector<IntVec>& positive) {
    std::map<std::int64_t, int> count;
    std::int64_t top = 0;
    for (const auto& v : positive) {
        auto h = sum_of(v);
        ++count[h];
        top = std::max(top, h);
    }
    std::vector<int> ex;
    for (std::int64_t k = 1; k <= top; ++k) {
        int mult = count[k] - count[k + 1];
        for (int r = 0; r < mult; ++r) ex.push_back(static_cast<int>(k));
    }
    return ex;
}

std::uint64_t weyl_group_order(const CartanKind& k) {
    auto fact = [](int n) {
        std::uint64_t f = 1;
        for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
        return f;
    };
    switch (k.family) {
        case 'A': return fact(k.rank + 1);
        case 'B':
        case 'C': return (std::uint64_t{1} << k.rank) * fact(k.rank);
        case 'D': return (std::uint64_t{1} << (k.rank - 1)) * fact(k.rank);
        case 'E': return k.rank == 6 ? 51840ull : k.rank == 7 ? 2903040ull : 696729600ull;
        case 'F': return 1152;
        case 'G': return 12;
        default: throw std::invalid_argument("unknown family");
    }
}

RootSystemPtr build_root_system(const CartanKind& kind) {
    validate_kind(kind);
    auto rs = std::make_shared<RootSystem>();
    const int n = kind.rank;
    rs->kind = kind;
    rs->rank = n;
    rs->cartan = cartan_matrix(kind);
    const IntMat& a = rs->cartan;

    // Paired closure of (root, coroot) so that each coroot knows its root.
    std::map<IntVec, IntVec> root_of;
    {
        std::queue<std::pair<IntVec, IntVec>> todo;
        for (int i = 0; i < n; ++i) {
            IntVec e(n, 0);
            e[i] = 1;
            root_of[e] = e;
            todo.push({e, e});
        }
        while (!todo.empty()) {
            auto [root, co] = todo.front();
            todo.pop();
            for (int j = 0; j < n; ++j) {
                std::int64_t pr = 0, pc = 0;
                for (int k = 0; k < n; ++k) {
                    pr += root[k] * a[j][k];  // <root, alpha_j^vee>
                    pc += co[k] * a[k][j];    // <alpha_j, coroot>
                }
                IntVec r2 = root, c2 = co;
                r2[j] -= pr;
                c2[j] -= pc;
                if (root_of.emplace(c2, r2).second) todo.push({r2, c2});
            }
        }
    }
    for (const auto& [co, root] : root_of)
        if (is_nonneg(co)) rs->positive_coroots.push_back(co);
    std::sort(rs->positive_coroots.begin(), rs->positive_coroots.end(), height_lex_less);
    for (const auto& co : rs->positive_coroots) rs->positive_roots.push_back(root_of.at(co));

    // Highest root and its coroot.
    std::size_t top = 0;
    for (std::size_t i = 0; i < rs->positive_roots.size(); ++i)
        if (sum_of(rs->positive_roots[i]) > sum_of(rs->positive_roots[top])) top = i;
    const IntVec& theta = rs->positive_roots[top];
    rs->theta_coroot = rs->positive_coroots[top];
    rs->marks.assign(1, 1);
    rs->comarks.assign(1, 1);
    for (int i = 0; i < n; ++i) {
        rs->marks.push_back(theta[i]);
        rs->comarks.push_back(rs->theta_coroot[i]);
    }
    rs->coxeter = static_cast<int>(sum_of(rs->marks));
    rs->dual_coxeter = static_cast<int>(sum_of(rs->comarks));
    for (int i = 0; i < n; ++i)
        if (rs->marks[i + 1] == 1) rs->J.push_back(i + 1);

    rs->lacing = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) rs->lacing = std::max<int>(rs->lacing, static_cast<int>(a[i][j] * a[j][i]));

    rs->gram.assign(n, RatVec(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs->gram[i][j] = Rational(a[i][j] * rs->marks[j + 1], rs->comarks[j + 1]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rs->gram[i][j] != rs->gram[j][i]) throw std::logic_error("invariant form is not symmetric for " + kind.name());
    for (int k = 1; k <= n; ++k) {
        RatMat minor(k, RatVec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor[i][j] = rs->gram[i][j];
        if (determinant(minor) <= 0) throw std::logic_error("invariant form is not positive definite");
    }
    rs->gram_inv = inverse(rs->gram);
    const RatMat ar = to_rational(a);
    rs->cartan_inv = inverse(ar);
    rs->e = determinant(ar).numerator();

    rs->m = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational p = dot(rs->cartan_inv[i], mat_vec(rs->gram, rs->cartan_inv[j]));
            rs->m = lcm64(rs->m, p.denominator());
        }

    rs->rho_nu = mat_vec(rs->gram_inv, RatVec(n, Rational(1)));
    rs->rho_norm2 = 0;
    for (const auto& x : rs->rho_nu) rs->rho_norm2 += x;

    rs->exponents = exponents_from_heights(rs->positive_roots);
    rs->weyl_order = weyl_group_order(kind);

    // Coxeter relations, checked once at build time.
    for (int i = 0; i < n; ++i) {
        auto si = rs->simple_reflection(i).matrix;
        if (mat_mul(si, si, n) != identity_matrix(n)) throw std::logic_error("s_i^2 != 1");
        for (int j = i + 1; j < n; ++j) {
            static const int order[] = {2, 3, 4, 6};
            int mij = order[a[i][j] * a[j][i]];
            auto p = mat_mul(si, rs->simple_reflection(j).matrix, n);
            IntVec q = identity_matrix(n);
            for (int r = 0; r < mij; ++r) q = mat_mul(q, p, n);
            if (q != identity_matrix(n)) throw std::logic_error("braid relation fails");
        }
    }
    return rs;
}

Rational RootSystem::pair_simple(int i, const RatVec& v) const {
    Rational s(0);
    for (int k = 0; k < rank; ++k) s += v[k] * cartan[k][i];
    return s;
}

RatVec RootSystem::to_coweight_coords(const RatVec& v) const {
    RatVec x(rank);
    for (int i = 0; i < rank; ++i) x[i] = pair_simple(i, v);
    return x;
}

RatVec RootSystem::from_coweight_coords(const RatVec& x) const { return vec_mat(x, cartan_inv); }

RatVec RootSystem::fundamental_coweight(int i) const {
    if (i < 1 || i > rank) throw std::out_of_range("fundamental coweight index");
    return cartan_inv[i - 1];
}

std::int64_t RootSystem::height(const IntVec& coroot) const { return sum_of(coroot); }

Rational RootSystem::norm2(const RatVec& v) const { return dot(v, mat_vec(gram, v)); }

bool RootSystem::is_coroot(const IntVec& v) const {
    IntVec neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    auto& pc = positive_coroots;
    return std::find(pc.begin(), pc.end(), v) != pc.end() || std::find(pc.begin(), pc.end(), neg) != pc.end();
}

bool RootSystem::is_long_coroot(const IntVec& v) const { return norm2(to_rational(v)) > 2; }

bool RootSystem::in_coweight_lattice(const RatVec& v) const {
    for (int i = 0; i < rank; ++i)
        if (!is_integral(pair_simple(i, v))) return false;
    return true;
}

WeylElement RootSystem::identity() const { return WeylElement{rank, identity_matrix(rank), {}}; }

WeylElement RootSystem::simple_reflection(int i) const {
    IntVec m = identity_matrix(rank);
    for (int k = 0; k < rank; ++k) m[static_cast<std::size_t>(i * rank + k)] -= cartan[k][i];
    return WeylElement{rank, m, {i + 1}};
}

WeylElement RootSystem::from_matrix(IntVec matrix) const {
    IntVec cur = matrix;
    std::vector<int> rev;
    for (;;) {
        int found = -1;
        for (int i = 0; i < rank && found < 0; ++i)
            if (column_negative(cur, rank, i)) found = i;
        if (found < 0) break;
        cur = mat_mul(cur, simple_reflection(found).matrix, rank);
        rev.push_back(found + 1);
        if (rev.size() > positive_coroots.size()) throw std::logic_error("descent did not terminate");
    }
    if (cur != identity_matrix(rank)) throw std::logic_error("matrix is not a Weyl group element");
    std::reverse(rev.begin(), rev.end());
    return WeylElement{rank, std::move(matrix), std::move(rev)};
}

WeylElement RootSystem::from_word(const std::vector<int>& word) const {
    IntVec m = identity_matrix(rank);
    for (int i : word) {
        if (i < 1 || i > rank) throw std::out_of_range("simple reflection index");
        m = mat_mul(m, simple_reflection(i - 1).matrix, rank);
    }
    return from_matrix(std::move(m));
}

WeylElement RootSystem::multiply(const WeylElement& x, const WeylElement& y) const {
    return from_matrix(mat_mul(x.matrix, y.matrix, rank));
}

WeylElement RootSystem::inverse(const WeylElement& x) const {
    std::vector<int> w(x.word.rbegin(), x.word.rend());
    IntVec m = identity_matrix(rank);
    for (int i : w) m = mat_mul(m, simple_reflection(i - 1).matrix, rank);
    return WeylElement{rank, std::move(m), std::move(w)};
}

WeylElement RootSystem::reflection(std::size_t idx) const {
    const IntVec& root = positive_roots.at(idx);
    const IntVec& co = positive_coroots.at(idx);
    IntVec m = identity_matrix(rank);
    // column j: e_j - <beta, alpha_j^vee> beta^vee, <beta, alpha_j^vee> = sum_k d_k a_jk
    for (int j = 0; j < rank; ++j) {
        std::int64_t p = 0;
        for (int k = 0; k < rank; ++k) p += root[k] * cartan[j][k];
        for (int r = 0; r < rank; ++r) m[static_cast<std::size_t>(r * rank + j)] -= p * co[r];
    }
    return from_matrix(std::move(m));
}

RatVec RootSystem::act(const WeylElement& w, const RatVec& v) const {
    RatVec out(rank, Rational(0));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            auto x = w.at(i, j);
            if (x != 0) out[i] += v[j] * x;
        }
    return out;
}

IntVec RootSystem::act(const WeylElement& w, const IntVec& v) const {
    IntVec out(rank, 0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) out[i] += w.at(i, j) * v[j];
    return out;
}

std::vector<WeylElement> RootSystem::enumerate_parabolic(const std::vector<int>& nodes) const {
    std::vector<WeylElement> out{identity()};
    std::unordered_set<WeylElement, WeylElementHash> seen{out.front()};
    std::vector<WeylElement> gens;
    for (int i : nodes) gens.push_back(simple_reflection(i));
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& g : gens) {
            WeylElement next{rank, mat_mul(out[head].matrix, g.matrix, rank), out[head].word};
            next.word.push_back(g.word.front());
            if (seen.insert(next).second) out.push_back(std::move(next));
        }
    }
    return out;
}

std::vector<WeylElement> RootSystem::enumerate_weyl_group() const {
    std::vector<int> all(rank);
    std::iota(all.begin(), all.end(), 0);
    return enumerate_parabolic(all);
}

IntVec RootSystem::coweight_matrix(const WeylElement& w) const {
    IntVec out(static_cast<std::size_t>(rank * rank));
    for (int j = 0; j < rank; ++j) {
        RatVec x(rank, Rational(0));
        x[j] = 1;
        RatVec y = to_coweight_coords(act(w, from_coweight_coords(x)));
        for (int i = 0; i < rank; ++i) {
            if (!is_integral(y[i])) throw std::logic_error("Weyl action does not preserve P^vee");
            out[static_cast<std::size_t>(i * rank + j)] = y[i].numerator();
        }
    }
    return out;
}

Rational inner(const RootSystem& rs, const RatVec& v, const RatVec& w) {
    if (v.size() != static_cast<std::size_t>(rs.rank) || w.size() != v.size())
        throw std::invalid_argument("inner: dimension mismatch");
    return dot(v, mat_vec(rs.gram, w));
}

std::string LeviDatum::label() const {
    if (components.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) s += "x";
        s += components[i].name();
    }
    return s;
}

LeviDatum levi_datum(const RootSystem& rs, const std::vector<int>& subset) {
    std::vector<int> nodes = subset;
    std::sort(nodes.begin(), nodes.end());
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
        throw std::invalid_argument("Levi subset has duplicate indices");
    for (int i : nodes)
        if (i < 1 || i > rs.rank) throw std::invalid_argument("Levi subset index " + std::to_string(i) + " out of range");

    LeviDatum L;
    L.subset = nodes;
    L.j = static_cast<int>(nodes.size());

    std::vector<bool> done(nodes.size(), false);
    for (std::size_t s = 0; s < nodes.size(); ++s) {
        if (done[s]) continue;
        std::vector<int> comp{nodes[s]};
        done[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (std::size_t t = 0; t < nodes.size(); ++t)
                if (!done[t] && rs.cartan[comp[head] - 1][nodes[t] - 1] != 0) {
                    done[t] = true;
                    comp.push_back(nodes[t]);
                }
        std::sort(comp.begin(), comp.end());
        const int n = static_cast<int>(comp.size());
        IntMat sub(n, IntVec(n));
        bool simply_laced = true;
        int max_bond = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                sub[i][j] = rs.cartan[comp[i] - 1][comp[j] - 1];
                if (i != j) {
                    int bond = static_cast<int>(sub[i][j] * sub[j][i]);
                    max_bond = std::max(max_bond, bond);
                    if (bond > 1) simply_laced = false;
                }
            }
        auto pos = positive_coroots_of(sub);
        const auto N = static_cast<int>(pos.size());
        CartanKind k{'A', n};
        if (simply_laced) {
            if (N == n * (n + 1) / 2) k = {'A', n};
            else if (n >= 4 && N == n * (n - 1)) k = {'D', n};
            else if (N == 36 && n == 6) k = {'E', 6};
            else if (N == 63 && n == 7) k = {'E', 7};
            else if (N == 120 && n == 8) k = {'E', 8};
            else throw std::logic_error("unrecognized simply-laced component");
        } else if (max_bond == 3) {
            k = {'G', 2};
        } else if (n == 4 && N == 24) {
            k = {'F', 4};
        } else if (N == n * n) {
            int short_roots = 0;  // a root is short iff its coroot is long
            for (int i : comp)
                if (rs.gram[i - 1][i - 1] > 2) ++short_roots;
            k = (n == 2 || short_roots == 1) ? CartanKind{'B', n} : CartanKind{'C', n};
        } else {
            throw std::logic_error("unrecognized component");
        }
        L.components.push_back(k);
        L.component_nodes.push_back(comp);
        auto ex = exponents_from_heights(pos);
        L.exponents.insert(L.exponents.end(), ex.begin(), ex.end());
        L.order *= weyl_group_order(k);
    }
    std::sort(L.exponents.begin(), L.exponents.end());
    for (const auto& co : rs.positive_coroots) {
        bool inside = true;
        for (int i = 0; i < rs.rank; ++i)
            if (co[i] != 0 && !std::binary_search(nodes.begin(), nodes.end(), i + 1)) inside = false;
        if (inside) L.coroots.push_back(co);
    }
    return L;
}

}  // namespace affadm
