#pragma once

#include "affadm/admissible.hpp"
#include "affadm/smith.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace affadm {

/// Largest |W_f| enumerated element by element.
inline constexpr std::uint64_t kBruteForceGate = 1000000;

class GateExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TorsionClass {
    IntVec coords;  // Smith coordinates, 0 <= coords[i] < d_i
    RatVec lift;    // representative in simple-coroot coordinates

    bool operator==(const TorsionClass& o) const { return coords == o.coords; }
};

/// S_u = P^vee / u Q^vee via the Smith form of u * (Cartan matrix), whose rows are
/// the simple coroots in fundamental-coweight coordinates.
class SuQuotient {
public:
    SuQuotient(const RootSystem& rs, int u);

    int u() const { return u_; }
    const IntVec& invariants() const { return smith_.diagonal; }
    std::uint64_t order() const { return order_; }

    TorsionClass reduce(const RatVec& b) const;         // b in simple-coroot coordinates
    TorsionClass reduce_coweight(const IntVec& x) const;
    TorsionClass element(std::uint64_t index) const;    // mixed-radix enumeration
    std::uint64_t index_of(const TorsionClass& x) const;
    IntVec coweight_lift(const TorsionClass& x) const;

private:
    const RootSystem* rs_;
    int u_;
    SmithForm smith_;
    std::uint64_t order_ = 1;
};

SuQuotient s_u_quotient(const RootSystem& rs, int u);

TorsionClass weyl_action_on_s_u(const RootSystem& rs, const SuQuotient& q, const WeylElement& w, const TorsionClass& x);

/// W_f with the coweight-coordinate matrix of each element, built under the gate.
struct ParabolicGroup {
    std::vector<WeylElement> elements;
    std::vector<IntVec> coweight;
};

ParabolicGroup parabolic_group(const RootSystem& rs, const LeviDatum& levi);

struct OrbitReport {
    std::size_t orbit_size = 0;
    std::size_t stabilizer_order = 0;
    bool free = false;
    int stabilizer_sign_sum = 0;
    std::vector<TorsionClass> members;
};

OrbitReport stabilizer_order(const RootSystem& rs, const SuQuotient& q, const TorsionClass& x, const LeviDatum& levi);
OrbitReport stabilizer_order(const SuQuotient& q, const TorsionClass& x, const ParabolicGroup& group);

/// Number of w-fixed points of S_u, by exhaustive count.
std::uint64_t fixed_point_count(const RootSystem& rs, const SuQuotient& q, const WeylElement& w);

/// Dimension of the fixed space of w.
int fixed_dimension(const RootSystem& rs, const WeylElement& w);

bool is_levi_admissible(const RootSystem& rs, const PiElement& p, const PiUSet& pu, const LeviDatum& levi);

/// Sigma_u member -> class id through S_u; checks that pi_b -> b mod uQ^vee is a bijection.
struct ClassIndex {
    std::map<IntVec, int> class_of;  // Smith coordinates -> class id
};

ClassIndex class_index(const RootSystem& rs, const SuQuotient& q, const std::vector<AdmissibleClass>& classes);

/// Class reached from class c by the linear action of w.
int act_on_class(const RootSystem& rs, const SuQuotient& q, const ClassIndex& idx,
                 const std::vector<AdmissibleClass>& classes, const WeylElement& w, int c);

struct LeviEnumeration {
    std::vector<AdmissibleClass> classes;        // all of Adm_k
    std::vector<int> admissible;                 // class ids passing the Levi test
    std::vector<std::vector<int>> orbits;        // W_f-orbits of those ids, each sorted
    std::vector<AdmissibleClass> representatives;  // minimal id per orbit
};

LeviEnumeration enumerate_levi_admissible(const RootSystem& rs, int u, const LeviDatum& levi);

/// (1/|W_f|) u^{l-j} prod (u - m_i), with integrality enforced.
std::int64_t count_closed_form(const RootSystem& rs, int u, const LeviDatum& levi);

/// Free W_f-orbit count on S_u divided by e; throws GateExceeded outside the gate.
std::int64_t count_brute_force(const RootSystem& rs, int u, const LeviDatum& levi);

/// Named Levi subsets: "principal", "A6" (E7), "row" (classical block pattern for u), "none".
std::vector<int> levi_fixture(const RootSystem& rs, const std::string& name, int u);

struct Table1Hit {
    CartanKind kind;
    int u = 0;
    std::vector<int> subset;
    std::string levi;
    std::string row;  // empty when no table row accounts for the hit
};

struct Table1Report {
    int max_rank = 0;
    int max_u = 0;
    std::vector<Table1Hit> hits;
};

/// Table row label matching (rs, u, levi) by family, rank and Levi type, or "".
std::string table1_row(const RootSystem& rs, int u, const LeviDatum& levi);

Table1Report table1_scan(int max_rank, int max_u);

}  // namespace affadm
