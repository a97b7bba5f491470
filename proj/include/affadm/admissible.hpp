#pragma once

#include "affadm/affine_weyl.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace affadm {

/// Rejected level; `violated` names the failing condition, e.g. "gcd(u,h^vee)".
class LevelError : public std::invalid_argument {
public:
    LevelError(const std::string& what, std::string violated)
        : std::invalid_argument(what), violated_(std::move(violated)) {}
    const std::string& violated() const { return violated_; }

private:
    std::string violated_;
};

struct LevelData {
    int u = 1;
    Rational k;      // -h^vee + h^vee/u
    Rational shift;  // k + h^vee
};

LevelData validate_level(const RootSystem& rs, int u);

/// {uc - theta^vee} followed by the simple coroots alpha_1^vee..alpha_l^vee.
struct PiUSet {
    std::vector<AffineCoroot> coroots;
};

PiUSet pi_u_set(const RootSystem& rs, int u);

bool is_u_admissible(const RootSystem& rs, const AffineWeylElement& x, const PiUSet& pu);

bool sigma_u_membership(const RootSystem& rs, int u, const RatVec& b);

/// Weight in pairing coordinates <lambda, alpha_i^vee>, level and delta coefficient.
struct AdmissibleWeight {
    RatVec finite_part;
    Rational level;
    Rational delta;
    Rational anomaly;

    /// Equality modulo C delta.
    bool same_class(const AdmissibleWeight& o) const { return finite_part == o.finite_part && level == o.level; }
};

struct AdmissibleClass {
    PiElement rep;
    std::vector<PiElement> orbit;  // sorted by coweight coordinates
    AdmissibleWeight weight;
    int class_id = 0;
};

/// pi_b . (k varpi_0) = pi_b(k varpi_0 + rho) - rho.
AdmissibleWeight realize_weight(const RootSystem& rs, const PiElement& p, const LevelData& lv);

Rational anomaly(const RootSystem& rs, const AdmissibleWeight& w, const LevelData& lv);

/// Integer coordinates of b in the fundamental coweight basis.
IntVec coweight_key(const RootSystem& rs, const RatVec& b);

/// Antidominant b_minus in the dilated alcove, i.e. u + (theta^vee, b_minus) >= 0.
std::vector<RatVec> dilated_alcove(const RootSystem& rs, int u);

/// All members of Sigma_u, sorted by coweight coordinates.
std::vector<PiElement> enumerate_sigma_u(const RootSystem& rs, int u);

std::vector<AdmissibleClass> enumerate_admissible(const RootSystem& rs, int u);

}  // namespace affadm
