#pragma once

#include "affadm/rootdata.hpp"

#include <vector>

namespace affadm {

/// Real affine coroot alpha^vee + n c.
struct AffineCoroot {
    IntVec finite;
    std::int64_t level = 0;

    bool positive() const;
    bool operator==(const AffineCoroot&) const = default;
    auto operator<=>(const AffineCoroot&) const = default;
};

/// Whether a + nc is a real coroot of the untwisted coroot system
/// (long coroots only occur at levels divisible by r^vee).
bool is_real_affine_coroot(const RootSystem& rs, const AffineCoroot& a);

/// t_b w, b in simple-coroot coordinates.
struct AffineWeylElement {
    CartanKind kind;
    RatVec b;
    WeylElement w;

    bool operator==(const AffineWeylElement& o) const { return kind == o.kind && b == o.b && w == o.w; }
};

AffineWeylElement identity_element(const RootSystem& rs);
AffineWeylElement translation(const RootSystem& rs, const RatVec& b);
AffineWeylElement finite_element(const RootSystem& rs, const WeylElement& w);
/// s_0 = t_{theta^vee} s_theta.
AffineWeylElement affine_simple_reflection(const RootSystem& rs, int i);

AffineWeylElement compose(const RootSystem& rs, const AffineWeylElement& x, const AffineWeylElement& y);
AffineWeylElement invert(const RootSystem& rs, const AffineWeylElement& x);

/// (t_b w)(a + nc) = w a + (n - (w a, b)) c.
AffineCoroot act(const RootSystem& rs, const AffineWeylElement& x, const AffineCoroot& a);

/// Phi(x) = positive coroots sent to negative ones. Levels are scanned up to
/// max_a |(a, b)| + 1, which bounds every inversion: x(a + nc) has level
/// n - (wa, b) < 0 only if n < |(wa, b)|.
std::vector<AffineCoroot> inversion_set(const RootSystem& rs, const AffineWeylElement& x);

struct DescentResult {
    int length = 0;
    std::vector<int> word;         // affine simple reflections, 0 = s_0
    AffineWeylElement remainder;   // length-zero part: x = remainder * s_word
};

/// Length via right descents by affine simple reflections.
DescentResult length_by_descent(const RootSystem& rs, const AffineWeylElement& x);

/// t_b = pi_b u_b with b_minus = u_b(b) antidominant.
struct PiElement {
    RatVec b;
    WeylElement u_b;
    RatVec b_minus;
    AffineWeylElement element;  // pi_b = t_b u_b^{-1}
    int length = 0;
    int sign = 1;
};

PiElement antidominant_decomposition(const RootSystem& rs, const RatVec& b);

std::vector<PiElement> omega_generators(const RootSystem& rs);

/// pi_b pi_{u varpi_j} = pi_{b + u_b^{-1}(u varpi_j)}; j is 1-based and must lie in J.
PiElement omega_u_translate(const RootSystem& rs, const PiElement& p, int j, int u);

}  // namespace affadm
