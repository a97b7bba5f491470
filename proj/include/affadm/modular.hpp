#pragma once

#include "affadm/spaltenstein.hpp"

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace affadm {

using cplx = std::complex<double>;

/// The root of unity e^{2 pi i r}, r exact.
struct PhasePower {
    Rational exponent;

    cplx value() const;
    PhasePower operator*(const PhasePower& o) const { return {exponent + o.exponent}; }
    PhasePower inverse() const { return {-exponent}; }
    bool is_one() const { return is_integral(exponent); }
    bool operator==(const PhasePower& o) const { return is_integral(exponent - o.exponent); }
};

/// q^x on the fixed branch q^x = e^{-2 pi i h^vee x / u}.
PhasePower q_power(const RootSystem& rs, int u, const Rational& x);

enum class Flavor { KW, DAHA };

struct ModularMatrices {
    Flavor flavor = Flavor::KW;
    std::vector<int> index;                     // class ids in matrix order
    Eigen::MatrixXcd S, T;
    double s_scale = 1.0;                       // real factor of every S entry
    std::vector<std::vector<Rational>> s_phase; // S = s_scale * e^{2 pi i s_phase}
    std::vector<Rational> t_phase;              // T = diag(e^{2 pi i t_phase})
    std::map<std::string, double> construction; // internal cross-check residuals
};

struct SignEntry {
    int row = 0, col = 0;
    cplx ratio;  // literal ratio divided by the constant a
};

struct ComparisonReport {
    cplx a{0.0, 0.0};
    double max_deviation = 0.0;
    std::vector<SignEntry> sign_diagnostics;
    std::map<std::string, double> residuals;
    std::map<std::string, bool> flags;
    std::vector<int> permutation;  // S^2 (normalized) as a permutation of positions, if it is one
};

/// Kac-Wakimoto S and T on the canonical class order.
ModularMatrices kw_matrices(const RootSystem& rs, const LevelData& lv, const std::vector<AdmissibleClass>& classes);

/// S = zeta^{(b,b')} through the specialized Macdonald evaluation, T from the inverse Gaussian.
ModularMatrices daha_specialized_matrices(const RootSystem& rs, const LevelData& lv,
                                          const std::vector<AdmissibleClass>& classes);

class MuBulletError : public std::runtime_error {
public:
    MuBulletError(const std::string& what, AffineCoroot offending)
        : std::runtime_error(what), offending_(std::move(offending)) {}
    const AffineCoroot& offending() const { return offending_; }

private:
    AffineCoroot offending_;
};

/// mu_bullet at q = zeta, t = q^kappa: product over Phi(pi_b). Throws MuBulletError on a
/// vanishing denominator.
cplx mu_bullet_at_specialization(const RootSystem& rs, const LevelData& lv, const PiElement& p);

/// D_b = eps(u_b) e^{-2 pi i (b, rho-bar)}; always +-1 since 2 rho-bar lies in the root lattice.
int intertwiner_sign(const RootSystem& rs, const PiElement& p);

ComparisonReport intertwiner_comparison(const RootSystem& rs, const LevelData& lv,
                                        const std::vector<AdmissibleClass>& classes, const ModularMatrices& kw,
                                        const ModularMatrices& daha);

/// max|(ST)^3 - S^2| and max|S^4 - I|; DAHA S is first divided by u^{l/2} for the permutation test.
ComparisonReport sl2z_residuals(const ModularMatrices& m, int u = 1, int rank = 0);

/// Searches scalars s, c with (sS)^4 = I and (sS cT)^3 = (sS)^2; reports the best residuals.
struct LiftReport {
    cplx s_scalar, t_scalar;
    double s4_residual = 0.0;
    double st3_residual = 0.0;
    double s4_proportionality = 0.0;  // distance of S^4 from a multiple of I, relative
};

LiftReport sl2z_lift(const Eigen::MatrixXcd& S, const Eigen::MatrixXcd& T);

struct EfRestriction {
    Eigen::MatrixXd E;
    std::vector<int> basis;      // class ids r with e_f chi_r spanning the image
    std::int64_t rank = 0;
    std::int64_t closed_form = 0;
    double commutator_S = 0.0;
    double commutator_T = 0.0;
    double projector_defect = 0.0;  // max|E^2 - |W_f| E|
    double restriction_defect = 0.0;  // max|S B - B S_f| and T alike
    ModularMatrices restricted;
};

EfRestriction ef_projector_and_restriction(const RootSystem& rs, const LevelData& lv, const LeviDatum& levi,
                                           const std::vector<AdmissibleClass>& classes, const ModularMatrices& m);

template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.size() == 0 ? 0.0 : static_cast<double>(m.cwiseAbs().maxCoeff());
}

/// Tolerance scaled by dimension beyond 100.
double scaled_tolerance(double tol, Eigen::Index n);

}  // namespace affadm
