#pragma once

#include "affadm/modular.hpp"

#include <optional>
#include <string>
#include <vector>

namespace affadm {

enum class CheckStatus { Pass, Fail, Skip, Diagnostic };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string module;
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct Tolerances {
    double identity = 1e-10;  // exact identities evaluated in floating point
    double ratio = 1e-9;      // intertwiner ratio and projector commutators
    double relation = 1e-8;   // SL(2,Z) relations
};

struct VerifyOptions {
    std::optional<std::vector<int>> levi;  // all single-node Levis when absent
    Tolerances tol;
    Eigen::Index matrix_limit = 1000;      // modular checks are skipped above this size
    std::uint64_t scan_limit = 4000000;    // brute-force box scans beyond this are skipped
};

/// Every module invariant for (rs, u). Diagnostic entries never gate.
std::vector<CheckResult> verify_suite(const RootSystem& rs, int u, const VerifyOptions& opt = {});

bool all_passed(const std::vector<CheckResult>& results);

/// Independent enumeration: all t_b w with b in the coweight box |x_i| <= bound and
/// w in W-bar that send Pi^vee_u to positive coroots.
std::vector<AffineWeylElement> scan_admissible_box(const RootSystem& rs, int u, std::int64_t bound);

/// Box radius containing every member of Sigma_u. Coordinates of b are <beta, b_minus> for roots
/// beta, bounded by <theta, -b_minus> <= u; one extra layer makes escapes visible.
std::int64_t admissible_box_bound(const RootSystem& rs, int u);

}  // namespace affadm
