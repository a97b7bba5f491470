#pragma once

#include "affadm/rational.hpp"

namespace affadm {

/// U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
    IntMat U, V, V_inv;
    IntVec diagonal;
};

SmithForm smith_normal_form(const IntMat& M);

IntMat mat_mul(const IntMat& a, const IntMat& b);

}  // namespace affadm
