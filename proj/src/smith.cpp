#include "affadm/smith.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace affadm {

namespace {

IntMat identity(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    if (a.empty()) return {};
    if (a[0].size() != b.size()) throw std::invalid_argument("mat_mul: dimension mismatch");
    IntMat c(a.size(), IntVec(b.empty() ? 0 : b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

SmithForm smith_normal_form(const IntMat& M) {
    const std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
    IntMat A = M;
    SmithForm f{identity(rows), identity(cols), identity(cols), {}};

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(A[i], A[j]);
        std::swap(f.U[i], f.U[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& r : A) std::swap(r[i], r[j]);
        for (auto& r : f.V) std::swap(r[i], r[j]);
        std::swap(f.V_inv[i], f.V_inv[j]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, std::int64_t q) {  // row_dst += q row_src
        for (std::size_t j = 0; j < cols; ++j) A[dst][j] += q * A[src][j];
        for (std::size_t j = 0; j < rows; ++j) f.U[dst][j] += q * f.U[src][j];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, std::int64_t q) {  // col_dst += q col_src
        for (std::size_t i = 0; i < rows; ++i) A[i][dst] += q * A[i][src];
        for (std::size_t i = 0; i < cols; ++i) f.V[i][dst] += q * f.V[i][src];
        for (std::size_t j = 0; j < cols; ++j) f.V_inv[src][j] -= q * f.V_inv[dst][j];
    };

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (A[i][j] != 0 && (pi == rows || std::llabs(A[i][j]) < std::llabs(A[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) break;
            if (pi != t) swap_rows(pi, t);
            if (pj != t) swap_cols(pj, t);
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (A[i][t] == 0) continue;
                add_row(i, t, -(A[i][t] / A[t][t]));
                if (A[i][t] != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (A[t][j] == 0) continue;
                add_col(j, t, -(A[t][j] / A[t][t]));
                if (A[t][j] != 0) dirty = true;
            }
            if (dirty) continue;
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (A[i][j] % A[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            add_row(t, bad, 1);
        }
        if (A[t][t] < 0) {
            for (auto& x : A[t]) x = -x;
            for (auto& x : f.U[t]) x = -x;
        }
    }
    for (std::size_t t = 0; t < steps; ++t) f.diagonal.push_back(A[t][t]);
    return f;
}

}  // namespace affadm
