#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "apo/poly.hpp"

namespace apo::detail {

using CLD = std::complex<long double>;

// Determinant via LU with partial pivoting, in extended precision. The
// matrix is consumed. Row-major n*n.
inline CLD lu_det(std::vector<CLD>& a, int n) {
    CLD det = 1.0L;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        long double best = std::abs(a[static_cast<size_t>(col) * n + col]);
        for (int r = col + 1; r < n; ++r) {
            const long double v = std::abs(a[static_cast<size_t>(r) * n + col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0L) return CLD(0.0L);
        if (piv != col) {
            for (int c = col; c < n; ++c)
                std::swap(a[static_cast<size_t>(piv) * n + c], a[static_cast<size_t>(col) * n + c]);
            det = -det;
        }
        const CLD pivot = a[static_cast<size_t>(col) * n + col];
        det *= pivot;
        for (int r = col + 1; r < n; ++r) {
            const CLD f = a[static_cast<size_t>(r) * n + col] / pivot;
            if (f == CLD(0.0L)) continue;
            for (int c = col + 1; c < n; ++c)
                a[static_cast<size_t>(r) * n + c] -= f * a[static_cast<size_t>(col) * n + c];
        }
    }
    return det;
}

// Gaussian elimination with partial pivoting for a dense complex system.
// Returns empty on a (numerically) singular matrix.
inline std::vector<Complex> gauss_solve(std::vector<Complex> a, std::vector<Complex> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(a[static_cast<size_t>(col) * n + col]);
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(a[static_cast<size_t>(r) * n + col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) return {};
        if (piv != col) {
            for (int c = col; c < n; ++c)
                std::swap(a[static_cast<size_t>(piv) * n + c], a[static_cast<size_t>(col) * n + c]);
            std::swap(b[static_cast<size_t>(piv)], b[static_cast<size_t>(col)]);
        }
        const Complex pivot = a[static_cast<size_t>(col) * n + col];
        for (int r = col + 1; r < n; ++r) {
            const Complex f = a[static_cast<size_t>(r) * n + col] / pivot;
            if (f == Complex(0.0)) continue;
            for (int c = col + 1; c < n; ++c)
                a[static_cast<size_t>(r) * n + c] -= f * a[static_cast<size_t>(col) * n + c];
            b[static_cast<size_t>(r)] -= f * b[static_cast<size_t>(col)];
        }
    }
    std::vector<Complex> x(static_cast<size_t>(n));
    for (int r = n - 1; r >= 0; --r) {
        Complex acc = b[static_cast<size_t>(r)];
        for (int c = r + 1; c < n; ++c) acc -= a[static_cast<size_t>(r) * n + c] * x[static_cast<size_t>(c)];
        x[static_cast<size_t>(r)] = acc / a[static_cast<size_t>(r) * n + r];
    }
    return x;
}

}  // namespace apo::detail
