#pragma once

#include <complex>
#include <vector>

namespace apo {

using Complex = std::complex<double>;

/// Dense univariate polynomial with complex coefficients, constant term first.
struct ComplexPoly {
    std::vector<Complex> coeffs;

    ComplexPoly() = default;
    explicit ComplexPoly(std::vector<Complex> c) : coeffs(std::move(c)) {}
    static ComplexPoly from_real(const std::vector<double>& c);

    // Coefficients below rel_tol * max_abs() count as zero for degree and
    // structure decisions.
    static constexpr double kZeroTol = 1e-10;

    double max_abs() const;
    int degree(double rel_tol = kZeroTol) const;  // -1 for the zero polynomial
    bool is_zero(double abs_floor) const;         // every |c_k| < abs_floor
    Complex eval(Complex z) const;
};

struct RootOptions {
    int max_iter = 2000;
    double step_tol = 1e-13;
    double radius = 1.05;        // initial guesses sit on this circle
    double residual_tol = 1e-8;  // relative backward-error bound per root
};

/// All roots of p, multiplicity included. Zero roots are split off by
/// trimming near-zero low-order coefficients; the rest come from
/// simultaneous (Durand-Kerner) iteration. Throws NoConvergence when the
/// iteration stalls or a residual check fails, std::invalid_argument when
/// the trimmed degree is < 1.
std::vector<Complex> poly_roots(const ComplexPoly& p, const RootOptions& opts = {});

}  // namespace apo
