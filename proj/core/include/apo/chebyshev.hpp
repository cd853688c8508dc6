#pragma once

#include <complex>
#include <vector>

namespace apo {

/// Recurrence polynomials r_k: r_{-1} = 0, r_0 = 1,
/// r_k(w) = -w r_{k-1}(w) - r_{k-2}(w). These are Chebyshev polynomials of
/// the second kind under a sign change, r_k(w) = U_k(-w/2). Evaluation runs
/// the recurrence, which is the stable route on |w| <= 2.
double r_eval(int k, double omega);

/// Dense coefficients of r_k from the explicit binomial expansion,
/// constant term first.
std::vector<double> r_coeffs(int k);

/// The s admissible amplitude sums: the roots of r_s, listed explicitly.
struct OmegaSet {
    int s = 1;
    std::vector<double> values;  // values[alpha-1] = 2 cos(pi*alpha/(s+1)), decreasing

    double at(int alpha) const { return values.at(static_cast<size_t>(alpha) - 1); }
};

OmegaSet omega_set(int s);

/// Coefficients [r_0(w), ..., r_{s-1}(w)] of the node polynomial
/// R_{s-1}(w; t) = sum_k r_k(w) t^k.
std::vector<double> R_coeffs(int s, double omega);

/// Closed-form roots of R_{s-1}(w; t) at w = -2 cos(pi*alpha/(s+1)):
/// the (s+1)-th roots of (-1)^alpha with exp(±i pi alpha/(s+1)) removed.
/// Returns s-1 distinct unimodular values, closed under conjugation.
std::vector<std::complex<double>> R_root_set(int s, int alpha);

}  // namespace apo
