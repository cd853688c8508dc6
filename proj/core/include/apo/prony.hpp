#pragma once

#include <complex>
#include <vector>

#include "apo/errors.hpp"
#include "apo/poly.hpp"

namespace apo {

/// Right-hand sides sigma_l, l in [1-n, n], of the two-sided moment system
/// sum_k X_k z_k^l = sigma_l, with sigma_0 = omega held separately as well.
struct MomentData {
    int n = 1;
    int mu = 1;
    double omega = 0.0;
    std::vector<double> sigma;  // sigma[l + n - 1] holds sigma_l

    /// Delta-type data: sigma_{±mu} = 1, sigma_0 = omega, all others zero.
    static MomentData b_prime(int n, int mu, double omega);

    double sigma_at(int l) const;
    double& sigma_at(int l);

    /// One-sided moments S_l = sigma_{1-n+l}, l = 0..2n-1.
    std::vector<Complex> moment_vector() const;
};

enum class WeightConvention { Y, Z };

/// Nodes z_k with their weights. Y-convention weights satisfy
/// sum Y_k z_k^{l-1} = sigma_l (l = 1..n); Z-convention weights satisfy
/// sum Z_k z_k^l = S_l (l = 0..2n-1), with X_k = Z_k z_k^{n-1}.
struct NodeSet {
    std::vector<Complex> nodes;
    std::vector<Complex> weights;
    WeightConvention convention = WeightConvention::Z;
};

double min_pairwise_distance(const std::vector<Complex>& zs);
bool unimodular(const std::vector<Complex>& zs, double tol = 1e-10);
bool conjugation_closed(const std::vector<Complex>& zs, double tol = 1e-9);

/// Solves sum_k w_k z_k^{l-1} = rhs_l, l = 1..n, for the weights.
/// Two independent routes are evaluated: Lagrange coefficients obtained by
/// deflating the full node product, and plain Gaussian elimination. They must
/// agree; disagreement or near-coincident nodes raises SingularNodes.
std::vector<Complex> vandermonde_solve(const std::vector<Complex>& nodes,
                                       const std::vector<Complex>& rhs);

/// Weights for the delta right-hand side rhs_l = delta_{l,mu} via the
/// elementary-symmetric (deflation) form alone. 1 <= mu <= nodes.size().
std::vector<Complex> amplitudes_for_delta(const std::vector<Complex>& nodes, int mu);

/// Generating polynomial of the moment system: the bordered determinant with
/// first row (1, z, ..., z^n) over the Hankel block of moments. Coefficient k
/// is the signed cofactor of z^k.
ComplexPoly generating_poly(const MomentData& md);
ComplexPoly generating_poly_from_moments(const std::vector<Complex>& S, int n);

/// Noise floor below which the generating polynomial of these moments counts
/// as identically zero (scales with a Hadamard bound of the moment block).
double generating_zero_floor(const std::vector<Complex>& S, int n);

enum class DegenerateReason { none, degree_drop, repeated_roots, zero_polynomial };
const char* to_string(DegenerateReason r);

struct RegularityReport {
    bool regular = false;
    DegenerateReason reason = DegenerateReason::none;
    int degree = -1;
    std::vector<Complex> roots;  // filled when the polynomial was root-solved
};

/// Regular iff deg g = n and the roots are pairwise distinct.
/// zero_floor > 0 supplies the absolute threshold for the all-zero verdict.
RegularityReport regularity_check(const ComplexPoly& g, int n, double zero_floor = 0.0);

/// Classical pipeline: nodes from the generating polynomial's roots, weights
/// from the first n one-sided equations. Verifies all 2n residuals and that
/// no weight vanishes. Throws Degenerate when the system is not regular.
NodeSet prony_solve(const MomentData& md);

struct CheckResult {
    bool applicable = false;
    bool ok = false;
    double deviation = 0.0;
};

struct StructureReport {
    // g_k = ±g_{n-k} for real polynomials with conjugation-closed unit-circle roots
    CheckResult symmetry;
    int symmetry_sign = 0;
    // n = s*mu - 1: only g_{mu*k-1} survive and g_{mu*k-1} = g_{mu-1} r_{k-1}(omega)
    CheckResult comb;
    // mu = 2, n = 2s-1: g_1 = (-1)^{s+1} r_s(omega)
    CheckResult mu2_factor;
    // even n - mu*floor(n/mu): U_s(omega/2) = ±1 is necessary for regularity
    CheckResult even_case;
    int even_case_sign = 0;        // +1, -1, or 0 when neither holds
    double even_case_value = 0.0;  // U_s(omega/2)
    // regular systems: leading coefficient vs (-1)^n * prod Z_k * prod (z_k - z_j)^2
    CheckResult product_formula;
};

/// Evaluates the structural identities of the generating polynomial for the
/// given data and reports deviations; never throws on a failed identity.
StructureReport structure_checks(const MomentData& md);

}  // namespace apo
