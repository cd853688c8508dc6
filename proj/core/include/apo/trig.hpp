#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "apo/errors.hpp"

namespace apo {

/// One harmonic component a*cos(kx) + b*sin(kx).
struct HarmonicCoeff {
    double a = 0.0;
    double b = 0.0;
};

/// Real trigonometric polynomial a0 + sum_{k=1..n} (a_k cos kx + b_k sin kx).
struct TrigPolynomial {
    int n = 1;                          // degree, >= 1
    double a0 = 0.0;                    // constant term
    std::vector<HarmonicCoeff> coeffs;  // coeffs[k-1] holds harmonic k

    void validate() const;  // throws std::invalid_argument on a malformed value
};

struct Harmonic {
    int mu = 1;
    double a = 0.0;
    double b = 0.0;
};

struct ApoTerm {
    double amplitude = 0.0;
    double phase = 0.0;  // radians, kept in (-pi, pi]
};

/// Amplitude-phase operator: T(x) -> sum_j X_j * T(x - lambda_j).
struct Apo {
    std::vector<ApoTerm> terms;
    int mu = 1;            // harmonic index the operator is built to return
    int valid_degree = 1;  // largest input degree the operator is exact on

    double omega() const;  // sum of amplitudes
    int order() const;     // distinct-phase terms with nonzero net amplitude
    void validate() const;
};

/// Wraps an angle into (-pi, pi].
double normalize_phase(double lambda);

double eval_poly(const TrigPolynomial& p, double x);
double eval_harmonic(const Harmonic& h, double x);

double apply_apo(const Apo& op, const TrigPolynomial& p, double x);

/// Operator output sampled on the uniform grid x_i = 2*pi*i/N, i = 0..N-1.
/// Same values as apply_apo at each grid point, computed through the
/// shifted-coefficient form so large grids stay cheap.
std::vector<double> apply_apo_grid(const Apo& op, const TrigPolynomial& p, int grid_points);

struct ExtractionResult {
    Harmonic harmonic;           // the (mu, a_mu, b_mu) component read from the input
    double offset = 0.0;         // a0 * omega, reported rather than silently removed
    double max_deviation = 0.0;  // max |H(x) - offset - tau_mu(x)| over the grid
    int grid_points = 0;
};

/// Reads off the target harmonic and measures how far the operator output is
/// from offset + tau_mu on the verification grid. Throws DegreeExceeded when
/// p.n > op.valid_degree.
ExtractionResult extract_harmonic(const Apo& op, const TrigPolynomial& p, int grid_points = 4096);

/// sum_j X_j z_j^beta with z_j = exp(-i lambda_j).
std::complex<double> power_sum(const Apo& op, std::int64_t beta);

enum class MaskKind {
    // Families built on nodes with z^(n+mu+1) = ±1: sums may be nonzero only
    // at beta == mu, beta == 0, or n <= beta <= n+mu, all modulo n+mu+1.
    HarmonicFamily,
    // Equal-amplitude operators on the n-th roots of unity: multiples of n only.
    CyclicFamily,
};

bool mask_allows(MaskKind kind, int mu, int n, std::int64_t beta);

struct SpectrumEntry {
    std::int64_t beta = 0;
    std::complex<double> value;
    bool allowed = false;
};

struct SpectrumReport {
    std::vector<SpectrumEntry> entries;
    std::vector<std::int64_t> violations;  // beta with |sum| >= tol outside the mask
    double tol = 0.0;

    bool ok() const { return violations.empty(); }
    void require() const;  // throws MaskViolation listing the offending beta
};

/// Scans power sums for beta = 1..beta_max and flags nonzero sums that fall
/// outside the allowed positions for the given family mask.
SpectrumReport series_mask_check(const Apo& op, int mu, int n, std::int64_t beta_max,
                                 double tol = 1e-10, MaskKind kind = MaskKind::HarmonicFamily);

// Deterministic test-signal helpers, shared by the CLI and the test suites.
double uniform_pm1(std::uint64_t& state);  // splitmix-style stream in [-1, 1]
TrigPolynomial random_trig_poly(int n, std::uint64_t seed, double a0 = 0.0);

}  // namespace apo
