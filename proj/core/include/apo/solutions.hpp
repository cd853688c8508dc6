#pragma once

#include <vector>

#include "apo/prony.hpp"
#include "apo/trig.hpp"

namespace apo {

enum class Family { MuEqualsN, MuOne, MuTwo, General };
const char* to_string(Family f);

struct FamilySpec {
    Family family = Family::MuEqualsN;
    int mu = 1;
    int s = 0;      // branch count parameter (n = s*mu - 1 for MuTwo/General)
    int n = 1;
    int alpha = 1;  // root-branch selector
    double omega = 0.0;
};

/// Converts a solved node set into a real operator. Phases are -arg(z_k)
/// wrapped to (-pi, pi]; amplitudes are X_k = Z_k z_k^{n-1} (or Y_k / z_k).
/// An imaginary amplitude residue above 1e-9 is an internal error and throws
/// NonRealAmplitude; below it the value is truncated to its real part.
/// Terms come out sorted by phase. Zero-amplitude terms are dropped.
Apo apo_from_nodes(const NodeSet& ns, int n, int mu, int valid_degree);

/// Equal amplitudes 1/n at the uniformly spaced phases 2*pi*(k-1)/n.
/// Returns the mu = n harmonic of degree-n inputs exactly.
Apo solve_mu_equals_n(int n);

/// First-harmonic operator, n >= 2, alpha = 1..n+1. Nodes are the closed-form
/// root set for s = n+1; amplitudes use the signed closed form with
/// omega = -2 cos(pi*alpha/(n+2)). Exact on degrees <= n.
Apo solve_mu_one(int n, int alpha = 1);

/// Second-harmonic operator for n = 2s-1, s >= 2, alpha = 1..s, with
/// omega = 2 cos(pi*alpha/(s+1)) (alpha walks the admissible sums in
/// decreasing order). 2s-2 terms, exact on degrees <= n; weights come from
/// the first 2s-2 moment equations.
Apo solve_mu_two(int s, int alpha = 1);

/// General family for mu >= 2, n = s*mu - 1, alpha = 1..s, with
/// omega = -2 cos(pi*alpha/(s+1)) and closed-form weights
/// Z_k = z_k / prod_{j != k} (z_k - z_j). n - mu + 1 terms, exact on
/// degrees <= n - 1.
Apo solve_general(int mu, int s, int alpha = 1);

/// All mu-th roots of the closed-form node set for branch alpha of
/// R_{s-1}: the ((s+1)mu)-th roots of (-1)^alpha minus the mu-th roots of
/// exp(±i pi alpha/(s+1)). (s-1)*mu values.
std::vector<Complex> family_nodes(int s, int alpha, int mu);

struct EvenCaseCandidate {
    double omega = 0.0;
    int sign = 0;  // which of U_s(omega/2) = ±1 the candidate satisfies
};

/// Candidate amplitude sums permitted by the necessary condition
/// U_s(omega/2) = ±1 when n - mu*floor(n/mu) is even; s = floor(n/mu).
/// Values are exact (trigonometric parametrization), deduplicated, sorted
/// ascending. Throws NotEvenCase when n - mu*s is odd.
std::vector<EvenCaseCandidate> even_case_filter(int n, int mu);

}  // namespace apo
