#pragma once

#include <complex>
#include <vector>

#include "apo/prony.hpp"

namespace apo {

/// A degenerate moment system together with the small power nodes added to
/// make its determinant nonzero.
struct AugmentedMoments {
    MomentData base;
    std::vector<double> eps_nodes;  // pairwise distinct, in (0, 0.1)
    int s_aug = 0;

    std::vector<Complex> moment_vector() const;  // S_l + sum_k eps_k^l
};

struct NonregularResult {
    ComplexPoly gstar;          // renormalized limit polynomial
    int s_aug = 0;              // number of augmentation nodes used
    double instability = 0.0;   // relative disagreement of the two finest extrapolants
    std::vector<double> eps0_levels;
    std::vector<ComplexPoly> level_polys;  // per-level renormalized polynomials
};

/// Recovery for consistent systems whose generating polynomial vanishes
/// identically: augment the moments with s_aug small power nodes, divide by
/// the node separation product, and extrapolate the level polynomials to
/// eps -> 0. The nonzero roots of the result approximate the true nodes.
/// Throws NotDegenerate when the generating polynomial is not zero, and
/// ExtrapolationUnstable when the eps levels disagree.
NonregularResult nonregular_generating_poly(const MomentData& md);

struct OmegaPerturbRow {
    double eps = 0.0;
    double zero_weight = 0.0;  // |Z| of the node at the origin
    double node_drift = 0.0;   // max distance of the other nodes to the closed form
};

struct OmegaPerturbReport {
    int s = 0;
    int alpha = 0;
    double omega = 0.0;
    std::vector<OmegaPerturbRow> rows;
    double ratio_min = 0.0;  // of |Z|/eps across the schedule
    double ratio_max = 0.0;
    bool ratio_bounded = false;  // max/min <= 10
    bool drift_ok = false;       // node_drift < 10*eps at every level
};

/// Validates the second regularization route for mu = 2: replace omega by
/// omega + eps, solve the now-regular system, and track the vanishing weight
/// and the node drift against the closed-form solution. Diagnostic only.
OmegaPerturbReport omega_perturb_validate(int s, int alpha, const std::vector<double>& eps_schedule);

/// Third route: the generating polynomial with the far moment sigma_n
/// replaced by eps. Linear in eps; at eps = 0 it reduces to generating_poly.
/// Requires n = s*mu - 1.
ComplexPoly tail_perturb_poly(const MomentData& md, Complex eps);

/// The cofactor multiplying eps in tail_perturb_poly: the corner minor of
/// the bordered determinant. Its roots mirror (reciprocate) the node
/// polynomial's roots whenever its leading factor is nonzero.
ComplexPoly tail_cofactor_poly(const MomentData& md);

}  // namespace apo
