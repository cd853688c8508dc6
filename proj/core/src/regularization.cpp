#include "apo/regularization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "apo/chebyshev.hpp"
#include "apo/solutions.hpp"

namespace apo {

std::vector<Complex> AugmentedMoments::moment_vector() const {
    std::vector<Complex> S = base.moment_vector();
    for (double e : eps_nodes) {
        double p = 1.0;
        for (auto& v : S) {
            v += p;
            p *= e;
        }
    }
    return S;
}

namespace {

std::vector<Complex> augmented_moments(const std::vector<Complex>& S, int s_aug, double eps0) {
    std::vector<Complex> out = S;
    for (int k = 1; k <= s_aug; ++k) {
        const double e = k * eps0;
        double p = 1.0;
        for (auto& v : out) {
            v += p;
            p *= e;
        }
    }
    return out;
}

double eps_separation_product(int s_aug, double eps0) {
    // prod_{k<j} (eps_k - eps_j)^2 with eps_k = k * eps0
    double prod = 1.0;
    for (int k = 1; k <= s_aug; ++k)
        for (int j = k + 1; j <= s_aug; ++j) {
            const double d = (k - j) * eps0;
            prod *= d * d;
        }
    return prod;
}

ComplexPoly scaled_level_poly(const std::vector<Complex>& S, int n, int s_aug, double eps0) {
    const ComplexPoly g = generating_poly_from_moments(augmented_moments(S, s_aug, eps0), n);
    const double denom = eps_separation_product(s_aug, eps0);
    ComplexPoly out = g;
    for (auto& c : out.coeffs) c /= denom;
    return out;
}

// Polynomial extrapolation of the level values to eps0 = 0 (Neville tableau).
std::vector<Complex> neville_to_zero(const std::vector<double>& xs,
                                     const std::vector<std::vector<Complex>>& fs) {
    const size_t m = xs.size();
    std::vector<std::vector<Complex>> t = fs;
    for (size_t level = 1; level < m; ++level)
        for (size_t i = 0; i + level < m; ++i) {
            const double xi = xs[i];
            const double xj = xs[i + level];
            for (size_t k = 0; k < t[i].size(); ++k)
                t[i][k] = (xi * t[i + 1][k] - xj * t[i][k]) / (xi - xj);
        }
    return t[0];
}

}  // namespace

NonregularResult nonregular_generating_poly(const MomentData& md) {
    const int n = md.n;
    const std::vector<Complex> S = md.moment_vector();
    const double zero_floor = generating_zero_floor(S, n);
    const ComplexPoly g0 = generating_poly_from_moments(S, n);
    if (!g0.is_zero(zero_floor))
        throw NotDegenerate("nonregular_generating_poly: generating polynomial is not zero");

    // Smallest number of added power nodes that turns the determinant on.
    const std::vector<double> levels{1e-2, 1e-3, 1e-4};
    int s_aug = 0;
    for (int trial = 1; trial <= n - 1; ++trial) {
        const std::vector<Complex> Sa = augmented_moments(S, trial, levels[0]);
        const ComplexPoly ga = generating_poly_from_moments(Sa, n);
        if (!ga.is_zero(generating_zero_floor(Sa, n))) {
            s_aug = trial;
            break;
        }
    }
    if (s_aug == 0)
        throw Error("nonregular_generating_poly: no augmentation up to n-1 nodes turned the "
                    "determinant on; moment data looks inconsistent");

    NonregularResult res;
    res.s_aug = s_aug;
    res.eps0_levels = levels;
    std::vector<std::vector<Complex>> level_coeffs;
    for (double eps0 : levels) {
        ComplexPoly q = scaled_level_poly(S, n, s_aug, eps0);
        level_coeffs.push_back(q.coeffs);
        res.level_polys.push_back(std::move(q));
    }

    // The two finest linear extrapolants must agree before the final stage.
    auto lin = [&](size_t i, size_t j) {
        std::vector<Complex> out(level_coeffs[i].size());
        for (size_t k = 0; k < out.size(); ++k)
            out[k] = (levels[i] * level_coeffs[j][k] - levels[j] * level_coeffs[i][k]) /
                     (levels[i] - levels[j]);
        return out;
    };
    const std::vector<Complex> p01 = lin(0, 1);
    const std::vector<Complex> p12 = lin(1, 2);
    double scale = 0.0;
    for (const auto& c : p12) scale = std::max(scale, std::abs(c));
    double dev = 0.0;
    for (size_t k = 0; k < p01.size(); ++k) dev = std::max(dev, std::abs(p01[k] - p12[k]));
    res.instability = dev / std::max(scale, 1e-300);
    if (res.instability > 1e-4)
        throw ExtrapolationUnstable("nonregular_generating_poly: eps levels disagree by " +
                                    std::to_string(res.instability));

    res.gstar = ComplexPoly(neville_to_zero(levels, level_coeffs));
    return res;
}

OmegaPerturbReport omega_perturb_validate(int s, int alpha,
                                          const std::vector<double>& eps_schedule) {
    if (s < 2) throw std::invalid_argument("omega_perturb_validate: s must be >= 2");
    if (alpha < 1 || alpha > s)
        throw std::invalid_argument("omega_perturb_validate: alpha out of 1..s");
    if (eps_schedule.empty())
        throw std::invalid_argument("omega_perturb_validate: empty schedule");

    OmegaPerturbReport rep;
    rep.s = s;
    rep.alpha = alpha;
    rep.omega = omega_set(s).at(alpha);
    const int n = 2 * s - 1;
    const std::vector<Complex> closed = family_nodes(s, s + 1 - alpha, 2);

    double rmin = std::numeric_limits<double>::infinity();
    double rmax = 0.0;
    bool drift_ok = true;
    for (double eps : eps_schedule) {
        const MomentData md = MomentData::b_prime(n, 2, rep.omega + eps);
        const NodeSet ns = prony_solve(md);

        OmegaPerturbRow row;
        row.eps = eps;
        double drift = 0.0;
        for (size_t k = 0; k < ns.nodes.size(); ++k) {
            if (std::abs(ns.nodes[k]) < 0.5) {
                row.zero_weight = std::abs(ns.weights[k]);
                continue;
            }
            double best = std::numeric_limits<double>::infinity();
            for (const auto& z : closed) best = std::min(best, std::abs(ns.nodes[k] - z));
            drift = std::max(drift, best);
        }
        row.node_drift = drift;
        if (drift >= 10.0 * eps) drift_ok = false;
        const double ratio = row.zero_weight / eps;
        rmin = std::min(rmin, ratio);
        rmax = std::max(rmax, ratio);
        rep.rows.push_back(row);
    }
    rep.ratio_min = rmin;
    rep.ratio_max = rmax;
    rep.ratio_bounded = rmax <= 10.0 * std::max(rmin, 1e-300);
    rep.drift_ok = drift_ok;
    return rep;
}

namespace {

void require_comb_shape(const MomentData& md, const char* who) {
    if ((md.n + 1) % md.mu != 0 || (md.n + 1) / md.mu < 2)
        throw std::invalid_argument(std::string(who) + ": needs n = s*mu - 1 with s >= 2");
}

}  // namespace

ComplexPoly tail_perturb_poly(const MomentData& md, Complex eps) {
    require_comb_shape(md, "tail_perturb_poly");
    std::vector<Complex> S = md.moment_vector();
    S.back() = eps;  // the far moment sigma_n sits in the corner only
    return generating_poly_from_moments(S, md.n);
}

ComplexPoly tail_cofactor_poly(const MomentData& md) {
    require_comb_shape(md, "tail_cofactor_poly");
    const std::vector<Complex> S = md.moment_vector();
    // Corner minor: same bordered structure one size down over S_0..S_{2n-3}.
    const std::vector<Complex> Shead(S.begin(), S.end() - 2);
    return generating_poly_from_moments(Shead, md.n - 1);
}

}  // namespace apo
