#include "apo/prony.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "apo/chebyshev.hpp"
#include "detail_linalg.hpp"

namespace apo {

MomentData MomentData::b_prime(int n, int mu, double omega) {
    if (n < 1) throw std::invalid_argument("MomentData: n must be >= 1");
    if (mu < 1 || mu > n) throw std::invalid_argument("MomentData: mu out of 1..n");
    MomentData md;
    md.n = n;
    md.mu = mu;
    md.omega = omega;
    md.sigma.assign(static_cast<size_t>(2 * n), 0.0);
    md.sigma_at(0) = omega;
    md.sigma_at(mu) = 1.0;
    md.sigma_at(-mu) = 1.0;
    return md;
}

double MomentData::sigma_at(int l) const {
    if (l < 1 - n || l > n) throw std::out_of_range("MomentData: sigma index out of [1-n, n]");
    return sigma[static_cast<size_t>(l + n - 1)];
}

double& MomentData::sigma_at(int l) {
    if (l < 1 - n || l > n) throw std::out_of_range("MomentData: sigma index out of [1-n, n]");
    return sigma[static_cast<size_t>(l + n - 1)];
}

std::vector<Complex> MomentData::moment_vector() const {
    std::vector<Complex> S(static_cast<size_t>(2 * n));
    for (int l = 0; l < 2 * n; ++l) S[static_cast<size_t>(l)] = sigma[static_cast<size_t>(l)];
    return S;
}

double min_pairwise_distance(const std::vector<Complex>& zs) {
    double d = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < zs.size(); ++i)
        for (size_t j = i + 1; j < zs.size(); ++j) d = std::min(d, std::abs(zs[i] - zs[j]));
    return d;
}

bool unimodular(const std::vector<Complex>& zs, double tol) {
    for (const auto& z : zs)
        if (std::abs(std::abs(z) - 1.0) > tol) return false;
    return true;
}

bool conjugation_closed(const std::vector<Complex>& zs, double tol) {
    for (const auto& z : zs) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& w : zs) best = std::min(best, std::abs(std::conj(z) - w));
        if (best > tol) return false;
    }
    return true;
}

namespace {

// Coefficients of prod_j (z - z_j), constant first.
std::vector<Complex> node_product(const std::vector<Complex>& nodes) {
    std::vector<Complex> c{1.0};
    for (const auto& z : nodes) {
        c.push_back(0.0);
        for (size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - z * c[k];
        c[0] = -z * c[0];
    }
    return c;
}

// Remove the factor (z - z0) by synthetic division; input is the full
// product, so the division is exact up to rounding.
std::vector<Complex> deflate(const std::vector<Complex>& c, Complex z0) {
    const size_t n = c.size() - 1;
    std::vector<Complex> q(n);
    Complex carry = c[n];
    for (size_t k = n; k-- > 0;) {
        q[k] = carry;
        carry = c[k] + z0 * carry;
    }
    return q;
}

std::vector<Complex> lagrange_weights(const std::vector<Complex>& nodes,
                                      const std::vector<Complex>& rhs) {
    const size_t n = nodes.size();
    const std::vector<Complex> full = node_product(nodes);
    std::vector<Complex> w(n);
    for (size_t k = 0; k < n; ++k) {
        const std::vector<Complex> q = deflate(full, nodes[k]);
        // denominator prod_{j != k}(z_k - z_j) = q(z_k)
        Complex denom = 0.0;
        for (size_t j = q.size(); j-- > 0;) denom = denom * nodes[k] + q[j];
        Complex acc = 0.0;
        for (size_t l = 0; l < n; ++l) acc += q[l] * rhs[l];
        w[k] = acc / denom;
    }
    return w;
}

}  // namespace

std::vector<Complex> vandermonde_solve(const std::vector<Complex>& nodes,
                                       const std::vector<Complex>& rhs) {
    const size_t n = nodes.size();
    if (n == 0 || rhs.size() != n)
        throw std::invalid_argument("vandermonde_solve: need |rhs| == |nodes| >= 1");
    if (n > 1 && min_pairwise_distance(nodes) < 1e-12)
        throw SingularNodes("vandermonde_solve: nodes closer than 1e-12");

    const std::vector<Complex> w = lagrange_weights(nodes, rhs);

    // Independent route: plain elimination on the power matrix.
    std::vector<Complex> a(n * n);
    for (size_t l = 0; l < n; ++l) {
        for (size_t k = 0; k < n; ++k)
            a[l * n + k] = (l == 0) ? Complex(1.0) : a[(l - 1) * n + k] * nodes[k];
    }
    const std::vector<Complex> w2 = detail::gauss_solve(std::move(a), rhs);
    if (w2.empty()) throw SingularNodes("vandermonde_solve: singular power matrix");

    double wscale = 0.0;
    for (const auto& v : w) wscale = std::max(wscale, std::abs(v));
    for (size_t k = 0; k < n; ++k)
        if (std::abs(w[k] - w2[k]) > 1e-9 * std::max(1.0, wscale))
            throw SingularNodes("vandermonde_solve: the two solution routes disagree");
    return w;
}

std::vector<Complex> amplitudes_for_delta(const std::vector<Complex>& nodes, int mu) {
    const size_t n = nodes.size();
    if (n == 0) throw std::invalid_argument("amplitudes_for_delta: empty node set");
    if (mu < 1 || static_cast<size_t>(mu) > n)
        throw std::invalid_argument("amplitudes_for_delta: mu out of 1..n");
    if (n > 1 && min_pairwise_distance(nodes) < 1e-12)
        throw SingularNodes("amplitudes_for_delta: nodes closer than 1e-12");
    std::vector<Complex> rhs(n, 0.0);
    rhs[static_cast<size_t>(mu) - 1] = 1.0;
    return lagrange_weights(nodes, rhs);
}

namespace {

// Signed cofactors of the first row of the bordered moment determinant:
// rows r = 1..n hold S[(r-1)+c], c = 0..n.
ComplexPoly bordered_cofactors(const std::vector<Complex>& S, int n) {
    std::vector<Complex> g(static_cast<size_t>(n) + 1);
    std::vector<detail::CLD> m(static_cast<size_t>(n) * n);
    for (int skip = 0; skip <= n; ++skip) {
        for (int r = 0; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c <= n; ++c) {
                if (c == skip) continue;
                m[static_cast<size_t>(r) * n + cc] =
                    detail::CLD(S[static_cast<size_t>(r + c)]);
                ++cc;
            }
        }
        const detail::CLD det = detail::lu_det(m, n);
        const double sign = (skip % 2 == 0) ? 1.0 : -1.0;
        g[static_cast<size_t>(skip)] =
            Complex(static_cast<double>(det.real()), static_cast<double>(det.imag())) * sign;
    }
    return ComplexPoly(std::move(g));
}

}  // namespace

ComplexPoly generating_poly_from_moments(const std::vector<Complex>& S, int n) {
    if (n < 1) throw std::invalid_argument("generating_poly: n must be >= 1");
    if (S.size() != static_cast<size_t>(2 * n))
        throw std::invalid_argument("generating_poly: need 2n moments");
    return bordered_cofactors(S, n);
}

ComplexPoly generating_poly(const MomentData& md) {
    return generating_poly_from_moments(md.moment_vector(), md.n);
}

double generating_zero_floor(const std::vector<Complex>& S, int n) {
    // Hadamard bound of the moment block, with entries normalized away from
    // zero, times a long-double noise allowance.
    double had = 1.0;
    for (int r = 0; r < n; ++r) {
        double norm2 = 0.0;
        for (int c = 0; c <= n; ++c) norm2 += std::norm(S[static_cast<size_t>(r + c)]);
        had *= std::sqrt(std::max(norm2, 1.0));
    }
    return 1e-13 * had;
}

const char* to_string(DegenerateReason r) {
    switch (r) {
        case DegenerateReason::none: return "none";
        case DegenerateReason::degree_drop: return "degree_drop";
        case DegenerateReason::repeated_roots: return "repeated_roots";
        case DegenerateReason::zero_polynomial: return "zero_polynomial";
    }
    return "?";
}

RegularityReport regularity_check(const ComplexPoly& g, int n, double zero_floor) {
    RegularityReport rep;
    if (g.is_zero(zero_floor) || g.max_abs() == 0.0) {
        rep.reason = DegenerateReason::zero_polynomial;
        rep.degree = -1;
        return rep;
    }
    rep.degree = g.degree();
    if (rep.degree < n) {
        rep.reason = DegenerateReason::degree_drop;
        return rep;
    }
    rep.roots = poly_roots(g);
    if (min_pairwise_distance(rep.roots) < 1e-9) {
        rep.reason = DegenerateReason::repeated_roots;
        return rep;
    }
    rep.regular = true;
    return rep;
}

NodeSet prony_solve(const MomentData& md) {
    const std::vector<Complex> S = md.moment_vector();
    const ComplexPoly g = generating_poly_from_moments(S, md.n);
    const RegularityReport rep = regularity_check(g, md.n, generating_zero_floor(S, md.n));
    if (!rep.regular)
        throw Degenerate(std::string("prony_solve: generating polynomial not regular (") +
                         to_string(rep.reason) + ")");

    const std::vector<Complex> nodes = rep.roots;
    const std::vector<Complex> head(S.begin(), S.begin() + md.n);
    const std::vector<Complex> weights = vandermonde_solve(nodes, head);

    double sscale = 1.0;
    for (const auto& v : S) sscale = std::max(sscale, std::abs(v));
    std::vector<Complex> zpow(nodes.size(), Complex(1.0));  // z^0 = 1 even for a zero node
    for (int l = 0; l < 2 * md.n; ++l) {
        Complex acc = 0.0;
        for (size_t k = 0; k < nodes.size(); ++k) acc += weights[k] * zpow[k];
        if (std::abs(acc - S[static_cast<size_t>(l)]) > 1e-8 * sscale)
            throw Degenerate("prony_solve: moment residual check failed at l=" + std::to_string(l));
        for (size_t k = 0; k < nodes.size(); ++k) zpow[k] *= nodes[k];
    }
    double wmax = 0.0;
    for (const auto& w : weights) wmax = std::max(wmax, std::abs(w));
    for (const auto& w : weights)
        if (std::abs(w) < 1e-9 * std::max(1.0, wmax))
            throw Degenerate("prony_solve: vanishing weight, system not regular");

    return NodeSet{nodes, weights, WeightConvention::Z};
}

namespace {

double rel_dev(double dev, double scale) { return dev / std::max(scale, 1e-300); }

}  // namespace

StructureReport structure_checks(const MomentData& md) {
    StructureReport rep;
    const int n = md.n;
    const int mu = md.mu;
    const std::vector<Complex> S = md.moment_vector();
    const ComplexPoly g = generating_poly_from_moments(S, n);
    const double zero_floor = generating_zero_floor(S, n);
    const double scale = std::max(g.max_abs(), zero_floor);

    auto gr = [&](int k) { return g.coeffs[static_cast<size_t>(k)].real(); };

    // symmetry of the coefficient list for unit-circle root sets
    {
        const RegularityReport reg = regularity_check(g, n, zero_floor);
        if (reg.degree == n && !reg.roots.empty() && unimodular(reg.roots, 1e-6)) {
            rep.symmetry.applicable = true;
            double dplus = 0.0, dminus = 0.0;
            for (int k = 0; k <= n; ++k) {
                dplus = std::max(dplus, std::abs(gr(k) - gr(n - k)));
                dminus = std::max(dminus, std::abs(gr(k) + gr(n - k)));
            }
            rep.symmetry_sign = (dplus <= dminus) ? 1 : -1;
            rep.symmetry.deviation = rel_dev(std::min(dplus, dminus), scale);
            rep.symmetry.ok = rep.symmetry.deviation < 1e-8;
        }
    }

    // n = s*mu - 1 comb: only g_{mu*k-1} survive, tied by the recurrence values
    if ((n + 1) % mu == 0 && (n + 1) / mu >= 2) {
        const int s = (n + 1) / mu;
        rep.comb.applicable = true;
        double dev = 0.0;
        for (int k = 0; k <= n; ++k)
            if ((k + 1) % mu != 0) dev = std::max(dev, std::abs(gr(k)));
        for (int k = 1; k <= s; ++k)
            dev = std::max(dev, std::abs(gr(mu * k - 1) - gr(mu - 1) * r_eval(k - 1, md.omega)));
        rep.comb.deviation = rel_dev(dev, scale);
        rep.comb.ok = rep.comb.deviation < 1e-8;

        if (mu == 2) {
            rep.mu2_factor.applicable = true;
            const double rs = r_eval(s, md.omega);
            const double expected = ((s + 1) % 2 == 0) ? rs : -rs;
            const double dev2 = std::abs(gr(1) - expected);
            rep.mu2_factor.deviation = rel_dev(dev2, std::max(scale, std::abs(rs)));
            rep.mu2_factor.ok = rep.mu2_factor.deviation < 1e-8;
        }
    }

    // even-case necessary condition
    {
        const int s = n / mu;
        if ((n - mu * s) % 2 == 0) {
            rep.even_case.applicable = true;
            const double u = ((s % 2 == 0) ? 1.0 : -1.0) * r_eval(s, md.omega);
            rep.even_case_value = u;
            if (std::abs(u - 1.0) < 1e-8)
                rep.even_case_sign = 1;
            else if (std::abs(u + 1.0) < 1e-8)
                rep.even_case_sign = -1;
            rep.even_case.deviation = std::min(std::abs(u - 1.0), std::abs(u + 1.0));
            rep.even_case.ok = rep.even_case_sign != 0;
        }
    }

    // leading coefficient vs the node/weight product form, for regular systems
    try {
        const NodeSet ns = prony_solve(md);
        rep.product_formula.applicable = true;
        Complex prod = ((n % 2 == 0) ? 1.0 : -1.0);
        for (const auto& w : ns.weights) prod *= w;
        for (size_t i = 0; i < ns.nodes.size(); ++i)
            for (size_t j = i + 1; j < ns.nodes.size(); ++j) {
                const Complex d = ns.nodes[i] - ns.nodes[j];
                prod *= d * d;
            }
        rep.product_formula.deviation =
            std::abs(g.coeffs[static_cast<size_t>(n)] - prod) / std::max(std::abs(prod), 1e-300);
        rep.product_formula.ok = rep.product_formula.deviation < 1e-6;
    } catch (const Degenerate&) {
        // not regular; the check does not apply
    }

    return rep;
}

}  // namespace apo
