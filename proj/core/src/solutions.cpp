#include "apo/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "apo/chebyshev.hpp"

namespace apo {

namespace {
constexpr double kPi = std::numbers::pi;
}

const char* to_string(Family f) {
    switch (f) {
        case Family::MuEqualsN: return "mu-equals-n";
        case Family::MuOne: return "mu-one";
        case Family::MuTwo: return "mu-two";
        case Family::General: return "general";
    }
    return "?";
}

Apo apo_from_nodes(const NodeSet& ns, int n, int mu, int valid_degree) {
    if (ns.nodes.size() != ns.weights.size())
        throw std::invalid_argument("apo_from_nodes: node/weight size mismatch");
    Apo op;
    op.mu = mu;
    op.valid_degree = valid_degree;
    double scale = 1.0;
    for (const auto& w : ns.weights) scale = std::max(scale, std::abs(w));
    for (size_t k = 0; k < ns.nodes.size(); ++k) {
        const Complex z = ns.nodes[k];
        if (std::abs(std::abs(z) - 1.0) > 1e-9)
            throw NonRealAmplitude("apo_from_nodes: node off the unit circle, |z| = " +
                                   std::to_string(std::abs(z)));
        Complex x = ns.weights[k];
        if (ns.convention == WeightConvention::Z) {
            for (int j = 0; j < n - 1; ++j) x *= z;  // X = Z z^{n-1}
        } else {
            x /= z;  // X = Y / z
        }
        if (std::abs(x.imag()) > 1e-9 * std::max(1.0, scale))
            throw NonRealAmplitude("apo_from_nodes: amplitude imaginary residue " +
                                   std::to_string(std::abs(x.imag())));
        if (x.real() == 0.0) continue;
        op.terms.push_back({x.real(), normalize_phase(-std::arg(z))});
    }
    std::sort(op.terms.begin(), op.terms.end(),
              [](const ApoTerm& a, const ApoTerm& b) { return a.phase < b.phase; });
    return op;
}

Apo solve_mu_equals_n(int n) {
    if (n < 1) throw std::invalid_argument("solve_mu_equals_n: n must be >= 1");
    Apo op;
    op.mu = n;
    op.valid_degree = n;
    for (int k = 1; k <= n; ++k)
        op.terms.push_back({1.0 / n, normalize_phase(2.0 * kPi * (k - 1) / n)});
    std::sort(op.terms.begin(), op.terms.end(),
              [](const ApoTerm& a, const ApoTerm& b) { return a.phase < b.phase; });
    return op;
}

Apo solve_mu_one(int n, int alpha) {
    if (n < 2) throw std::invalid_argument("solve_mu_one: n must be >= 2");
    if (alpha < 1 || alpha > n + 1)
        throw std::invalid_argument("solve_mu_one: alpha out of 1..n+1");
    const double phi = kPi * alpha / (n + 2);
    const std::vector<Complex> nodes = R_root_set(n + 1, alpha);
    const double sign = std::sin((n + 1) * phi) > 0.0 ? 1.0 : -1.0;

    NodeSet ns;
    ns.convention = WeightConvention::Y;
    ns.nodes = nodes;
    for (const auto& z : nodes) {
        // X = -sgn(sin((n+1)phi))/(n+2) * (z^2 - 2 z cos(phi) + 1) / z^{n+3};
        // stored as Y = X z so the shared conversion applies.
        Complex zp = 1.0;
        for (int j = 0; j < n + 3; ++j) zp *= z;
        const Complex x = -sign / (n + 2) * (z * z - 2.0 * std::cos(phi) * z + 1.0) / zp;
        ns.weights.push_back(x * z);
    }
    return apo_from_nodes(ns, n, 1, n);
}

std::vector<Complex> family_nodes(int s, int alpha, int mu) {
    if (mu < 1) throw std::invalid_argument("family_nodes: mu must be >= 1");
    const std::vector<Complex> base = R_root_set(s, alpha);
    std::vector<Complex> nodes;
    nodes.reserve(base.size() * static_cast<size_t>(mu));
    for (const auto& t : base) {
        const double ang = std::arg(t);
        for (int j = 0; j < mu; ++j)
            nodes.push_back(std::polar(1.0, (ang + 2.0 * kPi * j) / mu));
    }
    return nodes;
}

Apo solve_mu_two(int s, int alpha) {
    if (s < 2) throw std::invalid_argument("solve_mu_two: s must be >= 2");
    if (alpha < 1 || alpha > s) throw std::invalid_argument("solve_mu_two: alpha out of 1..s");
    const int n = 2 * s - 1;
    const int m = 2 * s - 2;
    // alpha indexes the admissible sums in decreasing order; the node branch
    // with that sum is s+1-alpha.
    const std::vector<Complex> nodes = family_nodes(s, s + 1 - alpha, 2);

    std::vector<Complex> rhs(static_cast<size_t>(m), 0.0);
    rhs[static_cast<size_t>(m) - 2] = 1.0;  // the delta sits second to last
    NodeSet ns;
    ns.convention = WeightConvention::Z;
    ns.nodes = nodes;
    ns.weights = vandermonde_solve(nodes, rhs);
    return apo_from_nodes(ns, n, 2, n);
}

Apo solve_general(int mu, int s, int alpha) {
    if (mu < 2) throw std::invalid_argument("solve_general: mu must be >= 2");
    if (s < 2) throw std::invalid_argument("solve_general: s must be >= 2");
    if (alpha < 1 || alpha > s) throw std::invalid_argument("solve_general: alpha out of 1..s");
    const int n = s * mu - 1;
    const std::vector<Complex> nodes = family_nodes(s, alpha, mu);

    NodeSet ns;
    ns.convention = WeightConvention::Z;
    ns.nodes = nodes;
    for (size_t k = 0; k < nodes.size(); ++k) {
        Complex denom = 1.0;
        for (size_t j = 0; j < nodes.size(); ++j)
            if (j != k) denom *= nodes[k] - nodes[j];
        ns.weights.push_back(nodes[k] / denom);
    }
    return apo_from_nodes(ns, n, mu, n - 1);
}

std::vector<EvenCaseCandidate> even_case_filter(int n, int mu) {
    if (mu < 1 || n < mu) throw std::invalid_argument("even_case_filter: need n >= mu >= 1");
    const int s = n / mu;
    if ((n - mu * s) % 2 != 0)
        throw NotEvenCase("even_case_filter: n - mu*floor(n/mu) = " +
                          std::to_string(n - mu * s) + " is odd");

    // Solutions of U_s(omega/2) = ±1 with omega = 2 cos(theta):
    //   +1: theta = 2 pi k / s        or theta = pi (2k+1) / (s+2)
    //   -1: theta = 2 pi k / (s+2)    or theta = pi (2k+1) / s
    // interior theta in (0, pi) only; the endpoints give |U_s| = s+1.
    std::vector<EvenCaseCandidate> out;
    auto add_family = [&](int sign, double step_num, double step_den, bool odd_multiples) {
        for (int k = 0;; ++k) {
            const double mult = odd_multiples ? (2.0 * k + 1.0) : (2.0 * k + 2.0);
            const double theta = step_num * mult / step_den;
            if (theta >= kPi - 1e-15) break;
            out.push_back({2.0 * std::cos(theta), sign});
        }
    };
    add_family(+1, kPi, static_cast<double>(s), false);
    add_family(+1, kPi, static_cast<double>(s + 2), true);
    add_family(-1, kPi, static_cast<double>(s + 2), false);
    add_family(-1, kPi, static_cast<double>(s), true);

    std::sort(out.begin(), out.end(),
              [](const EvenCaseCandidate& a, const EvenCaseCandidate& b) { return a.omega < b.omega; });
    std::vector<EvenCaseCandidate> dedup;
    for (const auto& c : out) {
        if (!dedup.empty() && std::abs(dedup.back().omega - c.omega) < 1e-12 &&
            dedup.back().sign == c.sign)
            continue;
        dedup.push_back(c);
    }
    return dedup;
}

}  // namespace apo
