#include "apo/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace apo {

namespace {
constexpr double kPi = std::numbers::pi;
}

double r_eval(int k, double omega) {
    if (k < -1) throw std::invalid_argument("r_eval: k must be >= -1");
    if (k == -1) return 0.0;
    double prev = 0.0;  // r_{-1}
    double cur = 1.0;   // r_0
    for (int j = 1; j <= k; ++j) {
        const double next = -omega * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> r_coeffs(int k) {
    if (k < 0) throw std::invalid_argument("r_coeffs: k must be >= 0");
    // r_k(w) = (-1)^k sum_j (-1)^j C(k-j, j) w^{k-2j}
    std::vector<double> c(static_cast<size_t>(k) + 1, 0.0);
    const double sk = (k % 2 == 0) ? 1.0 : -1.0;
    for (int j = 0; 2 * j <= k; ++j) {
        double binom = 1.0;  // C(k-j, j)
        for (int i = 1; i <= j; ++i) binom = binom * (k - j - i + 1) / i;
        const double sj = (j % 2 == 0) ? 1.0 : -1.0;
        c[static_cast<size_t>(k - 2 * j)] = sk * sj * binom;
    }
    return c;
}

OmegaSet omega_set(int s) {
    if (s < 1) throw std::invalid_argument("omega_set: s must be >= 1");
    OmegaSet out;
    out.s = s;
    out.values.reserve(static_cast<size_t>(s));
    for (int alpha = 1; alpha <= s; ++alpha)
        out.values.push_back(2.0 * std::cos(kPi * alpha / (s + 1)));
    return out;
}

std::vector<double> R_coeffs(int s, double omega) {
    if (s < 1) throw std::invalid_argument("R_coeffs: s must be >= 1");
    std::vector<double> c(static_cast<size_t>(s));
    double prev = 0.0;
    double cur = 1.0;
    for (int k = 0; k < s; ++k) {
        c[static_cast<size_t>(k)] = cur;
        const double next = -omega * cur - prev;
        prev = cur;
        cur = next;
    }
    return c;
}

std::vector<std::complex<double>> R_root_set(int s, int alpha) {
    if (s < 2) throw std::invalid_argument("R_root_set: s must be >= 2");
    if (alpha < 1 || alpha > s) throw std::invalid_argument("R_root_set: alpha out of 1..s");
    // (s+1)-th roots of (-1)^alpha, skipping the two at angle ±pi*alpha/(s+1).
    std::vector<std::complex<double>> roots;
    roots.reserve(static_cast<size_t>(s) - 1);
    const int m = s + 1;
    for (int j = 0; j < m; ++j) {
        const double ang = (alpha % 2 == 0) ? 2.0 * kPi * j / m : kPi * (2.0 * j + 1.0) / m;
        // angle comparison modulo 2*pi against ±alpha*pi/(s+1)
        const double target = kPi * alpha / m;
        const double d1 = std::remainder(ang - target, 2.0 * kPi);
        const double d2 = std::remainder(ang + target, 2.0 * kPi);
        if (std::abs(d1) < 1e-12 || std::abs(d2) < 1e-12) continue;
        roots.push_back(std::polar(1.0, ang));
    }
    return roots;
}

}  // namespace apo
