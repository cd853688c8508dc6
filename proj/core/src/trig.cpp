#include "apo/trig.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace apo {

namespace {

constexpr double kPi = std::numbers::pi;

bool finite(double v) { return std::isfinite(v); }

}  // namespace

void TrigPolynomial::validate() const {
    if (n < 1) throw std::invalid_argument("TrigPolynomial: degree must be >= 1");
    if (static_cast<int>(coeffs.size()) != n)
        throw std::invalid_argument("TrigPolynomial: coeffs must hold exactly n harmonics");
    if (!finite(a0)) throw std::invalid_argument("TrigPolynomial: non-finite constant term");
    for (const auto& c : coeffs)
        if (!finite(c.a) || !finite(c.b))
            throw std::invalid_argument("TrigPolynomial: non-finite coefficient");
}

double Apo::omega() const {
    double w = 0.0;
    for (const auto& t : terms) w += t.amplitude;
    return w;
}

int Apo::order() const {
    // Distinct exp(i*lambda) with a nonzero net amplitude.
    std::vector<std::pair<double, double>> groups;  // (phase, summed amplitude)
    for (const auto& t : terms) {
        bool merged = false;
        for (auto& g : groups) {
            if (std::abs(normalize_phase(t.phase - g.first)) < 1e-12) {
                g.second += t.amplitude;
                merged = true;
                break;
            }
        }
        if (!merged) groups.emplace_back(normalize_phase(t.phase), t.amplitude);
    }
    int count = 0;
    for (const auto& g : groups)
        if (std::abs(g.second) > 0.0) ++count;
    return count;
}

void Apo::validate() const {
    if (mu < 1) throw std::invalid_argument("Apo: mu must be >= 1");
    if (valid_degree < 1) throw std::invalid_argument("Apo: valid_degree must be >= 1");
    for (const auto& t : terms) {
        if (!finite(t.amplitude) || !finite(t.phase))
            throw std::invalid_argument("Apo: non-finite term");
        if (t.phase <= -kPi || t.phase > kPi)
            throw std::invalid_argument("Apo: phase outside (-pi, pi]");
    }
}

double normalize_phase(double lambda) {
    double x = std::fmod(lambda, 2.0 * kPi);
    if (x <= -kPi) x += 2.0 * kPi;
    if (x > kPi) x -= 2.0 * kPi;
    return x;
}

double eval_poly(const TrigPolynomial& p, double x) {
    double v = p.a0;
    for (int k = 1; k <= p.n; ++k) {
        const auto& c = p.coeffs[static_cast<size_t>(k) - 1];
        v += c.a * std::cos(k * x) + c.b * std::sin(k * x);
    }
    return v;
}

double eval_harmonic(const Harmonic& h, double x) {
    return h.a * std::cos(h.mu * x) + h.b * std::sin(h.mu * x);
}

double apply_apo(const Apo& op, const TrigPolynomial& p, double x) {
    double v = 0.0;
    for (const auto& t : op.terms) v += t.amplitude * eval_poly(p, x - t.phase);
    return v;
}

namespace {

// Harmonic coefficients of the operator output: pushing the phase shifts
// through each harmonic turns sum_j X_j T(x - lambda_j) into a trig
// polynomial of the same degree with
//   A_k = sum_j X_j (a_k cos(k lambda_j) - b_k sin(k lambda_j))
//   B_k = sum_j X_j (a_k sin(k lambda_j) + b_k cos(k lambda_j)).
struct ShiftedCoeffs {
    double constant = 0.0;
    std::vector<HarmonicCoeff> h;  // index k-1
};

ShiftedCoeffs transformed_coeffs(const Apo& op, const TrigPolynomial& p) {
    ShiftedCoeffs out;
    out.constant = p.a0 * op.omega();
    out.h.resize(static_cast<size_t>(p.n));
    for (const auto& t : op.terms) {
        for (int k = 1; k <= p.n; ++k) {
            const auto& c = p.coeffs[static_cast<size_t>(k) - 1];
            const double cl = std::cos(k * t.phase);
            const double sl = std::sin(k * t.phase);
            out.h[static_cast<size_t>(k) - 1].a += t.amplitude * (c.a * cl - c.b * sl);
            out.h[static_cast<size_t>(k) - 1].b += t.amplitude * (c.a * sl + c.b * cl);
        }
    }
    return out;
}

// cos/sin of 2*pi*m/N for m = 0..N-1; index arithmetic stays exact because
// k*i mod N lands back on the table.
struct GridTables {
    std::vector<double> c, s;
    explicit GridTables(int n) : c(static_cast<size_t>(n)), s(static_cast<size_t>(n)) {
        for (int m = 0; m < n; ++m) {
            const double x = 2.0 * kPi * m / n;
            c[static_cast<size_t>(m)] = std::cos(x);
            s[static_cast<size_t>(m)] = std::sin(x);
        }
    }
};

std::vector<double> eval_coeffs_on_grid(const ShiftedCoeffs& sc, int grid_points) {
    GridTables tab(grid_points);
    std::vector<double> out(static_cast<size_t>(grid_points), sc.constant);
    const int n = static_cast<int>(sc.h.size());
    for (int i = 0; i < grid_points; ++i) {
        double v = out[static_cast<size_t>(i)];
        int idx = 0;  // k*i mod N, maintained incrementally
        for (int k = 1; k <= n; ++k) {
            idx += i;
            if (idx >= grid_points) idx -= grid_points;
            const auto& c = sc.h[static_cast<size_t>(k) - 1];
            v += c.a * tab.c[static_cast<size_t>(idx)] + c.b * tab.s[static_cast<size_t>(idx)];
        }
        out[static_cast<size_t>(i)] = v;
    }
    return out;
}

}  // namespace

std::vector<double> apply_apo_grid(const Apo& op, const TrigPolynomial& p, int grid_points) {
    if (grid_points < 1) throw std::invalid_argument("apply_apo_grid: grid_points must be >= 1");
    return eval_coeffs_on_grid(transformed_coeffs(op, p), grid_points);
}

ExtractionResult extract_harmonic(const Apo& op, const TrigPolynomial& p, int grid_points) {
    if (p.n > op.valid_degree)
        throw DegreeExceeded("extract_harmonic: polynomial degree " + std::to_string(p.n) +
                             " exceeds operator valid_degree " +
                             std::to_string(op.valid_degree));
    if (grid_points < 1) throw std::invalid_argument("extract_harmonic: grid_points must be >= 1");

    ExtractionResult res;
    res.grid_points = grid_points;
    res.harmonic.mu = op.mu;
    if (op.mu <= p.n) {
        res.harmonic.a = p.coeffs[static_cast<size_t>(op.mu) - 1].a;
        res.harmonic.b = p.coeffs[static_cast<size_t>(op.mu) - 1].b;
    }
    res.offset = p.a0 * op.omega();

    // Deviation of the operator output from offset + tau_mu, measured on the
    // grid. Subtracting in coefficient space first keeps the loop cheap.
    ShiftedCoeffs sc = transformed_coeffs(op, p);
    sc.constant -= res.offset;
    if (op.mu <= p.n) {
        sc.h[static_cast<size_t>(op.mu) - 1].a -= res.harmonic.a;
        sc.h[static_cast<size_t>(op.mu) - 1].b -= res.harmonic.b;
    }
    const std::vector<double> dev = eval_coeffs_on_grid(sc, grid_points);
    double worst = 0.0;
    for (double d : dev) worst = std::max(worst, std::abs(d));
    res.max_deviation = worst;
    return res;
}

std::complex<double> power_sum(const Apo& op, std::int64_t beta) {
    if (beta < 0) throw std::invalid_argument("power_sum: beta must be >= 0");
    std::complex<double> acc = 0.0;
    for (const auto& t : op.terms) {
        // z^beta = exp(-i*beta*lambda); staying in polar form is exact for
        // unimodular nodes.
        const double ang = -static_cast<double>(beta) * t.phase;
        acc += t.amplitude * std::polar(1.0, std::remainder(ang, 2.0 * kPi));
    }
    return acc;
}

bool mask_allows(MaskKind kind, int mu, int n, std::int64_t beta) {
    if (kind == MaskKind::CyclicFamily) return beta % n == 0;
    const std::int64_t tau = static_cast<std::int64_t>(n) + mu + 1;
    const std::int64_t r = beta % tau;
    return r == mu || r == 0 || r >= n;
}

void SpectrumReport::require() const {
    if (ok()) return;
    std::string msg = "series mask violated at beta =";
    for (auto b : violations) msg += " " + std::to_string(b);
    throw MaskViolation(msg);
}

SpectrumReport series_mask_check(const Apo& op, int mu, int n, std::int64_t beta_max,
                                 double tol, MaskKind kind) {
    if (mu < 1 || n < 1 || beta_max < 1)
        throw std::invalid_argument("series_mask_check: mu, n, beta_max must be >= 1");
    SpectrumReport rep;
    rep.tol = tol;
    rep.entries.reserve(static_cast<size_t>(beta_max));
    for (std::int64_t beta = 1; beta <= beta_max; ++beta) {
        SpectrumEntry e;
        e.beta = beta;
        e.value = power_sum(op, beta);
        e.allowed = mask_allows(kind, mu, n, beta);
        if (!e.allowed && std::abs(e.value) >= tol) rep.violations.push_back(beta);
        rep.entries.push_back(e);
    }
    return rep;
}

double uniform_pm1(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return 2.0 * static_cast<double>(z >> 11) * 0x1.0p-53 - 1.0;
}

TrigPolynomial random_trig_poly(int n, std::uint64_t seed, double a0) {
    TrigPolynomial p;
    p.n = n;
    p.a0 = a0;
    p.coeffs.resize(static_cast<size_t>(n));
    std::uint64_t state = seed;
    for (auto& c : p.coeffs) {
        c.a = uniform_pm1(state);
        c.b = uniform_pm1(state);
    }
    return p;
}

}  // namespace apo
