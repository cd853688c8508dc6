#include "apo/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "apo/errors.hpp"

namespace apo {

ComplexPoly ComplexPoly::from_real(const std::vector<double>& c) {
    ComplexPoly p;
    p.coeffs.assign(c.begin(), c.end());
    return p;
}

double ComplexPoly::max_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

int ComplexPoly::degree(double rel_tol) const {
    const double floor = rel_tol * max_abs();
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
        if (std::abs(coeffs[static_cast<size_t>(k)]) > floor) return k;
    return -1;
}

bool ComplexPoly::is_zero(double abs_floor) const { return max_abs() <= abs_floor; }

Complex ComplexPoly::eval(Complex z) const {
    Complex v = 0.0;
    for (size_t k = coeffs.size(); k-- > 0;) v = v * z + coeffs[k];
    return v;
}

namespace {

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex v = 0.0;
    for (size_t k = c.size(); k-- > 0;) v = v * z + c[k];
    return v;
}

// Backward-error style residual scale: sum |c_k| |z|^k.
double eval_scale(const std::vector<Complex>& c, Complex z) {
    double v = 0.0;
    for (size_t k = c.size(); k-- > 0;) v = v * std::abs(z) + std::abs(c[k]);
    return v;
}

}  // namespace

std::vector<Complex> poly_roots(const ComplexPoly& p, const RootOptions& opts) {
    const double scale = p.max_abs();
    if (scale == 0.0) throw std::invalid_argument("poly_roots: zero polynomial");
    const double floor = ComplexPoly::kZeroTol * scale;

    int hi = static_cast<int>(p.coeffs.size()) - 1;
    while (hi >= 0 && std::abs(p.coeffs[static_cast<size_t>(hi)]) <= floor) --hi;
    int lo = 0;
    while (lo < hi && std::abs(p.coeffs[static_cast<size_t>(lo)]) <= floor) ++lo;
    if (hi - lo < 1) throw std::invalid_argument("poly_roots: degree < 1 after trimming");

    // lo exact zero roots; deflate and normalize the rest to monic form.
    std::vector<Complex> roots(static_cast<size_t>(lo), Complex(0.0, 0.0));
    const int deg = hi - lo;
    std::vector<Complex> c(static_cast<size_t>(deg) + 1);
    const Complex lead = p.coeffs[static_cast<size_t>(hi)];
    for (int k = 0; k <= deg; ++k) c[static_cast<size_t>(k)] = p.coeffs[static_cast<size_t>(lo + k)] / lead;

    if (deg == 1) {
        roots.push_back(-c[0]);
        return roots;
    }

    // Durand-Kerner: start on a circle at an irrational angle offset so no
    // guess hits a symmetry axis of the typical near-unit-circle targets.
    std::vector<Complex> zs(static_cast<size_t>(deg));
    for (int i = 0; i < deg; ++i)
        zs[static_cast<size_t>(i)] =
            std::polar(opts.radius, 2.0 * 3.141592653589793 * i / deg + 0.7390851332151607);

    bool converged = false;
    for (int it = 0; it < opts.max_iter; ++it) {
        double max_step = 0.0;
        for (int i = 0; i < deg; ++i) {
            Complex denom = 1.0;
            for (int j = 0; j < deg; ++j)
                if (j != i) denom *= zs[static_cast<size_t>(i)] - zs[static_cast<size_t>(j)];
            if (denom == Complex(0.0, 0.0)) {
                // coincident iterates; nudge and continue
                zs[static_cast<size_t>(i)] += Complex(1e-8, 1e-8);
                max_step = 1.0;
                continue;
            }
            const Complex dz = horner(c, zs[static_cast<size_t>(i)]) / denom;
            zs[static_cast<size_t>(i)] -= dz;
            max_step = std::max(max_step,
                                std::abs(dz) / std::max(1.0, std::abs(zs[static_cast<size_t>(i)])));
        }
        if (max_step < opts.step_tol) {
            converged = true;
            break;
        }
        // Clustered (multiple) roots plateau at the evaluation noise floor and
        // never satisfy the step criterion; accept once the backward error is
        // at rounding level everywhere.
        if (it >= 5) {
            double max_res = 0.0;
            for (const auto& z : zs)
                max_res = std::max(max_res,
                                   std::abs(horner(c, z)) / std::max(eval_scale(c, z), 1e-300));
            if (max_res < 1e-14) {
                converged = true;
                break;
            }
        }
    }
    if (!converged) throw NoConvergence("poly_roots: iteration cap reached");

    for (const auto& z : zs) {
        const double res = std::abs(horner(c, z)) / std::max(eval_scale(c, z), 1e-300);
        if (res > opts.residual_tol)
            throw NoConvergence("poly_roots: residual check failed");
        roots.push_back(z);
    }
    return roots;
}

}  // namespace apo
