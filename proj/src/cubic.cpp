#include "unifrechet/cubic.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uf {

std::vector<double> real_cubic_roots(double c3, double c2, double c1, double c0) {
    if (c3 == 0.0) throw std::invalid_argument("real_cubic_roots: leading coefficient is zero");

    // Monic form x³ + a x² + b x + c, then depressed t³ + p t + q with x = t − a/3.
    const double a = c2 / c3;
    const double b = c1 / c3;
    const double c = c0 / c3;
    const double shift = a / 3.0;
    const double p = b - a * a / 3.0;
    const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;

    const auto eval = [&](double x) { return ((c3 * x + c2) * x + c1) * x + c0; };
    // Newton steps that are kept only while they shrink the residual, which
    // keeps near-multiple roots (f′ ≈ 0) from being thrown far away.
    const auto polish = [&](double x) {
        for (int i = 0; i < 2; ++i) {
            const double f = eval(x);
            const double df = (3.0 * c3 * x + 2.0 * c2) * x + c1;
            if (df == 0.0 || !std::isfinite(f / df)) break;
            const double next = x - f / df;
            if (!(std::abs(eval(next)) < std::abs(f))) break;
            x = next;
        }
        return x;
    };

    // The closed form is accurate in relative terms only for the root of
    // largest magnitude; the others come from the deflated quadratic.
    const double half_q = q / 2.0;
    const double third_p = p / 3.0;
    const double disc = half_q * half_q + third_p * third_p * third_p;
    double big;
    if (disc < 0.0) {
        const double r = std::sqrt(-third_p);
        const double phi = std::acos(std::clamp(-half_q / (r * r * r), -1.0, 1.0));
        big = 0.0;
        for (int k = 0; k < 3; ++k) {
            const double x = 2.0 * r * std::cos((phi - 2.0 * std::numbers::pi * k) / 3.0) - shift;
            if (std::abs(x) > std::abs(big)) big = x;
        }
    } else {
        const double sq = std::sqrt(disc);
        // Larger-magnitude cube root first, to avoid cancellation.
        const double u = std::cbrt(-half_q + (half_q <= 0.0 ? sq : -sq));
        const double v = (u != 0.0) ? -third_p / u : 0.0;
        big = u + v - shift;
    }
    big = polish(big);

    std::vector<double> roots{big};
    // Monic quotient x² + b1·x + b0 of the division by (x − big).
    double b1, b0;
    if (std::abs(big) > 1.0) {
        b0 = -c / big;
        b1 = (b0 - b) / big;
    } else {
        b1 = a + big;
        b0 = b + b1 * big;
    }
    const double qd = b1 * b1 - 4.0 * b0;
    if (qd >= 0.0) {
        const double t = -0.5 * (b1 + std::copysign(std::sqrt(qd), b1));
        if (t != 0.0) {
            roots.push_back(polish(t));
            roots.push_back(polish(b0 / t));
        } else {
            roots.push_back(0.0);
            roots.push_back(0.0);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace uf
