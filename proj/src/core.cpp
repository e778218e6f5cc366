#include "unifrechet/core.h"

#include "unifrechet/cubic.h"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <stdexcept>

namespace uf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_aux_args(double x, double rho, const char* who) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error(fmt::format("{}: x = {} must be finite and > 0", who, x));
    }
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw std::domain_error(fmt::format("{}: rho = {} outside [0,1]", who, rho));
    }
}

// (x+1)² − ρx, never below 1 for x ≥ 0.
double denom_d(double x, double rho) noexcept { return x * x + (2.0 - rho) * x + 1.0; }

// Numerator of g over the common denominator (x+1)²·D²; palindromic with
// nonnegative coefficients, so no cancellation anywhere on [0,∞).
double numer_n(double x, double rho) noexcept {
    const double mid = 6.0 + 2.0 * rho - rho * rho;
    return (1.0 - rho) * (1.0 + x * x * x * x) + x * (4.0 + mid * x + 4.0 * x * x);
}

// x/N(x), finite as x → 0 even when ρ = 1.
double x_over_numer(double x, double rho) noexcept {
    const double mid = 6.0 + 2.0 * rho - rho * rho;
    if (rho == 1.0) return 1.0 / (4.0 + mid * x + 4.0 * x * x);
    return x / numer_n(x, rho);
}

// G on [0,1]; used with the reflection G(x) = 1 − G(1/x) above 1.
double G_small(double x, double rho) noexcept {
    const double xp1 = x + 1.0;
    return x * (x * (x + 2.0) + (1.0 - rho)) / (xp1 * denom_d(x, rho));
}

double g_small(double x, double rho) noexcept {
    const double xp1 = x + 1.0;
    const double d = denom_d(x, rho);
    return numer_n(x, rho) / (xp1 * xp1 * d * d);
}

// The closed-form derivative bracket:
// ρ³x³ − ρ(x−2)²(x+1)⁴ + (x+1)⁶ + ρ²(1 + 3x − 5x³ − 3x⁴).
double gprime_bracket(double x, double rho) noexcept {
    const double xp1 = x + 1.0;
    const double xp1_2 = xp1 * xp1;
    const double xp1_4 = xp1_2 * xp1_2;
    const double xm2 = x - 2.0;
    const double x2 = x * x;
    const double x3 = x2 * x;
    return rho * rho * rho * x3 - rho * xm2 * xm2 * xp1_4 + xp1_4 * xp1_2 +
           rho * rho * (1.0 + 3.0 * x - 5.0 * x3 - 3.0 * x3 * x);
}

double G_at_log(double z, double rho) noexcept {
    if (z <= 0.0) return G_small(std::exp(z), rho);
    return 1.0 - G_small(std::exp(-z), rho);
}

double G_complement_at_log(double z, double rho) noexcept {
    if (z >= 0.0) return G_small(std::exp(-z), rho);
    return 1.0 - G_small(std::exp(z), rho);
}

// Logistic map to (0,1), rounded inward so the result is a valid UnitValue.
double logistic_inside(double t) noexcept {
    double w = (t >= 0.0) ? 1.0 / (1.0 + std::exp(-t)) : std::exp(t) / (1.0 + std::exp(t));
    constexpr double kTop = 1.0 - std::numeric_limits<double>::epsilon() / 2.0;
    if (w >= 1.0) w = kTop;
    if (w <= 0.0) w = std::numeric_limits<double>::denorm_min();
    return w;
}

// Positive root of (1−ρ)x + 2x² = p: the leading-order balance of G near 0.
double small_p_start(double p, double rho) noexcept {
    const double a = 1.0 - rho;
    return 2.0 * p / (a + std::sqrt(a * a + 8.0 * p));
}

}  // namespace

// --- univariate Fréchet -----------------------------------------------------

double frechet_cdf(double x, const FrechetParams& p) noexcept {
    if (!(x > p.mu())) return 0.0;
    const double y = (x - p.mu()) / p.sigma();
    return std::exp(-std::exp(-p.alpha() * std::log(y)));
}

double frechet_pdf(double x, const FrechetParams& p) noexcept {
    if (!(x > p.mu())) return 0.0;
    const double log_y = std::log((x - p.mu()) / p.sigma());
    const double tail = std::exp(-p.alpha() * log_y);
    if (std::isinf(tail)) return 0.0;
    return std::exp(std::log(p.alpha() / p.sigma()) - (p.alpha() + 1.0) * log_y - tail);
}

double frechet_quantile(double u, const FrechetParams& p) {
    if (!(u > 0.0 && u < 1.0)) {
        throw std::domain_error(fmt::format("frechet_quantile: u = {} outside (0,1)", u));
    }
    return p.mu() + p.sigma() * std::exp(-std::log(-std::log(u)) / p.alpha());
}

// --- auxiliary pair ---------------------------------------------------------

double aux_g(double x, double rho) {
    check_aux_args(x, rho, "aux_g");
    if (x <= 1.0) return g_small(x, rho);
    const double t = 1.0 / x;
    return t * t * g_small(t, rho);
}

double aux_G(double x, double rho) {
    check_aux_args(x, rho, "aux_G");
    return G_at_log(std::log(x), rho);
}

double aux_G_complement(double x, double rho) {
    check_aux_args(x, rho, "aux_G_complement");
    return G_complement_at_log(std::log(x), rho);
}

double aux_g_prime(double x, double rho) {
    check_aux_args(x, rho, "aux_g_prime");
    if (x <= 1.0) {
        const double xp1 = x + 1.0;
        const double d = denom_d(x, rho);
        return -2.0 * gprime_bracket(x, rho) / (xp1 * xp1 * xp1 * d * d * d);
    }
    // Large x: g′ = (x g′/g) · g / x keeps every factor in range.
    const double z = std::log(x);
    return aux_g_log_slope_at_log(z, rho) * aux_g(x, rho) / x;
}

double aux_g_drho(double x, double rho) {
    check_aux_args(x, rho, "aux_g_drho");
    return aux_g(x, rho) * aux_g_rho_score_at_log(std::log(x), rho);
}

double log_aux_g_at_log(double z, double rho) noexcept {
    if (z > 0.0) return -2.0 * z + log_aux_g_at_log(-z, rho);
    const double x = std::exp(z);
    double log_n;
    if (rho == 1.0) {
        const double mid = 6.0 + 2.0 * rho - rho * rho;
        log_n = z + std::log(4.0 + mid * x + 4.0 * x * x);
    } else {
        log_n = std::log(numer_n(x, rho));
    }
    return log_n - 2.0 * std::log1p(x) - 2.0 * std::log(denom_d(x, rho));
}

double aux_g_log_slope_at_log(double z, double rho) noexcept {
    // log g(x) = −2 log x + log g(1/x) gives κ(x) = −2 − κ(1/x).
    if (z > 0.0) return -2.0 - aux_g_log_slope_at_log(-z, rho);
    const double x = std::exp(z);
    const double d = denom_d(x, rho);
    return -2.0 * gprime_bracket(x, rho) * x_over_numer(x, rho) / ((x + 1.0) * d);
}

double aux_g_rho_score_at_log(double z, double rho) noexcept {
    // The −2 log x term of the reflection does not depend on ρ.
    const double x = std::exp(-std::abs(z));
    const double xp1 = x + 1.0;
    const double poly = x * x * x * x + (rho - 2.0) * x * x * x - 6.0 * x * x + (rho - 2.0) * x + 1.0;
    return -poly * xp1 * xp1 / (numer_n(x, rho) * denom_d(x, rho));
}

double aux_log_quantile(double p, double rho) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error(fmt::format("aux_quantile: p = {} outside (0,1)", p));
    }
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw std::domain_error(fmt::format("aux_quantile: rho = {} outside [0,1]", rho));
    }
    if (p == 0.5) return 0.0;
    // Q_Y(1−p) = 1/Q_Y(p), and 1−p is exact for p ≥ 1/2.
    if (p > 0.5) return -aux_log_quantile(1.0 - p, rho);

    double x0 = 0.0;
    if (p < 1e-12) {
        x0 = small_p_start(p, rho);
    } else {
        const double c3 = p - 1.0;
        const double c2 = (3.0 - rho) * p - 2.0;
        const double c1 = (3.0 - rho) * p + rho - 1.0;
        for (double r : real_cubic_roots(c3, c2, c1, p)) {
            if (r > 0.0) x0 = r;
        }
        if (!(x0 > 0.0)) x0 = small_p_start(p, rho);
    }

    // Safeguarded Newton on h(t) = log G(e^t) − log p, t = log x ∈ (−∞, 0).
    const double log_p = std::log(p);
    double lo = -kInf;
    double hi = 0.0;
    double t = std::log(x0);
    if (!(t < hi)) t = -1.0;
    for (int iter = 0; iter < 100; ++iter) {
        const double x = std::exp(t);
        const double G = G_small(x, rho);
        const double h = std::log(G) - log_p;
        if (h == 0.0) break;
        if (h < 0.0) lo = t; else hi = t;
        const double slope = x * g_small(x, rho) / G;
        double next = t - h / slope;
        if (!(next > lo && next < hi) || !std::isfinite(next)) {
            next = std::isfinite(lo) ? 0.5 * (lo + hi) : t - 2.0 * std::max(1.0, std::abs(t));
        }
        const double step = next - t;
        t = next;
        if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t))) {
            break;
        }
    }
    return t;
}

// --- unit-Fréchet -----------------------------------------------------------

double uf_log_argument(UnitValue w, const UfParams& theta) noexcept {
    return theta.alpha() * (w.log_odds() - std::log(theta.sigma()));
}

double uf_log_pdf(UnitValue w, const UfParams& theta) {
    // (α/σ^α) s^{α−1}(s+1)² = α·x/(w(1−w)) with x = (s/σ)^α = e^z.
    const double z = uf_log_argument(w, theta);
    const double v = w.value();
    return std::log(theta.alpha()) + z + log_aux_g_at_log(z, theta.rho()) - std::log(v) - std::log1p(-v);
}

double uf_pdf(UnitValue w, const UfParams& theta) { return std::exp(uf_log_pdf(w, theta)); }

double uf_cdf(double w, const UfParams& theta) noexcept {
    if (std::isnan(w)) return w;
    if (w <= 0.0) return 0.0;
    if (w >= 1.0) return 1.0;
    return G_at_log(uf_log_argument(UnitValue(w), theta), theta.rho());
}

double uf_sf(double w, const UfParams& theta) noexcept {
    if (std::isnan(w)) return w;
    if (w <= 0.0) return 1.0;
    if (w >= 1.0) return 0.0;
    return G_complement_at_log(uf_log_argument(UnitValue(w), theta), theta.rho());
}

double uf_quantile(double p, const UfParams& theta) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error(fmt::format("uf_quantile: p = {} outside (0,1)", p));
    }
    const double log_y = aux_log_quantile(p, theta.rho());
    return logistic_inside(std::log(theta.sigma()) + log_y / theta.alpha());
}

double stress_strength(const UfParams& theta) {
    // R = [(q+1)³ − q(q+1)² − ρq²] / [(q+1)((q+1)² − ρq)],  q = σ^{−α}.
    const double log_q = -theta.alpha() * std::log(theta.sigma());
    const double rho = theta.rho();
    if (log_q <= 0.0) {
        const double q = std::exp(log_q);
        const double qp1 = q + 1.0;
        const double num = qp1 * qp1 * qp1 - q * qp1 * qp1 - rho * q * q;
        return num / (qp1 * (qp1 * qp1 - rho * q));
    }
    // Same expression divided through by q³ (t = 1/q) for large q.
    const double t = std::exp(-log_q);
    const double tp1 = t + 1.0;
    return t * (tp1 * tp1 - rho) / (tp1 * (tp1 * tp1 - rho * t));
}

}  // namespace uf
