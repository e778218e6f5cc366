#include "unifrechet/bivariate.h"

#include "unifrechet/kernels.h"
#include "unifrechet/rng.h"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <stdexcept>

namespace uf {

namespace {

// log P(V ≤ v | U = u) in the unit-Fréchet scale (α = 1, σ = 1),
// together with its derivative in log v.
struct CondEval {
    double log_cdf;
    double slope;
};

CondEval conditional_unit(double log_v, double u, double rho) noexcept {
    const double v = std::exp(log_v);
    const double T = u + v;
    const double r = u / T;
    const double q = v / T;
    // 1 − ρr², rewritten so ρ = 1 with v ≪ u keeps full precision.
    const double B = q * (1.0 + r) + (1.0 - rho) * r * r;
    const double inv_v = std::exp(-log_v);
    const double log_cdf = -inv_v + rho / T + std::log(B);
    const double slope = inv_v - rho * q / T + 2.0 * q * (1.0 / B - 1.0);
    return {log_cdf, slope};
}

// Solve log C(v | u) = log_target for log v.
double invert_conditional(double u, double rho, double log_target) {
    // Independent case as a starting guess: C = exp(−1/v).
    double t = -std::log(-log_target);
    double lo = t - 1.0;
    double hi = t + 1.0;
    double step = 1.0;
    while (conditional_unit(lo, u, rho).log_cdf > log_target) {
        step *= 2.0;
        lo -= step;
        if (step > 4096.0) throw std::runtime_error("biv_sample: lower bracket not found");
    }
    step = 1.0;
    while (conditional_unit(hi, u, rho).log_cdf < log_target) {
        step *= 2.0;
        hi += step;
        if (step > 4096.0) throw std::runtime_error("biv_sample: upper bracket not found");
    }

    t = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const CondEval e = conditional_unit(t, u, rho);
        const double h = e.log_cdf - log_target;
        if (h == 0.0) return t;
        if (h < 0.0) lo = t; else hi = t;
        double next = t - h / e.slope;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - t) <= 1e-13 * std::max(1.0, std::abs(t)) || hi - lo <= 1e-13) return next;
        t = next;
    }
    return t;
}

}  // namespace

double biv_cdf(double x1, double x2, const BivParams& p) noexcept {
    if (!(x1 > 0.0) || !(x2 > 0.0)) return 0.0;
    const double la = p.alpha() * std::log(x1 / p.sigma1());
    const double lb = p.alpha() * std::log(x2 / p.sigma2());
    const double inv_u = std::exp(-la);
    const double inv_v = std::exp(-lb);
    // ρ/(u+v) vanishes once either coordinate reaches a limit.
    double assoc = 0.0;
    if (inv_u > 0.0 && inv_v > 0.0 && std::isfinite(inv_u) && std::isfinite(inv_v)) {
        assoc = p.rho() / (std::exp(la) + std::exp(lb));
    }
    return std::exp(-inv_u - inv_v + assoc);
}

double biv_pdf(double x1, double x2, const BivParams& p) {
    if (!(x1 > 0.0) || !(x2 > 0.0)) {
        throw std::domain_error(fmt::format("biv_pdf: ({}, {}) must be positive", x1, x2));
    }
    const double F = biv_cdf(x1, x2, p);
    if (F == 0.0) return 0.0;
    const double alpha = p.alpha();
    const double rho = p.rho();
    const double u = std::exp(alpha * std::log(x1 / p.sigma1()));
    const double v = std::exp(alpha * std::log(x2 / p.sigma2()));
    const double T = u + v;
    const double r = u / T;
    const double q = v / T;
    // x₁∂ψ/∂x₁ = α(1/u − ρu/T²) = α(1 − ρr²)/u, likewise for x₂.
    const double a1 = (q * (1.0 + r) + (1.0 - rho) * r * r) / u;
    const double a2 = (r * (1.0 + q) + (1.0 - rho) * q * q) / v;
    const double cross = 2.0 * rho * r * q / T;
    return F * alpha * alpha * (a1 * a2 + cross) / (x1 * x2);
}

double biv_conditional_cdf(double x2, double x1, const BivParams& p) {
    if (!(x1 > 0.0)) throw std::domain_error("biv_conditional_cdf: x1 must be > 0");
    if (!(x2 > 0.0)) return 0.0;
    const double u = std::exp(p.alpha() * std::log(x1 / p.sigma1()));
    const double log_v = p.alpha() * std::log(x2 / p.sigma2());
    return std::exp(conditional_unit(log_v, u, p.rho()).log_cdf);
}

BivDraw biv_draw(const BivParams& p, std::uint64_t seed, std::uint64_t index) {
    const CounterRng rng(derive_key({seed, index}));
    BivDraw draw;
    for (std::uint64_t attempt = 0;; ++attempt) {
        const double u1 = rng.uniform(2 * attempt);
        const double u2 = rng.uniform(2 * attempt + 1);
        // U = (X₁/σ₁)^α is unit Fréchet: U = −1/log U₁.
        const double log_u = -std::log(-std::log(u1));
        const double u = std::exp(log_u);
        const double log_v = invert_conditional(u, p.rho(), std::log(u2));
        const double x1 = p.sigma1() * std::exp(log_u / p.alpha());
        const double x2 = p.sigma2() * std::exp(log_v / p.alpha());
        if (std::isfinite(x1) && std::isfinite(x2) && x1 > 0.0 && x2 > 0.0) {
            draw.value = {x1, x2};
            return draw;
        }
        ++draw.redraws;
        if (draw.redraws > 1000) {
            throw std::runtime_error("biv_sample: parameters produce no finite draws");
        }
    }
}

BivSample biv_sample(const BivParams& p, std::size_t n, std::uint64_t seed) {
    return kernels::biv_sample_parallel(p, n, seed);
}

std::vector<double> ratio_transform(std::span<const Pair> pairs) {
    std::vector<double> out;
    out.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [x1, x2] = pairs[i];
        if (!(x1 > 0.0) || !(x2 > 0.0)) {
            throw std::domain_error(fmt::format("ratio_transform: pair {} = ({}, {}) is not positive", i, x1, x2));
        }
        out.push_back(x1 / (x1 + x2));
    }
    return out;
}

CovEstimate estimate_cov(const BivParams& p, std::size_t n, std::uint64_t seed) {
    if (!(p.alpha() > 2.0)) {
        throw std::domain_error("estimate_cov: alpha must exceed 2 for finite second moments");
    }
    if (n < 10000) throw std::invalid_argument("estimate_cov: n must be at least 10^4");

    const BivSample s = biv_sample(p, n, seed);
    double m1 = 0.0;
    double m2 = 0.0;
    for (const auto& [x1, x2] : s.pairs) {
        m1 += x1;
        m2 += x2;
    }
    m1 /= static_cast<double>(n);
    m2 /= static_cast<double>(n);

    double sum = 0.0;
    double sum_sq = 0.0;
    for (const auto& [x1, x2] : s.pairs) {
        const double d = (x1 - m1) * (x2 - m2);
        sum += d;
        sum_sq += d * d;
    }
    const double nd = static_cast<double>(n);
    const double mean_d = sum / nd;
    const double var_d = (sum_sq - nd * mean_d * mean_d) / (nd - 1.0);
    return {sum / (nd - 1.0), std::sqrt(std::max(var_d, 0.0) / nd), n};
}

}  // namespace uf
