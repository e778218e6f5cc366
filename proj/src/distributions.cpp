#include "unifrechet/distributions.h"

#include "unifrechet/core.h"

#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <stdexcept>

namespace uf {

namespace {

void require_shapes(const char* who, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument(fmt::format("{}: shapes ({}, {}) must be positive and finite", who, a, b));
    }
}

}  // namespace

Distribution uf_distribution(const UfParams& theta) {
    Distribution d;
    d.name = "uf";
    d.k_params = 3;
    d.params = {theta.sigma(), theta.alpha(), theta.rho()};
    d.pdf = [theta](double w) { return (w > 0.0 && w < 1.0) ? uf_pdf(UnitValue(w), theta) : 0.0; };
    d.cdf = [theta](double w) { return uf_cdf(w, theta); };
    return d;
}

double beta_log_pdf(double w, double a, double b) {
    const double log_b = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    return (a - 1.0) * std::log(w) + (b - 1.0) * std::log1p(-w) - log_b;
}

Distribution beta_distribution(double a, double b) {
    require_shapes("beta_distribution", a, b);
    Distribution d;
    d.name = "beta";
    d.k_params = 2;
    d.params = {a, b};
    d.pdf = [a, b](double w) { return (w > 0.0 && w < 1.0) ? std::exp(beta_log_pdf(w, a, b)) : 0.0; };
    d.cdf = [a, b](double w) {
        if (w <= 0.0) return 0.0;
        if (w >= 1.0) return 1.0;
        return boost::math::ibeta(a, b, w);
    };
    return d;
}

double kumaraswamy_log_pdf(double w, double a, double b) {
    const double log_wa = a * std::log(w);
    return std::log(a) + std::log(b) + (a - 1.0) * std::log(w) + (b - 1.0) * std::log1p(-std::exp(log_wa));
}

double kumaraswamy_cdf(double w, double a, double b) noexcept {
    if (w <= 0.0) return 0.0;
    if (w >= 1.0) return 1.0;
    return -std::expm1(b * std::log1p(-std::pow(w, a)));
}

Distribution kumaraswamy_distribution(double a, double b) {
    require_shapes("kumaraswamy_distribution", a, b);
    Distribution d;
    d.name = "kumaraswamy";
    d.k_params = 2;
    d.params = {a, b};
    d.pdf = [a, b](double w) { return (w > 0.0 && w < 1.0) ? std::exp(kumaraswamy_log_pdf(w, a, b)) : 0.0; };
    d.cdf = [a, b](double w) { return kumaraswamy_cdf(w, a, b); };
    return d;
}

}  // namespace uf
