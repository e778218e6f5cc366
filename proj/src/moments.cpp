#include "unifrechet/moments.h"

#include <cmath>
#include <fmt/format.h>
#include <stdexcept>

namespace uf {

MomentInputs frechet_moments(const BivParams& p) {
    const double alpha = p.alpha();
    if (!(alpha > 1.0)) {
        throw std::domain_error(fmt::format("frechet_moments: alpha = {} must exceed 1 for a finite mean", alpha));
    }
    const double g1 = std::tgamma(1.0 - 1.0 / alpha);
    MomentInputs m;
    m.mu1 = p.sigma1() * g1;
    m.mu2 = p.sigma2() * g1;
    if (alpha > 2.0) {
        const double spread = std::tgamma(1.0 - 2.0 / alpha) - g1 * g1;
        m.var1 = p.sigma1() * p.sigma1() * spread;
        m.var2 = p.sigma2() * p.sigma2() * spread;
    }
    return m;
}

void require_complete(const MomentInputs& m) {
    if (!(m.mu1 > 0.0) || !(m.mu2 > 0.0)) {
        throw std::invalid_argument(fmt::format("moments: means ({}, {}) must be positive", m.mu1, m.mu2));
    }
    if (!m.var1 || !m.var2) throw std::invalid_argument("moments: var1/var2 are unavailable");
    if (!m.cov) throw std::invalid_argument("moments: cov must be supplied explicitly");
    if (!(*m.var1 >= 0.0)) throw std::invalid_argument(fmt::format("moments: var1 = {} is negative", *m.var1));
    if (!(*m.var2 >= 0.0)) throw std::invalid_argument(fmt::format("moments: var2 = {} is negative", *m.var2));
    const double bound = std::sqrt(*m.var1 * *m.var2);
    if (!(std::abs(*m.cov) <= bound * (1.0 + 1e-12))) {
        throw std::invalid_argument(
            fmt::format("moments: |cov| = {} exceeds sqrt(var1*var2) = {}", std::abs(*m.cov), bound));
    }
}

double approx_moment(double p, const MomentInputs& m) {
    require_complete(m);
    const double mu1 = m.mu1;
    const double mu2 = m.mu2;
    const double S = mu1 + mu2;
    const double r = mu1 / S;
    const double bracket = -mu2 * (2.0 * mu1 + (1.0 - p) * mu2) / (mu1 * mu1) * *m.var1
                           + (p + 1.0) * *m.var2
                           + 2.0 * (mu1 - p * mu2) / mu1 * *m.cov;
    return std::pow(r, p) * (1.0 + p / (2.0 * S * S) * bracket);
}

VarApprox approx_var(const MomentInputs& m) {
    const double e1 = approx_moment(1.0, m);
    const double e2 = approx_moment(2.0, m);
    const double lead = m.mu1 / (m.mu1 + m.mu2);
    const double correction = e1 - lead;
    return {e2 - e1 * e1, e2 - lead * lead - 2.0 * lead * correction};
}

std::vector<std::string> quality_warnings(const MomentInputs& m) {
    std::vector<std::string> out;
    const auto check = [&](const std::optional<double>& var, double mu, int i) {
        if (!var || !(mu > 0.0)) return;
        const double cv = std::sqrt(*var) / mu;
        if (cv > 0.5) {
            out.push_back(fmt::format(
                "sd(X{0})/mu{0} = {1:.4g} exceeds 0.5; the second-order expansion is unreliable", i, cv));
        }
    };
    check(m.var1, m.mu1, 1);
    check(m.var2, m.mu2, 2);
    return out;
}

}  // namespace uf
