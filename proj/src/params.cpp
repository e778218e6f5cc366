#include "unifrechet/params.h"

#include <cmath>
#include <fmt/format.h>
#include <stdexcept>

namespace uf {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

bool positive(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

UfParams::UfParams(double sigma, double alpha, double rho)
    : sigma_(sigma), alpha_(alpha), rho_(rho) {
    require(positive(sigma), "UfParams: sigma must be finite and > 0");
    require(positive(alpha), "UfParams: alpha must be finite and > 0");
    require(rho >= 0.0 && rho <= 1.0, "UfParams: rho must lie in [0,1]");
}

FrechetParams::FrechetParams(double mu, double sigma, double alpha)
    : mu_(mu), sigma_(sigma), alpha_(alpha) {
    require(std::isfinite(mu), "FrechetParams: mu must be finite");
    require(positive(sigma), "FrechetParams: sigma must be finite and > 0");
    require(positive(alpha), "FrechetParams: alpha must be finite and > 0");
}

BivParams::BivParams(double sigma1, double sigma2, double alpha, double rho)
    : sigma1_(sigma1), sigma2_(sigma2), alpha_(alpha), rho_(rho) {
    require(positive(sigma1), "BivParams: sigma1 must be finite and > 0");
    require(positive(sigma2), "BivParams: sigma2 must be finite and > 0");
    require(positive(alpha), "BivParams: alpha must be finite and > 0");
    require(rho >= 0.0 && rho <= 1.0, "BivParams: rho must lie in [0,1]");
}

UnitValue::UnitValue(double w) : w_(w) {
    if (!(w > 0.0 && w < 1.0)) {
        throw std::domain_error(fmt::format("UnitValue: {} is outside (0,1)", w));
    }
}

double UnitValue::log_odds() const noexcept { return std::log(w_) - std::log1p(-w_); }

std::string to_string(const UfParams& p) {
    return fmt::format("(sigma={}, alpha={}, rho={})", p.sigma(), p.alpha(), p.rho());
}

}  // namespace uf
