#pragma once

// Parameter types for the unit-Fréchet family and its building blocks.
// Every constructor validates its domain and throws std::invalid_argument.

#include <string>

namespace uf {

/// Parameters (σ, α, ρ) of the unit-Fréchet law on (0,1).
///
/// sigma is the scale ratio σ₁/σ₂ of the underlying bivariate vector,
/// alpha the common Fréchet shape and rho the association in [0,1].
/// ρ = 1 is accepted for evaluation even though it is a non-identifiable
/// corner of the parameter space.
class UfParams {
public:
    UfParams(double sigma, double alpha, double rho);

    double sigma() const noexcept { return sigma_; }
    double alpha() const noexcept { return alpha_; }
    double rho() const noexcept { return rho_; }

    bool operator==(const UfParams&) const = default;

private:
    double sigma_;
    double alpha_;
    double rho_;
};

/// Univariate Fréchet(μ, σ, α).
class FrechetParams {
public:
    FrechetParams(double mu, double sigma, double alpha);

    double mu() const noexcept { return mu_; }
    double sigma() const noexcept { return sigma_; }
    double alpha() const noexcept { return alpha_; }

private:
    double mu_;
    double sigma_;
    double alpha_;
};

/// Bivariate extreme-value law with Fréchet(0, σᵢ, α) margins.
class BivParams {
public:
    BivParams(double sigma1, double sigma2, double alpha, double rho);

    double sigma1() const noexcept { return sigma1_; }
    double sigma2() const noexcept { return sigma2_; }
    double alpha() const noexcept { return alpha_; }
    double rho() const noexcept { return rho_; }

    /// Scale ratio σ₁/σ₂; X₁/(X₁+X₂) is UF(ratio_params()).
    double scale_ratio() const noexcept { return sigma1_ / sigma2_; }
    UfParams ratio_params() const { return {scale_ratio(), alpha_, rho_}; }

private:
    double sigma1_;
    double sigma2_;
    double alpha_;
    double rho_;
};

/// A point strictly inside (0,1) together with its odds s = w/(1−w).
class UnitValue {
public:
    explicit UnitValue(double w);

    double value() const noexcept { return w_; }
    double odds() const noexcept { return w_ / (1.0 - w_); }
    /// log s, computed without forming s.
    double log_odds() const noexcept;

private:
    double w_;
};

std::string to_string(const UfParams& p);

}  // namespace uf
