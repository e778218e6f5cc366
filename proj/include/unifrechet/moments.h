#pragma once

// Second-order Taylor approximations to the moments of W = X₁/(X₁+X₂),
// expanded around the marginal means of the bivariate Fréchet vector.

#include "unifrechet/params.h"

#include <optional>
#include <string>
#include <vector>

namespace uf {

/// Marginal means, variances and covariance of (X₁, X₂).
///
/// Variances are empty when they do not exist (α ≤ 2); the covariance is
/// never filled in implicitly and must come from the caller or from
/// estimate_cov.
struct MomentInputs {
    double mu1 = 0.0;
    double mu2 = 0.0;
    std::optional<double> var1;
    std::optional<double> var2;
    std::optional<double> cov;

    bool complete() const noexcept { return var1 && var2 && cov; }
};

/// μᵢ = σᵢΓ(1−1/α), Var(Xᵢ) = σᵢ²[Γ(1−2/α) − Γ²(1−1/α)].
/// α ≤ 1 throws std::domain_error; for α ≤ 2 the variances are left empty.
MomentInputs frechet_moments(const BivParams& p);

/// Checks the MomentInputs invariants (positive means, nonnegative
/// variances, |cov| ≤ √(var1·var2)) and that every field is present.
/// Throws std::invalid_argument naming the offending field.
void require_complete(const MomentInputs& m);

/// E(W^p) ≈ r^p {1 + p/(2S²) [ −μ₂(2μ₁ + (1−p)μ₂)/μ₁² · V₁ + (p+1)V₂
///                              + 2(μ₁ − pμ₂)/μ₁ · C ]},
/// S = μ₁+μ₂, r = μ₁/S.
double approx_moment(double p, const MomentInputs& m);

/// Var(W) from the two approximate moments.
///
/// `composed` is E(W²) − E(W)² using the second-order approximations
/// verbatim; `truncated` drops the square of the first-order correction
/// to E(W), the only fourth-order term the composition carries.
struct VarApprox {
    double composed;
    double truncated;
};
VarApprox approx_var(const MomentInputs& m);

/// Human-readable warnings for inputs where the expansion is unreliable
/// (√Var(Xᵢ)/μᵢ > 0.5). Empty when the inputs are in the validity region.
std::vector<std::string> quality_warnings(const MomentInputs& m);

}  // namespace uf
