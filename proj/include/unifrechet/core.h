#pragma once

// Exact evaluation of the unit-Fréchet (UF) distribution.
//
// W ~ UF(σ, α, ρ) has CDF F_W(w) = G(x; ρ) with x = (s/σ)^α and odds
// s = w/(1−w), where G is the CDF of an auxiliary positive variable Y:
//
//   G(x; ρ) = x/(x+1) · ((x+1)² − ρ) / ((x+1)² − ρx),
//   g(x; ρ) = [2(x+1)² − ρ(x²+1)] / [(x+1)² − ρx]² − 1/(x+1)².
//
// The pair satisfies G(1/x) = 1 − G(x) and g(x) = g(1/x)/x². All
// evaluation below is arranged around that reflection so that nothing
// overflows for large α or w near the endpoints: W-space functions work
// with z = α(log s − log σ) = log x and reflect z → −z for z > 0.

#include "unifrechet/params.h"

namespace uf {

// --- univariate Fréchet -----------------------------------------------------

double frechet_cdf(double x, const FrechetParams& p) noexcept;
double frechet_pdf(double x, const FrechetParams& p) noexcept;
/// Inverse CDF; u must lie in (0,1).
double frechet_quantile(double u, const FrechetParams& p);

// --- auxiliary pair (g, G) --------------------------------------------------
// x must be > 0 and finite; rho in [0,1]. Violations throw std::domain_error.

double aux_g(double x, double rho);
double aux_G(double x, double rho);
/// 1 − G(x; ρ) without cancellation.
double aux_G_complement(double x, double rho);
/// g′(x; ρ) from its closed form.
double aux_g_prime(double x, double rho);
/// ∂g(x; ρ)/∂ρ.
double aux_g_drho(double x, double rho);

/// log g(e^z; ρ) for any finite z. Exact reflection for z > 0.
double log_aux_g_at_log(double z, double rho) noexcept;
/// x·g′(x)/g(x) = d log g / d log x at x = e^z.
double aux_g_log_slope_at_log(double z, double rho) noexcept;
/// (∂g/∂ρ)/g at x = e^z.
double aux_g_rho_score_at_log(double z, double rho) noexcept;

/// Q_Y(p): unique positive root of
/// (p−1)x³ + [(3−ρ)p−2]x² + [(3−ρ)p+ρ−1]x + p = 0, returned as log Q_Y(p).
double aux_log_quantile(double p, double rho);

// --- unit-Fréchet -----------------------------------------------------------

/// z = α(log s − log σ), the log of the G-argument at w.
double uf_log_argument(UnitValue w, const UfParams& theta) noexcept;

double uf_pdf(UnitValue w, const UfParams& theta);
double uf_log_pdf(UnitValue w, const UfParams& theta);
/// 0 for w ≤ 0, 1 for w ≥ 1.
double uf_cdf(double w, const UfParams& theta) noexcept;
/// 1 − F_W(w), evaluated directly in the upper tail.
double uf_sf(double w, const UfParams& theta) noexcept;

/// Q_W(p) = σQ_Y(p)^{1/α} / (1 + σQ_Y(p)^{1/α}); p in (0,1).
///
/// The result is rounded to the nearest double strictly inside (0,1), so
/// it is always a valid UnitValue even when the exact quantile lies
/// closer to an endpoint than double spacing allows.
double uf_quantile(double p, const UfParams& theta);

/// Closed-form R = 1 − F_W(1/2; θ).
///
/// For W = X₁/(X₁+X₂) this is P(X₂ < X₁): the probability that the
/// second component is the smaller one. With ρ = 0 it reduces to
/// σ^α/(σ^α+1).
double stress_strength(const UfParams& theta);

}  // namespace uf
