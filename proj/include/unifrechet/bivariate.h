#pragma once

// Bivariate extreme-value law with Fréchet margins,
//
//   F(x₁,x₂) = exp{ −u⁻¹ − v⁻¹ + ρ/(u + v) },  u = (x₁/σ₁)^α, v = (x₂/σ₂)^α,
//
// whose ratio X₁/(X₁+X₂) is UF(σ₁/σ₂, α, ρ).

#include "unifrechet/params.h"

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace uf {

using Pair = std::pair<double, double>;

/// Joint CDF; 0 when either coordinate is ≤ 0. Infinite coordinates
/// give the margins.
double biv_cdf(double x1, double x2, const BivParams& p) noexcept;

/// Mixed partial ∂²F/∂x₁∂x₂. Both coordinates must be > 0.
double biv_pdf(double x1, double x2, const BivParams& p);

/// P(X₂ ≤ x₂ | X₁ = x₁), from ∂F/∂x₁ divided by the X₁ marginal density.
double biv_conditional_cdf(double x2, double x1, const BivParams& p);

/// One pair drawn by conditional inversion.
///
/// X₁ inverts its Fréchet(0, σ₁, α) marginal; X₂ | X₁ inverts the
/// conditional CDF numerically in log space. Pairs with a coordinate
/// that over- or underflows are redrawn from fresh counters; `redraws`
/// records how many times that happened. The result depends only on
/// (p, seed, index).
struct BivDraw {
    Pair value;
    unsigned redraws = 0;
};
BivDraw biv_draw(const BivParams& p, std::uint64_t seed, std::uint64_t index);

struct BivSample {
    std::vector<Pair> pairs;
    std::size_t redraws = 0;
};

/// n ≥ 1 pairs; OpenMP-parallel with output independent of thread count.
BivSample biv_sample(const BivParams& p, std::size_t n, std::uint64_t seed);

/// Elementwise x₁/(x₁+x₂); entries must be > 0.
std::vector<double> ratio_transform(std::span<const Pair> pairs);

struct CovEstimate {
    double cov = 0.0;
    double std_error = 0.0;
    std::size_t n = 0;
};

/// Monte Carlo Cov(X₁,X₂). Requires α > 2 and n ≥ 10⁴.
CovEstimate estimate_cov(const BivParams& p, std::size_t n, std::uint64_t seed);

}  // namespace uf
