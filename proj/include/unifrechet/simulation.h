#pragma once

// Monte Carlo validation of the UF maximum-likelihood estimator: repeated
// sampling and fitting over a grid of (θ, n), summarized by relative bias
// and (root) mean squared error.

#include "unifrechet/inference.h"
#include "unifrechet/params.h"

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace uf {

struct SimConfig {
    std::vector<UfParams> thetas;
    std::vector<std::size_t> sample_sizes{30, 50, 100};
    std::size_t replications = 1000;
    std::uint64_t master_seed = 0;
    /// OpenMP threads; ≤ 0 uses the runtime default. Never affects output.
    int parallelism = 0;
    FitOptions fit;
};

/// σ ∈ {0.5,1,2} × α ∈ {1,2,4} × ρ ∈ {0.2,0.5,0.8}.
std::vector<UfParams> default_theta_grid();

/// A validation failure; `path()` names the offending field, e.g.
/// "sample_sizes[2]".
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string path, const std::string& what);
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Throws ConfigError. Requires at least one θ with ρ > 0 (relative bias
/// divides by each true coordinate), sample sizes ≥ 4 and replications ≥ 1.
void validate(const SimConfig& cfg);

struct SimRow {
    std::size_t theta_index = 0;
    UfParams theta{1.0, 1.0, 0.5};
    std::size_t n = 0;
    /// Per coordinate (σ, α, ρ), over the replications that were used.
    std::array<double, 3> rb{};
    std::array<double, 3> mse{};
    std::array<double, 3> rmse{};
    std::size_t used = 0;
    std::size_t failures = 0;
    /// Used replications whose estimate sits on the ρ boundary.
    std::size_t boundary_count = 0;
};

struct SimReport {
    std::uint64_t master_seed = 0;
    std::size_t replications = 0;
    std::vector<SimRow> rows;  // θ-major, then n in config order
};

/// Seed of replication j of configuration (θ-index, n).
std::uint64_t replication_seed(std::uint64_t master, std::size_t theta_index, std::size_t n, std::size_t j) noexcept;

/// Replications run in parallel; results are reduced in replication
/// order, so the report is identical at every thread count. Replications
/// whose fit does not converge are excluded from the averages and counted.
SimReport run_study(const SimConfig& cfg);

/// Single-threaded reference implementation of run_study.
SimReport run_study_serial(const SimConfig& cfg);

}  // namespace uf
