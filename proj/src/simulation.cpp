#include "unifrechet/simulation.h"

#include "unifrechet/kernels.h"
#include "unifrechet/rng.h"

#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <omp.h>

namespace uf {

namespace {

struct Outcome {
    std::array<double, 3> estimate{};
    bool ok = false;
    bool boundary = false;
};

struct Task {
    std::size_t theta_index;
    std::size_t n;
    std::size_t rep;
};

std::vector<Task> enumerate(const SimConfig& cfg) {
    std::vector<Task> tasks;
    tasks.reserve(cfg.thetas.size() * cfg.sample_sizes.size() * cfg.replications);
    for (std::size_t t = 0; t < cfg.thetas.size(); ++t) {
        for (std::size_t n : cfg.sample_sizes) {
            for (std::size_t j = 0; j < cfg.replications; ++j) tasks.push_back({t, n, j});
        }
    }
    return tasks;
}

Outcome replicate(const SimConfig& cfg, const Task& task, const FitOptions& fit) {
    Outcome out;
    try {
        const UfParams& theta = cfg.thetas[task.theta_index];
        const auto seed = replication_seed(cfg.master_seed, task.theta_index, task.n, task.rep);
        const DataSeries data(kernels::uf_sample_serial(theta, task.n, seed));
        const FitReport r = fit_uf(data, fit);
        if (r.status == FitStatus::ok) {
            out.ok = true;
            out.boundary = r.boundary_hit;
            out.estimate = {r.theta_hat[0], r.theta_hat[1], r.theta_hat[2]};
        }
    } catch (const std::exception&) {
        out.ok = false;
    }
    return out;
}

SimReport reduce(const SimConfig& cfg, const std::vector<Outcome>& outcomes) {
    SimReport report;
    report.master_seed = cfg.master_seed;
    report.replications = cfg.replications;
    std::size_t k = 0;
    for (std::size_t t = 0; t < cfg.thetas.size(); ++t) {
        const UfParams& theta = cfg.thetas[t];
        const std::array<double, 3> truth{theta.sigma(), theta.alpha(), theta.rho()};
        for (std::size_t n : cfg.sample_sizes) {
            SimRow row;
            row.theta_index = t;
            row.theta = theta;
            row.n = n;
            std::array<double, 3> rel{}, sq{};
            for (std::size_t j = 0; j < cfg.replications; ++j, ++k) {
                const Outcome& o = outcomes[k];
                if (!o.ok) {
                    ++row.failures;
                    continue;
                }
                ++row.used;
                if (o.boundary) ++row.boundary_count;
                for (int c = 0; c < 3; ++c) {
                    const double e = o.estimate[c] - truth[c];
                    rel[c] += e / truth[c];
                    sq[c] += e * e;
                }
            }
            for (int c = 0; c < 3; ++c) {
                if (row.used == 0) {
                    row.rb[c] = row.mse[c] = row.rmse[c] = std::numeric_limits<double>::quiet_NaN();
                    continue;
                }
                const double u = static_cast<double>(row.used);
                row.rb[c] = rel[c] / u;
                row.mse[c] = sq[c] / u;
                row.rmse[c] = std::sqrt(row.mse[c]);
            }
            report.rows.push_back(row);
        }
    }
    return report;
}

FitOptions study_fit_options(const SimConfig& cfg) {
    FitOptions fit = cfg.fit;
    fit.diagnostics = false;
    return fit;
}

}  // namespace

ConfigError::ConfigError(std::string path, const std::string& what)
    : std::invalid_argument(fmt::format("{}: {}", path, what)), path_(std::move(path)) {}

std::vector<UfParams> default_theta_grid() {
    std::vector<UfParams> grid;
    for (double s : {0.5, 1.0, 2.0}) {
        for (double a : {1.0, 2.0, 4.0}) {
            for (double r : {0.2, 0.5, 0.8}) grid.emplace_back(s, a, r);
        }
    }
    return grid;
}

void validate(const SimConfig& cfg) {
    if (cfg.thetas.empty()) throw ConfigError("thetas", "at least one parameter vector is required");
    for (std::size_t i = 0; i < cfg.thetas.size(); ++i) {
        if (!(cfg.thetas[i].rho() > 0.0)) {
            throw ConfigError(fmt::format("thetas[{}].rho", i), "must be > 0 (relative bias divides by it)");
        }
    }
    if (cfg.sample_sizes.empty()) throw ConfigError("sample_sizes", "at least one sample size is required");
    for (std::size_t i = 0; i < cfg.sample_sizes.size(); ++i) {
        if (cfg.sample_sizes[i] < 4) {
            throw ConfigError(fmt::format("sample_sizes[{}]", i),
                              fmt::format("{} is below the minimum of 4", cfg.sample_sizes[i]));
        }
    }
    if (cfg.replications < 1) throw ConfigError("replications", "must be at least 1");
}

std::uint64_t replication_seed(std::uint64_t master, std::size_t theta_index, std::size_t n, std::size_t j) noexcept {
    return derive_key({master, theta_index, n, j});
}

SimReport run_study(const SimConfig& cfg) {
    validate(cfg);
    const FitOptions fit = study_fit_options(cfg);
    const std::vector<Task> tasks = enumerate(cfg);
    std::vector<Outcome> outcomes(tasks.size());
    const auto count = static_cast<std::int64_t>(tasks.size());
    const int threads = cfg.parallelism > 0 ? cfg.parallelism : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) outcomes[i] = replicate(cfg, tasks[i], fit);
    return reduce(cfg, outcomes);
}

SimReport run_study_serial(const SimConfig& cfg) {
    validate(cfg);
    const FitOptions fit = study_fit_options(cfg);
    const std::vector<Task> tasks = enumerate(cfg);
    std::vector<Outcome> outcomes(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) outcomes[i] = replicate(cfg, tasks[i], fit);
    return reduce(cfg, outcomes);
}

}  // namespace uf
