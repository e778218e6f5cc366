#pragma once

// Maximum-likelihood fitting of UF and of the Beta and Kumaraswamy
// comparison models, Kolmogorov–Smirnov goodness of fit, residuals and
// information-criterion ranking.

#include "unifrechet/distributions.h"
#include "unifrechet/params.h"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uf {

/// Observations strictly inside (0,1), in ingestion order.
class DataSeries {
public:
    /// Throws std::invalid_argument when empty or when a value lies outside
    /// the open unit interval (the message names the 0-based index).
    explicit DataSeries(std::vector<double> values, std::string label = "", std::string source = "");

    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    const std::string& label() const noexcept { return label_; }
    const std::string& source() const noexcept { return source_; }

private:
    std::vector<double> values_;
    std::string label_;
    std::string source_;
};

enum class Model { UF, Beta, Kumaraswamy };
std::string_view model_name(Model m) noexcept;

enum class FitStatus { ok, not_converged, ill_posed };
std::string_view status_name(FitStatus s) noexcept;

/// A local optimum visited by fit_uf.
struct FitCandidate {
    std::vector<double> theta;
    double loglik = 0.0;
    bool converged = false;
    std::string origin;
};

struct FitReport {
    Model model = Model::UF;
    std::vector<std::string> param_names;
    std::vector<double> theta_hat;
    double loglik = 0.0;
    double aic = 0.0;
    double bic = 0.0;
    int k_params = 0;
    std::size_t n = 0;
    double ks_stat = 0.0;
    double ks_pvalue = 0.0;
    std::vector<double> residuals;
    bool converged = false;
    bool boundary_hit = false;
    int iterations = 0;
    FitStatus status = FitStatus::ok;
    std::string message;
    std::vector<FitCandidate> candidates;

    /// The fitted law. Throws std::logic_error for an ill-posed report.
    Distribution distribution() const;
};

// --- UF likelihood ------------------------------------------------------------

/// ℓ(θ) = n log α − nα log σ + (α−1)Σ log sᵢ + 2Σ log(sᵢ+1) + Σ log g(sᵢ^α/σ^α; ρ).
/// Evaluated in log space, so no term underflows; −∞ is returned only when
/// α(log sᵢ − log σ) leaves the double range.
double loglik_uf(const UfParams& theta, const DataSeries& data);

/// (∂ℓ/∂σ, ∂ℓ/∂α, ∂ℓ/∂ρ).
std::array<double, 3> score_uf(const UfParams& theta, const DataSeries& data);

struct FitOptions {
    /// Number of best-scoring multistart points that get a full simplex run
    /// (0 runs all of them).
    int refine_starts = 6;
    /// Number of distinct simplex optima polished by BFGS.
    int polish = 3;
    double grad_tol = 1e-6;
    double rel_f_tol = 1e-10;
    /// Iteration cap for each simplex run and each quasi-Newton polish.
    int max_iterations = 2000;
    /// Attach KS statistics and residuals to the report.
    bool diagnostics = true;
};

/// UF maximum likelihood over (0,∞)² × [0,1]; needs n ≥ 4.
///
/// Works in (log σ, log α, logit ρ). Every point of the deterministic start
/// grid σ∈{0.5,1,2} × α∈{0.5,1,2,4} × ρ∈{0.1,0.5,0.9}, plus a start built
/// from the sample median and logit spread, is scored; the best
/// `refine_starts` get a Nelder–Mead run and the best distinct optima are
/// polished by BFGS on the analytic score. Fits with ρ held at 0 and at 1
/// are always added as candidates; the report carries the candidate with
/// the largest ℓ. Data with no spread is reported as ill-posed.
FitReport fit_uf(const DataSeries& data, const FitOptions& opts = {});

/// Beta MLE by Newton on the digamma equations; n ≥ 3.
FitReport fit_beta(const DataSeries& data);

/// Kumaraswamy MLE through the profile likelihood in a; n ≥ 3.
FitReport fit_kumaraswamy(const DataSeries& data);

// --- goodness of fit ------------------------------------------------------------

struct KsResult {
    double statistic = 0.0;
    double pvalue = 0.0;
};

/// P(K > λ) for the Kolmogorov distribution.
double kolmogorov_sf(double lambda) noexcept;

/// Two-sided D_n = max over the order statistics of max(i/n − F, F − (i−1)/n)
/// with the asymptotic p-value kolmogorov_sf(√n·D_n).
KsResult ks_test(const std::vector<double>& values, const Distribution& dist);
KsResult ks_test(const DataSeries& data, const Distribution& dist);

/// Rᵢ = ECDF(wᵢ) − F(wᵢ) with ECDF(wᵢ) = rank(wᵢ)/n, ties given their
/// average rank. Returned in data order.
std::vector<double> residuals(const DataSeries& data, const Distribution& dist);

// --- model comparison ------------------------------------------------------------

struct RankedModel {
    std::size_t report_index = 0;
    Model model = Model::UF;
    int k_params = 0;
    double loglik = 0.0;
    double aic = 0.0;
    double bic = 0.0;
};

/// Ranks by AIC, then BIC, then input order. `k_override` recomputes both
/// criteria with a common parameter count instead of each model's own.
/// Needs at least two reports fitted to samples of equal size
/// (std::invalid_argument otherwise).
std::vector<RankedModel> model_select(const std::vector<FitReport>& reports,
                                      std::optional<int> k_override = std::nullopt);

}  // namespace uf
