#include "unifrechet/inference.h"

#include "unifrechet/core.h"
#include "unifrechet/optimize.h"

#include <algorithm>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace uf {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Per-sample quantities that do not depend on θ.
struct Prepared {
    std::vector<double> log_s;
    double sum_log_s = 0.0;
    double sum_log_s1 = 0.0;  // Σ log(sᵢ + 1) = −Σ log(1 − wᵢ)
    double n = 0.0;
};

Prepared prepare(const DataSeries& data) {
    Prepared p;
    p.n = static_cast<double>(data.size());
    p.log_s.reserve(data.size());
    for (double w : data.values()) {
        const double ls = UnitValue(w).log_odds();
        p.log_s.push_back(ls);
        p.sum_log_s += ls;
        p.sum_log_s1 -= std::log1p(-w);
    }
    return p;
}

double loglik_prepared(double sigma, double alpha, double rho, const Prepared& p) {
    const double log_sigma = std::log(sigma);
    double acc = p.n * (std::log(alpha) - alpha * log_sigma) + (alpha - 1.0) * p.sum_log_s + 2.0 * p.sum_log_s1;
    for (double ls : p.log_s) {
        const double lg = log_aux_g_at_log(alpha * (ls - log_sigma), rho);
        if (!std::isfinite(lg)) return kNegInf;
        acc += lg;
    }
    return std::isfinite(acc) ? acc : kNegInf;
}

std::array<double, 3> score_prepared(double sigma, double alpha, double rho, const Prepared& p) {
    const double log_sigma = std::log(sigma);
    double sum_kappa = 0.0;
    double sum_alpha = 0.0;
    double sum_rho = 0.0;
    for (double ls : p.log_s) {
        const double d = ls - log_sigma;
        const double z = alpha * d;
        const double kappa = aux_g_log_slope_at_log(z, rho);
        sum_kappa += kappa;
        sum_alpha += d * (1.0 + kappa);
        sum_rho += aux_g_rho_score_at_log(z, rho);
    }
    return {-p.n * alpha / sigma - alpha / sigma * sum_kappa, p.n / alpha + sum_alpha, sum_rho};
}

double logistic(double u) noexcept { return 1.0 / (1.0 + std::exp(-u)); }
double logit(double r) noexcept { return std::log(r) - std::log1p(-r); }

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

bool has_spread(const DataSeries& data) {
    const auto [lo, hi] = std::minmax_element(data.values().begin(), data.values().end());
    return *hi > *lo;
}

void set_criteria(FitReport& r) {
    const auto k = static_cast<double>(r.k_params);
    r.aic = -2.0 * r.loglik + 2.0 * k;
    r.bic = -2.0 * r.loglik + k * std::log(static_cast<double>(r.n));
}

void attach_diagnostics(FitReport& r, const DataSeries& data) {
    const Distribution d = r.distribution();
    const KsResult ks = ks_test(data, d);
    r.ks_stat = ks.statistic;
    r.ks_pvalue = ks.pvalue;
    r.residuals = residuals(data, d);
}

FitReport ill_posed(Model model, std::vector<std::string> names, int k, const DataSeries& data) {
    FitReport r;
    r.model = model;
    r.param_names = std::move(names);
    r.k_params = k;
    r.n = data.size();
    r.status = FitStatus::ill_posed;
    r.loglik = std::numeric_limits<double>::quiet_NaN();
    r.message = "all observations are equal; the likelihood has no finite maximizer";
    set_criteria(r);
    return r;
}

// One local UF optimization in working coordinates. With `fixed_rho` set the
// working vector is (log σ, log α), otherwise (log σ, log α, logit ρ).
struct UfProblem {
    const Prepared& prep;
    std::optional<double> fixed_rho;

    UfParams params(const opt::Vec& v) const {
        const double rho = fixed_rho ? *fixed_rho : logistic(v[2]);
        return {std::exp(v[0]), std::exp(v[1]), rho};
    }

    double objective(const opt::Vec& v) const {
        const double sigma = std::exp(v[0]);
        const double alpha = std::exp(v[1]);
        if (!(sigma > 0.0) || !(alpha > 0.0) || !std::isfinite(sigma) || !std::isfinite(alpha)) {
            return std::numeric_limits<double>::infinity();
        }
        const double rho = fixed_rho ? *fixed_rho : logistic(v[2]);
        return -loglik_prepared(sigma, alpha, rho, prep);
    }

    opt::Vec gradient(const opt::Vec& v) const {
        const double sigma = std::exp(v[0]);
        const double alpha = std::exp(v[1]);
        const double rho = fixed_rho ? *fixed_rho : logistic(v[2]);
        const auto s = score_prepared(sigma, alpha, rho, prep);
        opt::Vec g{-sigma * s[0], -alpha * s[1]};
        if (!fixed_rho) g.push_back(-rho * (1.0 - rho) * s[2]);
        return g;
    }

    opt::Vec encode(double sigma, double alpha, double rho) const {
        opt::Vec v{std::log(sigma), std::log(alpha)};
        if (!fixed_rho) v.push_back(logit(rho));
        return v;
    }
};

struct LocalFit {
    opt::Vec x;
    double f;
    bool converged;
    int iterations;
};

std::vector<LocalFit> run_problem(const UfProblem& prob, const std::vector<opt::Vec>& starts, int refine,
                                  int polish, const FitOptions& opts) {
    const auto f = [&](const opt::Vec& v) { return prob.objective(v); };
    const auto g = [&](const opt::Vec& v) { return prob.gradient(v); };

    std::vector<std::pair<double, std::size_t>> scored;
    for (std::size_t i = 0; i < starts.size(); ++i) {
        const double fv = f(starts[i]);
        scored.emplace_back(std::isfinite(fv) ? fv : std::numeric_limits<double>::infinity(), i);
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    const std::size_t keep = refine > 0 ? std::min<std::size_t>(refine, scored.size()) : scored.size();

    opt::NelderMeadOptions nm;
    nm.max_iterations = opts.max_iterations;
    std::vector<LocalFit> simplex;
    int iterations = 0;
    for (std::size_t i = 0; i < keep; ++i) {
        const opt::OptResult r = opt::nelder_mead(f, starts[scored[i].second], nm);
        iterations += r.iterations;
        if (!std::isfinite(r.f)) continue;
        const bool duplicate = std::any_of(simplex.begin(), simplex.end(), [&](const LocalFit& o) {
            double d = 0.0;
            for (std::size_t k = 0; k < r.x.size(); ++k) d = std::max(d, std::abs(r.x[k] - o.x[k]));
            return d < 1e-4;
        });
        if (!duplicate) simplex.push_back({r.x, r.f, r.converged, 0});
    }
    std::stable_sort(simplex.begin(), simplex.end(), [](const LocalFit& a, const LocalFit& b) { return a.f < b.f; });
    if (simplex.size() > static_cast<std::size_t>(polish)) simplex.resize(static_cast<std::size_t>(polish));

    opt::BfgsOptions bo;
    bo.grad_tol = opts.grad_tol;
    bo.rel_f_tol = opts.rel_f_tol;
    bo.max_iterations = opts.max_iterations;
    std::vector<LocalFit> out;
    for (std::size_t i = 0; i < simplex.size(); ++i) {
        const opt::OptResult r = opt::bfgs(f, g, simplex[i].x, bo);
        // The polish may end a rounding error above the simplex value.
        const double slack = 1e-12 * std::max(1.0, std::abs(simplex[i].f));
        const bool better = std::isfinite(r.f) && r.f <= simplex[i].f + slack;
        LocalFit lf = better ? LocalFit{r.x, r.f, r.converged, r.iterations}
                             : LocalFit{simplex[i].x, simplex[i].f, false, r.iterations};
        // Spread the simplex cost over the polished candidates.
        if (i == 0) lf.iterations += iterations;
        out.push_back(std::move(lf));
    }
    return out;
}

}  // namespace

// --- DataSeries ---------------------------------------------------------------

DataSeries::DataSeries(std::vector<double> values, std::string label, std::string source)
    : values_(std::move(values)), label_(std::move(label)), source_(std::move(source)) {
    if (values_.empty()) throw std::invalid_argument("DataSeries: no observations");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const double w = values_[i];
        if (!(w > 0.0 && w < 1.0)) {
            throw std::invalid_argument(fmt::format("DataSeries: value {} at index {} is outside (0,1)", w, i));
        }
    }
}

std::string_view model_name(Model m) noexcept {
    switch (m) {
        case Model::UF: return "uf";
        case Model::Beta: return "beta";
        case Model::Kumaraswamy: return "kumaraswamy";
    }
    return "unknown";
}

std::string_view status_name(FitStatus s) noexcept {
    switch (s) {
        case FitStatus::ok: return "ok";
        case FitStatus::not_converged: return "not_converged";
        case FitStatus::ill_posed: return "ill_posed";
    }
    return "unknown";
}

Distribution FitReport::distribution() const {
    if (status == FitStatus::ill_posed || theta_hat.empty()) {
        throw std::logic_error("FitReport::distribution: ill-posed fit has no distribution");
    }
    switch (model) {
        case Model::UF: return uf_distribution(UfParams(theta_hat[0], theta_hat[1], theta_hat[2]));
        case Model::Beta: return beta_distribution(theta_hat[0], theta_hat[1]);
        case Model::Kumaraswamy: return kumaraswamy_distribution(theta_hat[0], theta_hat[1]);
    }
    throw std::logic_error("FitReport::distribution: unknown model");
}

// --- UF likelihood --------------------------------------------------------------

double loglik_uf(const UfParams& theta, const DataSeries& data) {
    return loglik_prepared(theta.sigma(), theta.alpha(), theta.rho(), prepare(data));
}

std::array<double, 3> score_uf(const UfParams& theta, const DataSeries& data) {
    return score_prepared(theta.sigma(), theta.alpha(), theta.rho(), prepare(data));
}

FitReport fit_uf(const DataSeries& data, const FitOptions& opts) {
    if (data.size() < 4) {
        throw std::invalid_argument(fmt::format("fit_uf: need at least 4 observations, got {}", data.size()));
    }
    if (!has_spread(data)) return ill_posed(Model::UF, {"sigma", "alpha", "rho"}, 3, data);

    const Prepared prep = prepare(data);

    const double m = median_of(data.values());
    const double mean_ls = prep.sum_log_s / prep.n;
    double ss = 0.0;
    for (double ls : prep.log_s) ss += (ls - mean_ls) * (ls - mean_ls);
    const double sd_ls = std::sqrt(ss / (prep.n - 1.0));
    // Under ρ = 0, log s is logistic around log σ with scale 1/α.
    const double sigma0 = m / (1.0 - m);
    const double alpha0 = std::numbers::pi / (std::sqrt(3.0) * sd_ls);

    std::vector<FitCandidate> candidates;
    std::vector<LocalFit> fits;
    std::vector<std::optional<double>> fixed;

    const auto add = [&](const UfProblem& prob, const std::vector<LocalFit>& local, const std::string& origin) {
        for (const LocalFit& lf : local) {
            const UfParams th = prob.params(lf.x);
            candidates.push_back({{th.sigma(), th.alpha(), th.rho()}, -lf.f, lf.converged, origin});
            fits.push_back(lf);
            fixed.push_back(prob.fixed_rho);
        }
    };

    {
        UfProblem prob{prep, std::nullopt};
        std::vector<opt::Vec> starts;
        for (double s : {0.5, 1.0, 2.0}) {
            for (double a : {0.5, 1.0, 2.0, 4.0}) {
                for (double r : {0.1, 0.5, 0.9}) starts.push_back(prob.encode(s, a, r));
            }
        }
        starts.push_back(prob.encode(sigma0, alpha0, 0.5));
        add(prob, run_problem(prob, starts, opts.refine_starts, opts.polish, opts), "interior");
    }
    for (double rho_fixed : {0.0, 1.0}) {
        UfProblem prob{prep, rho_fixed};
        std::vector<opt::Vec> starts;
        for (double s : {0.5, 1.0, 2.0}) {
            for (double a : {0.5, 1.0, 2.0, 4.0}) starts.push_back(prob.encode(s, a, rho_fixed));
        }
        starts.push_back(prob.encode(sigma0, alpha0, rho_fixed));
        const int refine = opts.refine_starts > 0 ? std::max(1, (opts.refine_starts + 1) / 2) : 0;
        add(prob, run_problem(prob, starts, refine, 1, opts), fmt::format("rho={}", rho_fixed));
    }

    FitReport r;
    r.model = Model::UF;
    r.param_names = {"sigma", "alpha", "rho"};
    r.k_params = 3;
    r.n = data.size();
    for (const LocalFit& lf : fits) r.iterations += lf.iterations;

    std::size_t best = candidates.size();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!std::isfinite(candidates[i].loglik)) continue;
        if (best == candidates.size() || candidates[i].loglik > candidates[best].loglik) best = i;
    }
    r.candidates = candidates;
    if (best == candidates.size()) {
        r.status = FitStatus::not_converged;
        r.loglik = kNegInf;
        r.message = "no start produced a finite log-likelihood";
        set_criteria(r);
        return r;
    }

    // An interior optimum within 1e−6 of a ρ boundary is replaced by the fit
    // with ρ held at that boundary.
    if (!fixed[best]) {
        const double rho_free = candidates[best].theta[2];
        std::optional<double> edge;
        if (rho_free < 1e-6) edge = 0.0;
        if (rho_free > 1.0 - 1e-6) edge = 1.0;
        if (edge) {
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                if (fixed[i] == edge && candidates[i].loglik >= candidates[best].loglik - 1e-6) {
                    best = i;
                    break;
                }
            }
        }
    }

    const FitCandidate& c = candidates[best];
    r.theta_hat = c.theta;
    r.loglik = c.loglik;
    r.converged = c.converged;
    r.status = c.converged ? FitStatus::ok : FitStatus::not_converged;
    const double rho_hat = c.theta[2];
    r.boundary_hit = fixed[best].has_value() || rho_hat < 1e-6 || rho_hat > 1.0 - 1e-6;
    if (!r.converged) r.message = "gradient or likelihood change above tolerance at the best candidate";
    set_criteria(r);
    if (opts.diagnostics) attach_diagnostics(r, data);
    return r;
}

// --- comparison models ------------------------------------------------------------

FitReport fit_beta(const DataSeries& data) {
    if (data.size() < 3) {
        throw std::invalid_argument(fmt::format("fit_beta: need at least 3 observations, got {}", data.size()));
    }
    if (!has_spread(data)) return ill_posed(Model::Beta, {"a", "b"}, 2, data);

    const auto& v = data.values();
    const double n = static_cast<double>(v.size());
    double l1 = 0.0, l2 = 0.0, mean = 0.0;
    for (double w : v) {
        l1 += std::log(w);
        l2 += std::log1p(-w);
        mean += w;
    }
    l1 /= n;
    l2 /= n;
    mean /= n;
    double var = 0.0;
    for (double w : v) var += (w - mean) * (w - mean);
    var /= n - 1.0;

    double a = 1.0, b = 1.0;
    if (var > 0.0 && var < mean * (1.0 - mean)) {
        const double common = mean * (1.0 - mean) / var - 1.0;
        a = mean * common;
        b = (1.0 - mean) * common;
    }
    const auto mean_ll = [&](double x, double y) {
        return (x - 1.0) * l1 + (y - 1.0) * l2 - (std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
    };

    using boost::math::digamma;
    using boost::math::trigamma;
    FitReport r;
    r.model = Model::Beta;
    r.param_names = {"a", "b"};
    r.k_params = 2;
    r.n = v.size();
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
        r.iterations = it;
        const double psab = digamma(a + b);
        const double f1 = digamma(a) - psab - l1;
        const double f2 = digamma(b) - psab - l2;
        if (std::max(std::abs(f1), std::abs(f2)) < 1e-13 * std::max({1.0, std::abs(l1), std::abs(l2)})) {
            converged = true;
            break;
        }
        // ∇(mean ℓ) = −(f1, f2); the Hessian is −J with J positive definite.
        const double tab = trigamma(a + b);
        const double j11 = trigamma(a) - tab, j22 = trigamma(b) - tab, j12 = -tab;
        const double det = j11 * j22 - j12 * j12;
        const double da = -(j22 * f1 - j12 * f2) / det;
        const double db = -(j11 * f2 - j12 * f1) / det;
        const double base = mean_ll(a, b);
        // Rounding noise of mean_ll follows its largest terms, not its value.
        const double noise = 1e-14 * (1.0 + std::abs((a - 1.0) * l1) + std::abs((b - 1.0) * l2) +
                                      std::abs(std::lgamma(a)) + std::abs(std::lgamma(b)) + std::abs(std::lgamma(a + b)));
        double t = 1.0;
        for (int k = 0; k < 60; ++k, t *= 0.5) {
            const double na = a + t * da, nb = b + t * db;
            if (na > 0.0 && nb > 0.0 && mean_ll(na, nb) >= base - noise) {
                a = na;
                b = nb;
                break;
            }
        }
    }
    r.theta_hat = {a, b};
    r.loglik = n * mean_ll(a, b);
    r.converged = converged;
    r.status = converged ? FitStatus::ok : FitStatus::not_converged;
    set_criteria(r);
    attach_diagnostics(r, data);
    return r;
}

FitReport fit_kumaraswamy(const DataSeries& data) {
    if (data.size() < 3) {
        throw std::invalid_argument(
            fmt::format("fit_kumaraswamy: need at least 3 observations, got {}", data.size()));
    }
    if (!has_spread(data)) return ill_posed(Model::Kumaraswamy, {"a", "b"}, 2, data);

    const auto& v = data.values();
    const double n = static_cast<double>(v.size());
    std::vector<double> log_w;
    double sum_log_w = 0.0;
    for (double w : v) {
        log_w.push_back(std::log(w));
        sum_log_w += log_w.back();
    }
    // Σ log(1 − w^a)
    const auto sum_log1m = [&](double a) {
        double s = 0.0;
        for (double lw : log_w) s += std::log1p(-std::exp(a * lw));
        return s;
    };
    const auto b_hat = [&](double a) { return -n / sum_log1m(a); };
    const auto profile = [&](double a) {
        const double sl = sum_log1m(a);
        const double b = -n / sl;
        return n * std::log(a) + n * std::log(b) + (a - 1.0) * sum_log_w + (b - 1.0) * sl;
    };

    // ∂ℓ/∂a at b = b̂(a); by the envelope theorem this is also the profile slope.
    const auto score_a = [&](double a) {
        const double b = b_hat(a);
        double d = n / a + sum_log_w;
        for (double lw : log_w) d += (b - 1.0) * std::exp(a * lw) * lw / std::expm1(a * lw);
        return d;
    };

    // Coarse scan in log a, then a root of the profile slope inside the
    // bracket around the best grid point (golden section if it is not one).
    double best_t = 0.0, best_ll = kNegInf;
    for (int i = -60; i <= 60; ++i) {
        const double t = 0.1 * i;
        const double ll = profile(std::exp(t));
        if (ll > best_ll) {
            best_ll = ll;
            best_t = t;
        }
    }
    double t_hat = best_t;
    int iterations = 0;
    bool located = false;
    const double lo = best_t - 0.1, hi = best_t + 0.1;
    const auto slope_t = [&](double t) { return score_a(std::exp(t)); };
    if (slope_t(lo) > 0.0 && slope_t(hi) < 0.0) {
        std::uintmax_t max_iter = 200;
        const auto [x0, x1] = boost::math::tools::toms748_solve(
            slope_t, lo, hi, boost::math::tools::eps_tolerance<double>(52), max_iter);
        t_hat = 0.5 * (x0 + x1);
        iterations = static_cast<int>(max_iter);
        located = max_iter < 200;
    } else {
        const opt::OptResult g = opt::golden_section([&](double t) { return -profile(std::exp(t)); }, lo, hi, 1e-13);
        t_hat = g.x[0];
        iterations = g.iterations;
        located = g.converged;
    }
    const double a = std::exp(t_hat);
    const double b = b_hat(a);
    // a·∂ℓ/∂a against the size of its leading term n.
    const double scaled_score = std::abs(a * score_a(a)) / n;

    FitReport r;
    r.model = Model::Kumaraswamy;
    r.param_names = {"a", "b"};
    r.k_params = 2;
    r.n = v.size();
    r.theta_hat = {a, b};
    r.loglik = profile(a);
    r.iterations = iterations;
    r.converged = located && scaled_score < 1e-8 && best_t > -6.0 && best_t < 6.0;
    r.status = r.converged ? FitStatus::ok : FitStatus::not_converged;
    set_criteria(r);
    attach_diagnostics(r, data);
    return r;
}

// --- goodness of fit ----------------------------------------------------------------

double kolmogorov_sf(double lambda) noexcept {
    if (!(lambda > 0.0)) return 1.0;
    if (lambda < 1.18) {
        // P(K ≤ λ) = √(2π)/λ Σ exp(−(2k−1)²π²/(8λ²)), fast for small λ.
        const double c = std::numbers::pi * std::numbers::pi / (8.0 * lambda * lambda);
        double sum = 0.0;
        for (int k = 1; k < 100; ++k) {
            const double j = 2.0 * k - 1.0;
            const double term = std::exp(-j * j * c);
            sum += term;
            if (term < 1e-17 * sum) break;
        }
        return std::clamp(1.0 - std::sqrt(2.0 * std::numbers::pi) / lambda * sum, 0.0, 1.0);
    }
    double sum = 0.0;
    for (int k = 1; k < 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 ? 1.0 : -1.0) * term;
        if (term < 1e-17) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test(const std::vector<double>& values, const Distribution& dist) {
    if (values.empty()) throw std::invalid_argument("ks_test: no observations");
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double F = dist.cdf(sorted[i]);
        d = std::max({d, static_cast<double>(i + 1) / n - F, F - static_cast<double>(i) / n});
    }
    return {d, kolmogorov_sf(std::sqrt(n) * d)};
}

KsResult ks_test(const DataSeries& data, const Distribution& dist) { return ks_test(data.values(), dist); }

std::vector<double> residuals(const DataSeries& data, const Distribution& dist) {
    const auto& v = data.values();
    const std::size_t n = v.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> rank(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) rank[idx[k]] = avg;
        i = j + 1;
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = rank[i] / static_cast<double>(n) - dist.cdf(v[i]);
    return out;
}

// --- model comparison -------------------------------------------------------------------

std::vector<RankedModel> model_select(const std::vector<FitReport>& reports, std::optional<int> k_override) {
    if (reports.size() < 2) throw std::invalid_argument("model_select: need at least two reports");
    const std::size_t n = reports.front().n;
    std::vector<RankedModel> out;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const FitReport& r = reports[i];
        if (r.n != n) {
            throw std::invalid_argument(
                fmt::format("model_select: report {} was fitted to n = {}, report 0 to n = {}", i, r.n, n));
        }
        if (r.status == FitStatus::ill_posed) {
            throw std::invalid_argument(fmt::format("model_select: report {} is ill-posed", i));
        }
        RankedModel m;
        m.report_index = i;
        m.model = r.model;
        m.k_params = k_override.value_or(r.k_params);
        m.loglik = r.loglik;
        m.aic = -2.0 * r.loglik + 2.0 * m.k_params;
        m.bic = -2.0 * r.loglik + m.k_params * std::log(static_cast<double>(n));
        out.push_back(m);
    }
    std::stable_sort(out.begin(), out.end(), [](const RankedModel& a, const RankedModel& b) {
        if (a.aic != b.aic) return a.aic < b.aic;
        return a.bic < b.bic;
    });
    return out;
}

}  // namespace uf
