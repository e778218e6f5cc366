#include "unifrechet/optimize.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace uf::opt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double safe(double v) { return std::isfinite(v) ? v : kInf; }

// NaN propagates, so a poisoned gradient never looks small.
double inf_norm(const Vec& v) {
    double m = 0.0;
    for (double x : v) {
        if (!(std::abs(x) <= m)) m = std::abs(x);
    }
    return m;
}

double dot(const Vec& a, const Vec& b) { return std::inner_product(a.begin(), a.end(), b.begin(), 0.0); }

}  // namespace

OptResult nelder_mead(const Objective& f, Vec x0, const NelderMeadOptions& opts) {
    const std::size_t n = x0.size();
    const double dn = static_cast<double>(n);
    // Gao & Han adaptive coefficients.
    const double reflect = 1.0;
    const double expand = 1.0 + 2.0 / dn;
    const double contract = 0.75 - 1.0 / (2.0 * dn);
    const double shrink = 1.0 - 1.0 / dn;

    std::vector<Vec> pts(n + 1, x0);
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += opts.initial_step;
    for (std::size_t i = 0; i <= n; ++i) fv[i] = safe(f(pts[i]));

    std::vector<std::size_t> order(n + 1);
    OptResult res;
    for (int it = 0; it < opts.max_iterations; ++it) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[n - 1];
        res.iterations = it;

        double diam = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t k = 0; k < n; ++k) diam = std::max(diam, std::abs(pts[i][k] - pts[best][k]));
        }
        const double spread = fv[worst] - fv[best];
        if (std::isfinite(fv[best]) && spread <= opts.f_tol * (std::abs(fv[best]) + opts.f_tol) &&
            diam <= opts.x_tol) {
            res.converged = true;
            break;
        }

        Vec centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k] / dn;
        }
        const auto along = [&](double t) {
            Vec x(n);
            for (std::size_t k = 0; k < n; ++k) x[k] = centroid[k] + t * (pts[worst][k] - centroid[k]);
            return x;
        };

        Vec xr = along(-reflect);
        const double fr = safe(f(xr));
        if (fr < fv[best]) {
            Vec xe = along(-reflect * expand);
            const double fe = safe(f(xe));
            if (fe < fr) {
                pts[worst] = std::move(xe);
                fv[worst] = fe;
            } else {
                pts[worst] = std::move(xr);
                fv[worst] = fr;
            }
            continue;
        }
        if (fr < fv[second]) {
            pts[worst] = std::move(xr);
            fv[worst] = fr;
            continue;
        }
        const bool outside = fr < fv[worst];
        Vec xc = along(outside ? -reflect * contract : contract);
        const double fc = safe(f(xc));
        if (fc < (outside ? fr : fv[worst])) {
            pts[worst] = std::move(xc);
            fv[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            for (std::size_t k = 0; k < n; ++k) pts[i][k] = pts[best][k] + shrink * (pts[i][k] - pts[best][k]);
            fv[i] = safe(f(pts[i]));
        }
    }
    const auto best = static_cast<std::size_t>(std::min_element(fv.begin(), fv.end()) - fv.begin());
    res.x = pts[best];
    res.f = fv[best];
    return res;
}

OptResult bfgs(const Objective& f, const Gradient& grad, Vec x, const BfgsOptions& opts) {
    const std::size_t n = x.size();
    std::vector<Vec> H(n, Vec(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) H[i][i] = 1.0;

    double fx = safe(f(x));
    Vec g = grad(x);
    double last_rel = kInf;
    bool scaled = false;
    bool fresh = true;
    double diag_scale = 1.0;
    OptResult res;

    for (int it = 0; it < opts.max_iterations; ++it) {
        res.iterations = it;
        if (!std::isfinite(fx) || !std::isfinite(inf_norm(g))) break;
        if (inf_norm(g) < opts.grad_tol && last_rel <= opts.rel_f_tol) {
            res.converged = true;
            break;
        }

        Vec d(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) d[i] -= H[i][k] * g[k];
        }
        double slope = dot(g, d);
        if (!(slope < 0.0)) {
            for (auto& row : H) std::fill(row.begin(), row.end(), 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                H[i][i] = 1.0;
                d[i] = -g[i];
            }
            slope = dot(g, d);
            if (!(slope < 0.0)) {
                // Zero gradient: stationary to working precision.
                res.converged = true;
                break;
            }
        }

        double t = 1.0;
        Vec xn(n);
        Vec gn;
        double fn = kInf;
        bool accepted = false;
        // Near the optimum the Armijo decrease drowns in the rounding error of
        // f. A step that keeps f within that error is then judged by the
        // directional derivative instead (approximate Wolfe conditions).
        const double noise = 1e-12 * std::max(1.0, std::abs(fx));
        for (int k = 0; k < 60; ++k) {
            for (std::size_t i = 0; i < n; ++i) xn[i] = x[i] + t * d[i];
            fn = safe(f(xn));
            if (fn <= fx + 1e-4 * t * slope) {
                accepted = true;
                break;
            }
            if (fn <= fx + noise) {
                gn = grad(xn);
                const double dphi = dot(gn, d);
                if (dphi >= 0.9 * slope && dphi <= -0.8 * slope) {
                    accepted = true;
                    break;
                }
                gn.clear();
            }
            t *= 0.5;
        }
        if (!accepted) {
            // No decrease along a descent direction: f is flat to rounding here.
            res.converged = inf_norm(g) < opts.grad_tol;
            break;
        }

        if (gn.empty()) gn = grad(xn);
        Vec s(n), y(n);
        bool moved = false;
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = xn[i] - x[i];
            y[i] = gn[i] - g[i];
            moved = moved || s[i] != 0.0;
        }
        if (!moved) {
            // The inverse-Hessian estimate has collapsed in some direction;
            // restart from a scaled identity once before giving up.
            if (fresh) {
                res.converged = inf_norm(g) < opts.grad_tol;
                break;
            }
            for (auto& row : H) std::fill(row.begin(), row.end(), 0.0);
            for (std::size_t i = 0; i < n; ++i) H[i][i] = diag_scale;
            fresh = true;
            continue;
        }
        fresh = false;
        last_rel = std::abs(fn - fx) / std::max(1.0, std::abs(fx));
        x = std::move(xn);
        fx = fn;
        g = std::move(gn);

        const double sy = dot(s, y);
        if (sy > 1e-14 * std::sqrt(dot(s, s) * dot(y, y))) {
            if (!scaled) {
                diag_scale = sy / dot(y, y);
                for (std::size_t i = 0; i < n; ++i) H[i][i] = diag_scale;
                scaled = true;
            }
            Vec Hy(n, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t k = 0; k < n; ++k) Hy[i] += H[i][k] * y[k];
            }
            const double yHy = dot(y, Hy);
            const double rho = 1.0 / sy;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t k = 0; k < n; ++k) {
                    H[i][k] += rho * ((1.0 + rho * yHy) * s[i] * s[k] - Hy[i] * s[k] - s[i] * Hy[k]);
                }
            }
        }
    }
    res.x = std::move(x);
    res.f = fx;
    return res;
}

OptResult golden_section(const std::function<double(double)>& f, double a, double b, double x_tol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = safe(f(c));
    double fd = safe(f(d));
    OptResult res;
    int it = 0;
    while (b - a > x_tol * std::max(1.0, std::abs(a) + std::abs(b)) && it < 500) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = safe(f(c));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = safe(f(d));
        }
        ++it;
    }
    const double x = fc < fd ? c : d;
    res.x = {x};
    res.f = std::min(fc, fd);
    res.iterations = it;
    res.converged = it < 500;
    return res;
}

}  // namespace uf::opt
