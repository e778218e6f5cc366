#pragma once

// Small unconstrained minimizers used by the fitting code.

#include <functional>
#include <vector>

namespace uf::opt {

using Vec = std::vector<double>;
using Objective = std::function<double(const Vec&)>;
using Gradient = std::function<Vec(const Vec&)>;

struct OptResult {
    Vec x;
    double f = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct NelderMeadOptions {
    double initial_step = 0.5;
    /// Stop once max |fᵢ − f_best| ≤ f_tol·(|f_best| + f_tol) and the simplex
    /// diameter is below x_tol.
    double f_tol = 1e-10;
    double x_tol = 1e-8;
    int max_iterations = 2000;
};

/// Adaptive Nelder–Mead (dimension-dependent coefficients). Non-finite
/// objective values are treated as +∞.
OptResult nelder_mead(const Objective& f, Vec x0, const NelderMeadOptions& opts = {});

struct BfgsOptions {
    double grad_tol = 1e-6;
    /// Relative change of f between the last two iterates.
    double rel_f_tol = 1e-10;
    int max_iterations = 500;
};

/// BFGS with a backtracking Armijo line search. Converged when the gradient
/// ∞-norm is below grad_tol and the last relative change in f is below
/// rel_f_tol.
OptResult bfgs(const Objective& f, const Gradient& grad, Vec x0, const BfgsOptions& opts = {});

/// Golden-section minimization of a unimodal f on [a, b].
OptResult golden_section(const std::function<double(double)>& f, double a, double b, double x_tol = 1e-10);

}  // namespace uf::opt
