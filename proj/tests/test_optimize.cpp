#include "unifrechet/optimize.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace uf::opt;

namespace {

double rosenbrock(const Vec& x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
}

Vec rosenbrock_grad(const Vec& x) {
    return {-400.0 * x[0] * (x[1] - x[0] * x[0]) - 2.0 * (1.0 - x[0]), 200.0 * (x[1] - x[0] * x[0])};
}

}  // namespace

TEST(NelderMead, Rosenbrock) {
    const OptResult r = nelder_mead(rosenbrock, {-1.2, 1.0}, {.max_iterations = 5000});
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.x[0], 1.0, 1e-4);
    EXPECT_NEAR(r.x[1], 1.0, 1e-4);
    EXPECT_LT(r.f, 1e-8);
}

TEST(NelderMead, NonFiniteTreatedAsInfinite) {
    const auto f = [](const Vec& x) {
        if (x[0] <= 0.0) return std::numeric_limits<double>::quiet_NaN();
        return std::pow(std::log(x[0]) - 1.0, 2) + x[1] * x[1];
    };
    const OptResult r = nelder_mead(f, {0.2, 1.0});
    EXPECT_NEAR(r.x[0], std::exp(1.0), 1e-4);
    EXPECT_NEAR(r.x[1], 0.0, 1e-4);
}

TEST(NelderMead, ThreeDimensionalQuadratic) {
    const auto f = [](const Vec& x) {
        return std::pow(x[0] - 1, 2) + 10 * std::pow(x[1] + 2, 2) + 0.1 * std::pow(x[2] - 3, 2);
    };
    const OptResult r = nelder_mead(f, {0, 0, 0});
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.x[0], 1, 1e-4);
    EXPECT_NEAR(r.x[1], -2, 1e-4);
    EXPECT_NEAR(r.x[2], 3, 1e-3);
}

TEST(Bfgs, Rosenbrock) {
    const OptResult r = bfgs(rosenbrock, rosenbrock_grad, {-1.2, 1.0}, {.grad_tol = 1e-8, .max_iterations = 1000});
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.x[0], 1.0, 1e-6);
    EXPECT_NEAR(r.x[1], 1.0, 1e-6);
}

TEST(Bfgs, ReportsNonConvergence) {
    const OptResult r = bfgs(rosenbrock, rosenbrock_grad, {-1.2, 1.0}, {.max_iterations = 3});
    EXPECT_FALSE(r.converged);
    EXPECT_LE(r.iterations, 3);
}

TEST(GoldenSection, Parabola) {
    const OptResult r = golden_section([](double x) { return (x - 2.0) * (x - 2.0) + 1.0; }, -5.0, 7.0);
    // Comparing f values locates a quadratic minimum only to about √ε.
    EXPECT_NEAR(r.x[0], 2.0, 5e-8);
    EXPECT_NEAR(r.f, 1.0, 1e-15);
}

TEST(GoldenSection, MinimumAtEndpoint) {
    const OptResult r = golden_section([](double x) { return x; }, 1.0, 3.0);
    EXPECT_NEAR(r.x[0], 1.0, 1e-8);
}

TEST(GoldenSection, Cosine) {
    const OptResult r = golden_section([](double x) { return std::cos(x); }, 2.0, 4.0, 1e-12);
    EXPECT_NEAR(r.x[0], M_PI, 1e-7);
}
