#include "unifrechet/bivariate.h"
#include "unifrechet/core.h"
#include "unifrechet/rng.h"

#include "oracles.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

using namespace uf;

namespace {

// exp{−u⁻¹ − v⁻¹ + ρ/(u+v)} straight from the definition, long double.
long double biv_cdf_direct(long double x1, long double x2, long double s1, long double s2, long double a,
                           long double rho) {
    const long double u = std::pow(x1 / s1, a);
    const long double v = std::pow(x2 / s2, a);
    return std::exp(-1 / u - 1 / v + rho / (u + v));
}

std::vector<double> first(const std::vector<Pair>& v) {
    std::vector<double> out;
    for (const auto& p : v) out.push_back(p.first);
    return out;
}

std::vector<double> second(const std::vector<Pair>& v) {
    std::vector<double> out;
    for (const auto& p : v) out.push_back(p.second);
    return out;
}

double pearson(const std::vector<Pair>& v) {
    const double n = static_cast<double>(v.size());
    double m1 = 0, m2 = 0;
    for (const auto& [a, b] : v) m1 += a, m2 += b;
    m1 /= n;
    m2 /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (const auto& [a, b] : v) {
        sxy += (a - m1) * (b - m2);
        sxx += (a - m1) * (a - m1);
        syy += (b - m2) * (b - m2);
    }
    return sxy / std::sqrt(sxx * syy);
}

const double kKs1pct = 1.63;

}  // namespace

TEST(BivCdf, Examples) {
    EXPECT_NEAR(biv_cdf(1, 1, BivParams(1, 1, 2, 0)), std::exp(-2.0), 1e-15);
    EXPECT_NEAR(biv_cdf(1, 1, BivParams(1, 1, 2, 0)), 0.135335, 1e-6);
    EXPECT_NEAR(biv_cdf(1, 1e6, BivParams(1, 1, 2, 0.5)), std::exp(-1.0), 1e-6);
    const double ref = static_cast<double>(biv_cdf_direct(1, 1, 1, 1, 2, 1));
    EXPECT_NEAR(biv_cdf(1, 1, BivParams(1, 1, 2, 1)), ref, 1e-15);
    EXPECT_NEAR(biv_cdf(1, 1, BivParams(1, 1, 2, 1)), 0.223130, 1e-6);
}

TEST(BivCdf, MatchesExtendedPrecision) {
    for (double rho : {0.0, 0.3, 0.9, 1.0}) {
        const BivParams p(1.5, 0.7, 1.3, rho);
        for (double x1 : {0.2, 1.0, 4.0})
            for (double x2 : {0.1, 0.9, 7.0}) {
                const double ref = static_cast<double>(biv_cdf_direct(x1, x2, 1.5, 0.7, 1.3, rho));
                EXPECT_NEAR(biv_cdf(x1, x2, p), ref, 1e-14 * std::max(ref, 1e-300));
            }
    }
}

TEST(BivCdf, ZeroAndLimits) {
    const BivParams p(1, 2, 1.5, 0.4);
    EXPECT_EQ(biv_cdf(0, 1, p), 0.0);
    EXPECT_EQ(biv_cdf(1, 0, p), 0.0);
    EXPECT_EQ(biv_cdf(-1, 1, p), 0.0);
    const double inf = std::numeric_limits<double>::infinity();
    EXPECT_NEAR(biv_cdf(inf, inf, p), 1.0, 1e-15);
    EXPECT_NEAR(biv_cdf(1.3, inf, p), frechet_cdf(1.3, FrechetParams(0, 1, 1.5)), 1e-15);
}

TEST(BivCdf, Margins) {
    const BivParams p(1.2, 0.6, 2.5, 0.8);
    for (double x : {0.3, 0.8, 1.5, 4.0}) {
        EXPECT_NEAR(biv_cdf(x, 1e8, p), frechet_cdf(x, FrechetParams(0, 1.2, 2.5)), 1e-12) << x;
        EXPECT_NEAR(biv_cdf(1e8, x, p), frechet_cdf(x, FrechetParams(0, 0.6, 2.5)), 1e-12) << x;
    }
}

TEST(BivCdf, TwoIncreasing) {
    const CounterRng rng(7);
    std::uint64_t k = 0;
    for (double rho : {0.0, 0.5, 1.0}) {
        const BivParams p(1, 1.5, 1.7, rho);
        for (int i = 0; i < 500; ++i) {
            const auto draw = [&] { return std::exp(4.0 * (rng.uniform(k++) - 0.5)); };
            double a1 = draw(), b1 = draw(), a2 = draw(), b2 = draw();
            if (a1 > b1) std::swap(a1, b1);
            if (a2 > b2) std::swap(a2, b2);
            const double mass = biv_cdf(b1, b2, p) - biv_cdf(a1, b2, p) - biv_cdf(b1, a2, p) + biv_cdf(a1, a2, p);
            EXPECT_GE(mass, -1e-15);
        }
    }
}

TEST(BivPdf, IndependenceFactorizes) {
    const BivParams p(1.3, 0.8, 2.0, 0.0);
    const FrechetParams m1(0, 1.3, 2.0), m2(0, 0.8, 2.0);
    for (double x1 : {0.4, 1.0, 3.0})
        for (double x2 : {0.2, 0.9, 5.0}) {
            const double ref = frechet_pdf(x1, m1) * frechet_pdf(x2, m2);
            EXPECT_NEAR(biv_pdf(x1, x2, p), ref, 1e-12);
        }
}

TEST(BivPdf, CrossDifferenceOfCdf) {
    const auto check = [](double x1, double x2, const BivParams& p, double h, double rel) {
        const double fd = (biv_cdf(x1 + h, x2 + h, p) - biv_cdf(x1 + h, x2 - h, p) - biv_cdf(x1 - h, x2 + h, p) +
                           biv_cdf(x1 - h, x2 - h, p)) /
                          (4 * h * h);
        EXPECT_NEAR(biv_pdf(x1, x2, p), fd, rel * std::abs(fd)) << x1 << "," << x2;
    };
    check(1.3, 0.7, BivParams(1, 1, 2, 0.9), 1e-4, 1e-4);
    for (double rho : {0.0, 0.4, 1.0})
        for (double x1 : {0.6, 1.1, 2.5})
            for (double x2 : {0.5, 1.4}) check(x1, x2, BivParams(0.9, 1.2, 1.6, rho), 1e-3, 1e-4);
}

// The box [0,20]² carries F(20,20) = exp(−0.004375) ≈ 0.99564 of the mass at
// α = 2, so the full quadrant is integrated (in log coordinates) for the ≈ 1 check.
TEST(BivPdf, IntegratesToOne) {
    const BivParams p(1, 1, 2, 0.5);
    // Below e^−2.5 the mass is under exp(−e⁵); starting there keeps the
    // integrand out of the subnormal range.
    const auto box = [&](double log_hi) {
        return oracle::integrate(
            [&](double a) {
                return oracle::integrate(
                    [&](double b) {
                        const double x1 = std::exp(a), x2 = std::exp(b);
                        return biv_pdf(x1, x2, p) * x1 * x2;
                    },
                    -2.5, log_hi, 1e-10);
            },
            -2.5, log_hi, 1e-10);
    };
    EXPECT_NEAR(box(std::log(20.0)), biv_cdf(20, 20, p), 1e-9);
    const double quadrant = box(12.0);
    EXPECT_GE(quadrant, 0.999);
    EXPECT_NEAR(quadrant, 1.0, 1e-8);
}

TEST(BivPdf, NonNegativeAndDomain) {
    for (double rho : {0.0, 0.5, 1.0}) {
        const BivParams p(1, 1, 0.7, rho);
        for (double x1 : {1e-3, 0.1, 1.0, 30.0, 1e4})
            for (double x2 : {1e-3, 0.1, 1.0, 30.0, 1e4}) EXPECT_GE(biv_pdf(x1, x2, p), 0.0);
    }
    EXPECT_THROW(biv_pdf(0, 1, BivParams(1, 1, 1, 0)), std::domain_error);
    EXPECT_THROW(biv_pdf(1, -1, BivParams(1, 1, 1, 0)), std::domain_error);
}

TEST(BivConditional, MatchesPartialOverMarginal) {
    for (double rho : {0.0, 0.6, 1.0}) {
        const BivParams p(1.4, 0.9, 1.8, rho);
        const FrechetParams m1(0, 1.4, 1.8);
        for (double x1 : {0.5, 1.2, 3.0})
            for (double x2 : {0.3, 0.9, 2.5}) {
                const double d = oracle::derivative([&](double t) { return biv_cdf(t, x2, p); }, x1);
                EXPECT_NEAR(biv_conditional_cdf(x2, x1, p), d / frechet_pdf(x1, m1), 1e-9) << rho;
            }
    }
}

TEST(BivConditional, IsACdfInX2) {
    const BivParams p(1, 1, 1.2, 0.95);
    for (double x1 : {0.1, 1.0, 10.0}) {
        double prev = 0.0;
        for (double x2 = 0.01; x2 < 1e4; x2 *= 1.5) {
            const double c = biv_conditional_cdf(x2, x1, p);
            EXPECT_GE(c, prev - 1e-15);
            prev = c;
        }
        EXPECT_NEAR(biv_conditional_cdf(1e9, x1, p), 1.0, 1e-6);
        EXPECT_LT(biv_conditional_cdf(1e-3, x1, p), 1e-6);
    }
}

TEST(BivSample, IndependentMarginsPassKs) {
    const std::size_t n = 100000;
    const BivParams p(1.5, 0.5, 2.0, 0.0);
    const BivSample s = biv_sample(p, n, 11);
    ASSERT_EQ(s.pairs.size(), n);
    const double crit = kKs1pct / std::sqrt(static_cast<double>(n));
    EXPECT_LT(oracle::ks_distance(first(s.pairs), [](double x) { return frechet_cdf(x, FrechetParams(0, 1.5, 2)); }),
              crit);
    EXPECT_LT(oracle::ks_distance(second(s.pairs), [](double x) { return frechet_cdf(x, FrechetParams(0, 0.5, 2)); }),
              crit);
}

TEST(BivSample, DependentMarginsPassKs) {
    const std::size_t n = 100000;
    const BivParams p(1, 2, 1.1, 0.9);
    const BivSample s = biv_sample(p, n, 12);
    const double crit = kKs1pct / std::sqrt(static_cast<double>(n));
    EXPECT_LT(oracle::ks_distance(first(s.pairs), [](double x) { return frechet_cdf(x, FrechetParams(0, 1, 1.1)); }),
              crit);
    EXPECT_LT(oracle::ks_distance(second(s.pairs), [](double x) { return frechet_cdf(x, FrechetParams(0, 2, 1.1)); }),
              crit);
}

// 1 − F_W(1/2) is the probability that X₂ < X₁.
TEST(BivSample, OrderingProbability) {
    const std::size_t n = 100000;
    const BivParams p(2, 1, 1, 0);
    const BivSample s = biv_sample(p, n, 13);
    const double gt = static_cast<double>(
                          std::count_if(s.pairs.begin(), s.pairs.end(), [](const Pair& q) { return q.first > q.second; })) /
                      static_cast<double>(n);
    EXPECT_NEAR(gt, 2.0 / 3.0, 0.01);
    EXPECT_NEAR(1.0 - gt, 1.0 / 3.0, 0.01);
    EXPECT_NEAR(gt, stress_strength(p.ratio_params()), 0.01);
}

TEST(BivSample, IndependentCorrelationNearZero) {
    const BivSample s = biv_sample(BivParams(1, 1, 3, 0), 100000, 14);
    EXPECT_NEAR(pearson(s.pairs), 0.0, 0.02);
}

TEST(BivSample, AssociationRaisesCorrelation) {
    const double r0 = pearson(biv_sample(BivParams(1, 1, 5, 0), 100000, 15).pairs);
    const double r9 = pearson(biv_sample(BivParams(1, 1, 5, 0.9), 100000, 15).pairs);
    EXPECT_GT(r9, r0 + 0.2);
}

TEST(BivSample, JointEcdfMatchesCdf) {
    const std::size_t n = 100000;
    for (double rho : {0.0, 0.7, 1.0}) {
        const BivParams p(1, 1.5, 1.5, rho);
        const BivSample s = biv_sample(p, n, 16);
        const FrechetParams m1(0, 1, 1.5), m2(0, 1.5, 1.5);
        for (int i = 1; i <= 10; ++i)
            for (int j = 1; j <= 10; ++j) {
                const double a = frechet_quantile(i / 11.0, m1);
                const double b = frechet_quantile(j / 11.0, m2);
                const double emp = static_cast<double>(std::count_if(
                                       s.pairs.begin(), s.pairs.end(),
                                       [&](const Pair& q) { return q.first <= a && q.second <= b; })) /
                                   static_cast<double>(n);
                EXPECT_NEAR(emp, biv_cdf(a, b, p), 2.0 / std::sqrt(static_cast<double>(n))) << rho;
            }
    }
}

TEST(BivSample, DeterministicAndSeedSensitive) {
    const BivParams p(1, 1, 2, 0.5);
    const BivSample a = biv_sample(p, 1000, 99);
    const BivSample b = biv_sample(p, 1000, 99);
    const BivSample c = biv_sample(p, 1000, 100);
    EXPECT_EQ(a.pairs, b.pairs);
    EXPECT_NE(a.pairs, c.pairs);
    EXPECT_EQ(biv_draw(p, 99, 17).value, a.pairs[17]);
}

TEST(BivSample, HeavyTailsRedrawInsteadOfClamping) {
    const BivParams p(1, 1, 0.005, 0.5);
    const BivSample s = biv_sample(p, 20000, 21);
    EXPECT_GT(s.redraws, 0u);
    for (const auto& [x1, x2] : s.pairs) {
        ASSERT_TRUE(std::isfinite(x1) && std::isfinite(x2));
        ASSERT_GT(x1, 0.0);
        ASSERT_GT(x2, 0.0);
    }
}

TEST(BivSample, ExtremeAssociationStaysBracketed) {
    for (double alpha : {0.3, 1.0, 20.0}) {
        const BivSample s = biv_sample(BivParams(1e-3, 1e3, alpha, 1.0), 5000, 22);
        EXPECT_EQ(s.pairs.size(), 5000u);
    }
}

TEST(BivSample, ZeroSizeRejected) {
    EXPECT_THROW(biv_sample(BivParams(1, 1, 1, 0), 0, 1), std::invalid_argument);
}

TEST(RatioTransform, Examples) {
    const std::vector<Pair> v{{1, 1}, {3, 1}};
    const auto r = ratio_transform(v);
    EXPECT_EQ(r[0], 0.5);
    EXPECT_EQ(r[1], 0.75);
    const std::vector<Pair> bad{{1, 1}, {0, 2}};
    EXPECT_THROW(ratio_transform(bad), std::domain_error);
}

TEST(RatioTransform, RatioFollowsUf) {
    const std::size_t n = 100000;
    const double crit = kKs1pct / std::sqrt(static_cast<double>(n));
    const std::vector<BivParams> grid{{1, 2, 2, 0.7}, {1, 1, 0.5, 0.3}, {3, 1, 5, 1.0},
                                      {1, 1, 1, 0.0},  {0.4, 1, 1.5, 0.95}};
    for (const auto& p : grid) {
        const auto w = ratio_transform(biv_sample(p, n, 31).pairs);
        const UfParams theta = p.ratio_params();
        EXPECT_LT(oracle::ks_distance(w, [&](double x) { return uf_cdf(x, theta); }), crit) << to_string(theta);
    }
}

TEST(EstimateCov, IndependenceGivesZero) {
    const CovEstimate c = estimate_cov(BivParams(1, 1, 3, 0), 200000, 41);
    EXPECT_GT(c.std_error, 0.0);
    EXPECT_LT(std::abs(c.cov), 3 * c.std_error);
    EXPECT_EQ(c.n, 200000u);
}

TEST(EstimateCov, AssociationWithinBound) {
    const CovEstimate c = estimate_cov(BivParams(1, 1, 4, 0.9), 200000, 42);
    const double bound = std::tgamma(0.5) - std::pow(std::tgamma(0.75), 2);
    EXPECT_GT(c.cov, 3 * c.std_error);
    EXPECT_LE(std::abs(c.cov), bound + 3 * c.std_error);
}

TEST(EstimateCov, ReproducibleAndValidated) {
    const BivParams p(1, 2, 4, 0.5);
    EXPECT_EQ(estimate_cov(p, 20000, 5).cov, estimate_cov(p, 20000, 5).cov);
    EXPECT_THROW(estimate_cov(BivParams(1, 1, 2, 0.5), 20000, 5), std::domain_error);
    EXPECT_THROW(estimate_cov(p, 9999, 5), std::invalid_argument);
}
