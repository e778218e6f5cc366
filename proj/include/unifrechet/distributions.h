#pragma once

// Uniform handles over the fitted models so that goodness-of-fit and
// residual code never needs to know which family it is looking at.

#include "unifrechet/params.h"

#include <functional>
#include <string>
#include <vector>

namespace uf {

struct Distribution {
    std::string name;
    int k_params = 0;
    std::vector<double> params;
    std::function<double(double)> pdf;
    std::function<double(double)> cdf;
};

Distribution uf_distribution(const UfParams& theta);

/// Beta(a, b): density w^{a−1}(1−w)^{b−1}/B(a, b).
Distribution beta_distribution(double a, double b);
double beta_log_pdf(double w, double a, double b);

/// Kumaraswamy(a, b): CDF 1 − (1 − w^a)^b.
Distribution kumaraswamy_distribution(double a, double b);
double kumaraswamy_log_pdf(double w, double a, double b);
double kumaraswamy_cdf(double w, double a, double b) noexcept;

}  // namespace uf
