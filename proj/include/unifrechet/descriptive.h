#pragma once

#include <cstddef>
#include <span>

namespace uf {

struct Descriptive {
    std::size_t n = 0;
    double mean = 0.0;
    double median = 0.0;
    double sd = 0.0;  // n − 1 denominator
    double min = 0.0;
    double max = 0.0;
    double q1 = 0.0;  // type-7 (linear interpolation) quartiles
    double q3 = 0.0;
    double skewness = 0.0;  // b₁ = m₃/s³
    double kurtosis = 0.0;  // excess, b₂ = m₄/s⁴ − 3
};

/// Summary of a nonempty sample; throws std::invalid_argument when empty.
/// sd, skewness and kurtosis are NaN for n = 1; for constant data sd is 0
/// and the shape measures are NaN.
Descriptive describe(std::span<const double> values);

/// Type-7 sample quantile of already sorted data, p in [0,1].
double sorted_quantile(std::span<const double> sorted, double p);

}  // namespace uf
