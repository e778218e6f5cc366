#include "unifrechet/descriptive.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace uf {

double sorted_quantile(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("sorted_quantile: empty sample");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sorted_quantile: p must lie in [0,1]");
    const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

Descriptive describe(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("describe: empty sample");
    std::vector<double> s(values.begin(), values.end());
    std::sort(s.begin(), s.end());

    Descriptive d;
    d.n = s.size();
    const double n = static_cast<double>(d.n);
    double sum = 0.0;
    for (double x : s) sum += x;
    d.mean = sum / n;
    d.min = s.front();
    d.max = s.back();
    d.median = sorted_quantile(s, 0.5);
    d.q1 = sorted_quantile(s, 0.25);
    d.q3 = sorted_quantile(s, 0.75);

    if (d.n < 2) {
        d.sd = d.skewness = d.kurtosis = std::numeric_limits<double>::quiet_NaN();
        return d;
    }
    if (d.min == d.max) {
        // Summation would leave a rounding residue in the mean.
        d.mean = d.min;
        d.sd = 0.0;
        d.skewness = d.kurtosis = std::numeric_limits<double>::quiet_NaN();
        return d;
    }
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : s) {
        const double e = x - d.mean;
        m2 += e * e;
        m3 += e * e * e;
        m4 += e * e * e * e;
    }
    d.sd = std::sqrt(m2 / (n - 1.0));
    m2 /= n;
    m3 /= n;
    m4 /= n;
    const double shrink = (n - 1.0) / n;
    d.skewness = m3 / std::pow(m2, 1.5) * std::pow(shrink, 1.5);
    d.kurtosis = m4 / (m2 * m2) * shrink * shrink - 3.0;
    return d;
}

}  // namespace uf
