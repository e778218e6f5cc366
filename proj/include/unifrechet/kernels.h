#pragma once

// Data-parallel sampling kernels. Each comes as a serial reference and an
// OpenMP variant; the two must agree bit for bit, which the tests check
// and the benchmark target times.

#include "unifrechet/bivariate.h"
#include "unifrechet/params.h"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace uf::kernels {

/// threads ≤ 0 uses the OpenMP default.
std::vector<double> uf_sample_serial(const UfParams& theta, std::size_t n, std::uint64_t seed);
std::vector<double> uf_sample_parallel(const UfParams& theta, std::size_t n, std::uint64_t seed,
                                       int threads = 0);

BivSample biv_sample_serial(const BivParams& p, std::size_t n, std::uint64_t seed);
BivSample biv_sample_parallel(const BivParams& p, std::size_t n, std::uint64_t seed, int threads = 0);

}  // namespace uf::kernels
