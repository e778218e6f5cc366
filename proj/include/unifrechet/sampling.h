#pragma once

#include "unifrechet/params.h"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace uf {

/// n ≥ 1 i.i.d. UF(θ) draws by inversion: draw i is uf_quantile(Uᵢ, θ)
/// with Uᵢ value i of the counter stream keyed by `seed`. Identical
/// (θ, n, seed) give bit-identical output at any thread count.
std::vector<double> uf_sample(const UfParams& theta, std::size_t n, std::uint64_t seed);

}  // namespace uf
