#include "unifrechet/kernels.h"

#include "unifrechet/core.h"
#include "unifrechet/rng.h"
#include "unifrechet/sampling.h"

#include <omp.h>
#include <stdexcept>

namespace uf {

namespace {

void require_count(std::size_t n, const char* who) {
    if (n == 0) throw std::invalid_argument(std::string(who) + ": n must be at least 1");
}

int thread_count(int requested) { return requested > 0 ? requested : omp_get_max_threads(); }

}  // namespace

namespace kernels {

std::vector<double> uf_sample_serial(const UfParams& theta, std::size_t n, std::uint64_t seed) {
    require_count(n, "uf_sample");
    const CounterRng rng(seed);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = uf_quantile(rng.uniform(i), theta);
    return out;
}

std::vector<double> uf_sample_parallel(const UfParams& theta, std::size_t n, std::uint64_t seed,
                                       int threads) {
    require_count(n, "uf_sample");
    const CounterRng rng(seed);
    std::vector<double> out(n);
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) num_threads(thread_count(threads))
    for (std::int64_t i = 0; i < count; ++i) {
        out[i] = uf_quantile(rng.uniform(static_cast<std::uint64_t>(i)), theta);
    }
    return out;
}

BivSample biv_sample_serial(const BivParams& p, std::size_t n, std::uint64_t seed) {
    require_count(n, "biv_sample");
    BivSample s;
    s.pairs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const BivDraw d = biv_draw(p, seed, i);
        s.pairs[i] = d.value;
        s.redraws += d.redraws;
    }
    return s;
}

BivSample biv_sample_parallel(const BivParams& p, std::size_t n, std::uint64_t seed, int threads) {
    require_count(n, "biv_sample");
    BivSample s;
    s.pairs.resize(n);
    const auto count = static_cast<std::int64_t>(n);
    std::size_t redraws = 0;
#pragma omp parallel for schedule(static) num_threads(thread_count(threads)) reduction(+ : redraws)
    for (std::int64_t i = 0; i < count; ++i) {
        const BivDraw d = biv_draw(p, seed, static_cast<std::uint64_t>(i));
        s.pairs[i] = d.value;
        redraws += d.redraws;
    }
    s.redraws = redraws;
    return s;
}

}  // namespace kernels

std::vector<double> uf_sample(const UfParams& theta, std::size_t n, std::uint64_t seed) {
    return kernels::uf_sample_parallel(theta, n, seed);
}

}  // namespace uf
