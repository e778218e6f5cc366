#include "unifrechet/datasets.h"

#include <array>
#include <vector>

namespace uf {

namespace {

constexpr std::array<double, 37> kUefa = {
    0.289, 0.700, 0.211, 0.733, 0.444, 0.544, 0.089, 0.767, 0.433, 0.911, 0.800, 0.733, 0.278,
    0.456, 0.178, 0.200, 0.244, 0.467, 0.022, 0.400, 0.378, 0.589, 0.600, 0.567, 0.844, 0.711,
    0.289, 0.178, 0.489, 0.278, 0.611, 0.544, 0.267, 0.489, 0.467, 0.300, 0.311,
};

}  // namespace

std::span<const double> uefa_values() noexcept { return kUefa; }

DataSeries uefa_dataset() {
    return DataSeries(std::vector<double>(kUefa.begin(), kUefa.end()), "uefa_medium_pass_completion",
                      "bundled:uefa");
}

std::optional<DataSeries> bundled_dataset(std::string_view name) {
    if (name == "bundled:uefa") return uefa_dataset();
    return std::nullopt;
}

}  // namespace uf
