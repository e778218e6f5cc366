#pragma once

#include "unifrechet/inference.h"

#include <optional>
#include <span>
#include <string_view>

namespace uf {

/// Medium pass completion proportion (passes of 14–18 m) of the 37 teams in
/// the UEFA Champions League, seasons 2004/05 and 2005/06, three decimals.
std::span<const double> uefa_values() noexcept;
DataSeries uefa_dataset();

/// Resolves "bundled:<name>"; empty for unknown names.
std::optional<DataSeries> bundled_dataset(std::string_view name);

}  // namespace uf
