#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ghostslopes::detail {

/// Monotone-chain lower hull over points with strictly increasing xs. Returns the
/// positions of strict vertices; collinear interior points are dropped.
std::vector<std::size_t> lower_hull_positions(std::span<const std::int64_t> xs, std::span<const std::int64_t> ys);

}  // namespace ghostslopes::detail
