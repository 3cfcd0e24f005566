#include "ghostslopes/detail/hull.hpp"

#include <stdexcept>

namespace ghostslopes::detail {

std::vector<std::size_t> lower_hull_positions(std::span<const std::int64_t> xs, std::span<const std::int64_t> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("lower_hull_positions: size mismatch");
  std::vector<std::size_t> hull;
  hull.reserve(xs.size());
  auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
    const __int128 ax = xs[a] - xs[o], ay = ys[a] - ys[o];
    const __int128 bx = xs[b] - xs[o], by = ys[b] - ys[o];
    return ax * by - ay * bx;
  };
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0 && xs[i] <= xs[i - 1]) throw std::invalid_argument("lower_hull_positions: x not increasing");
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), i) <= 0) hull.pop_back();
    hull.push_back(i);
  }
  return hull;
}

}  // namespace ghostslopes::detail
