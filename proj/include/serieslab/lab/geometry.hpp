#pragma once

#include <array>
#include <cstddef>
#include <span>

namespace serieslab::lab {

using Point = std::array<double, 2>;

/// Proper crossings between non-adjacent segments of a polyline. With
/// `closed`, the last point joins the first and that pair counts as adjacent.
/// Brute force; fine for the few thousand points plotted here.
std::size_t count_self_intersections(std::span<const Point> polyline, bool closed = false);

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace serieslab::lab
