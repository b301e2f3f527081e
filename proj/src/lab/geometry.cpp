#include "serieslab/lab/geometry.hpp"

#include <cmath>

namespace serieslab::lab {

namespace {

double orient(const Point& a, const Point& b, const Point& c)
{
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

}  // namespace

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d)
{
    const double d1 = orient(c, d, a);
    const double d2 = orient(c, d, b);
    const double d3 = orient(a, b, c);
    const double d4 = orient(a, b, d);
    // Strict sign changes only: touching or collinear overlap is not a crossing.
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

std::size_t count_self_intersections(std::span<const Point> polyline, bool closed)
{
    const std::size_t n = polyline.size();
    if (n < 4)
        return 0;
    const std::size_t segments = closed ? n : n - 1;
    auto finite = [&](std::size_t i) {
        const auto& p = polyline[i];
        return std::isfinite(p[0]) && std::isfinite(p[1]);
    };
    std::size_t count = 0;
    for (std::size_t i = 0; i < segments; ++i) {
        const std::size_t i2 = (i + 1) % n;
        if (!finite(i) || !finite(i2))
            continue;
        for (std::size_t j = i + 2; j < segments; ++j) {
            const std::size_t j2 = (j + 1) % n;
            if (closed && j2 == i)
                continue;
            if (!finite(j) || !finite(j2))
                continue;
            if (segments_cross(polyline[i], polyline[i2], polyline[j], polyline[j2]))
                ++count;
        }
    }
    return count;
}

}  // namespace serieslab::lab
