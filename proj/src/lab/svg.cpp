#include "serieslab/lab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace serieslab::lab {

namespace {

struct Range {
    double lo;
    double hi;
};

Range padded(double lo, double hi)
{
    if (!(lo < hi)) {
        const double pad = lo == 0.0 ? 1.0 : 0.1 * std::abs(lo);
        return {lo - pad, hi + pad};
    }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

Range auto_range(const std::vector<PlotSeries>& all, std::size_t axis)
{
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& s : all) {
        if (!s.fit)
            continue;
        for (const auto& p : s.points)
            if (std::isfinite(p[0]) && std::isfinite(p[1])) {
                lo = std::min(lo, p[axis]);
                hi = std::max(hi, p[axis]);
            }
    }
    if (!std::isfinite(lo))
        return {0.0, 1.0};
    return padded(lo, hi);
}

std::vector<double> ticks(Range r)
{
    const double span = r.hi - r.lo;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (m * mag >= raw) {
            step = m * mag;
            break;
        }
    std::vector<double> out;
    for (double v = std::ceil(r.lo / step) * step; v <= r.hi + 1e-9 * step; v += step)
        out.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
    return out;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

// Liang-Barsky: clip segment p->q to the box, false when nothing is left.
bool clip(Point& p, Point& q, Range xr, Range yr)
{
    double t0 = 0.0, t1 = 1.0;
    const double dx = q[0] - p[0], dy = q[1] - p[1];
    const double pk[] = {-dx, dx, -dy, dy};
    const double qk[] = {p[0] - xr.lo, xr.hi - p[0], p[1] - yr.lo, yr.hi - p[1]};
    for (int i = 0; i < 4; ++i) {
        if (pk[i] == 0.0) {
            if (qk[i] < 0.0)
                return false;
            continue;
        }
        const double t = qk[i] / pk[i];
        if (pk[i] < 0.0)
            t0 = std::max(t0, t);
        else
            t1 = std::min(t1, t);
        if (t0 > t1)
            return false;
    }
    const Point a = p;
    p = {a[0] + t0 * dx, a[1] + t0 * dy};
    q = {a[0] + t1 * dx, a[1] + t1 * dy};
    return true;
}

}  // namespace

std::string Plot::render(int width, int height) const
{
    const double left = 80, right = 20, top = 40, bottom = 60;
    const double pw = width - left - right;
    const double ph = height - top - bottom;
    const Range xr = x_range ? Range{x_range->first, x_range->second} : auto_range(series, 0);
    const Range yr = y_range ? Range{y_range->first, y_range->second} : auto_range(series, 1);
    auto px = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double y) { return top + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
        "font-family=\"sans-serif\" font-size=\"12\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
        width, height);
    out += fmt::format("<text x=\"{:.1f}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
                       left + pw / 2, escape(title));
    out += fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"none\" "
                       "stroke=\"black\"/>\n",
                       left, top, pw, ph);

    for (double v : ticks(xr)) {
        const double x = px(v);
        out += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"black\"/>"
                           "<text x=\"{0:.2f}\" y=\"{3:.2f}\" text-anchor=\"middle\">{4:g}</text>\n",
                           x, top + ph, top + ph + 5, top + ph + 18, v);
    }
    for (double v : ticks(yr)) {
        const double y = py(v);
        out += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"black\"/>"
                           "<text x=\"{3:.2f}\" y=\"{4:.2f}\" text-anchor=\"end\">{5:g}</text>\n",
                           left - 5, y, left, left - 8, y + 4, v);
    }
    out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n", left + pw / 2,
                       static_cast<double>(height) - 15, escape(x_label));
    out += fmt::format("<text x=\"18\" y=\"{0:.1f}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {0:.1f})\">"
                       "{1}</text>\n",
                       top + ph / 2, escape(y_label));

    for (const auto& s : series) {
        const std::string style = fmt::format("fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{}", s.color,
                                              s.dashed ? " stroke-dasharray=\"6 4\"" : "");
        std::string path;
        bool pen_down = false;
        Point last_end{};
        for (std::size_t i = 0; i + 1 < s.points.size(); ++i) {
            Point a = s.points[i], b = s.points[i + 1];
            const bool finite = std::isfinite(a[0]) && std::isfinite(a[1]) && std::isfinite(b[0]) &&
                                std::isfinite(b[1]);
            if (!finite || !clip(a, b, xr, yr)) {
                pen_down = false;
                continue;
            }
            if (!pen_down || a != last_end)
                path += fmt::format("M{:.2f} {:.2f}", px(a[0]), py(a[1]));
            path += fmt::format("L{:.2f} {:.2f}", px(b[0]), py(b[1]));
            pen_down = true;
            last_end = b;
        }
        if (!path.empty())
            out += fmt::format("<path d=\"{}\" {}/>\n", path, style);
    }

    double ly = top + 16;
    for (const auto& s : series) {
        const double lx = left + pw - 170;
        out += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"{}\" "
                           "stroke-width=\"2\"{}/><text x=\"{:.1f}\" y=\"{:.1f}\">{}</text>\n",
                           lx, ly - 4, lx + 28, ly - 4, s.color, s.dashed ? " stroke-dasharray=\"6 4\"" : "",
                           lx + 34, ly, escape(s.label));
        ly += 16;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace serieslab::lab
