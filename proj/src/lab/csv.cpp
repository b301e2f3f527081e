#include "serieslab/lab/csv.hpp"

#include <charconv>
#include <cmath>

#include "serieslab/errors.hpp"

namespace serieslab::lab {

std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

std::string CsvTable::render() const
{
    std::string out;
    for (const auto& [key, value] : meta)
        out += "# " + key + ": " + value + "\n";
    for (std::size_t i = 0; i < header.size(); ++i)
        out += (i ? "," : "") + header[i];
    out += '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw InvalidArgument("csv row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace serieslab::lab
